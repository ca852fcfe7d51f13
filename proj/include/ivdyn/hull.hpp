#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivdyn/interval_set.hpp"
#include "ivdyn/map_model.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

/// Forward hull U* = closure of the union of f^n(U), n >= 0.
///
/// When `converged`, `hull` is exactly U*: it contains the seed, is closed and
/// f-invariant, and one more step changes nothing. Otherwise `hull` is the
/// union reached so far, a subset of U*.
struct HullResult {
  IntervalSet seed;
  IntervalSet hull;
  std::size_t iterations = 0;
  bool converged = false;
  std::string stop_reason;
};

HullResult forward_hull(const MapModel& m, const IntervalSet& seed, const Budget& budget = {});

bool is_invariant(const MapModel& m, const IntervalSet& a);

/// Hulls of all 2^k cells of the domain. Hulls of coarser cells are unions of
/// finer ones, since (A ∪ B)* = A* ∪ B*.
class DyadicHullTable {
 public:
  DyadicHullTable(const MapModel& m, int k, const Budget& budget);

  int resolution() const noexcept { return k_; }
  std::size_t cell_count(int level) const { return std::size_t{1} << level; }
  ClosedInterval cell(int level, std::size_t index) const;
  HullResult hull(int level, std::size_t index) const;
  const HullResult& finest(std::size_t index) const { return finest_[index]; }
  const BudgetUsage& usage() const noexcept { return usage_; }

 private:
  ClosedInterval domain_;
  int k_;
  std::vector<HullResult> finest_;
  BudgetUsage usage_;
};

/// Intersection of all cell hulls at one resolution.
struct CoreSet {
  IntervalSet set;
  int resolution = 0;
  bool invariant_verified = false;
};

struct StrongIndecomposabilityResult {
  Verdict verdict;
  CoreSet core;
  /// levels[j-1] is the core at resolution j.
  std::vector<IntervalSet> levels;
};

struct CycleDecomposition {
  int n = 0;
  std::vector<ClosedInterval> intervals;
  CoreSet core;
};

struct DecompositionResult {
  Verdict verdict;
  std::optional<CycleDecomposition> decomposition;
};

Verdict check_transitivity(const MapModel& m, int k, const Budget& budget = {});
Verdict check_indecomposable(const MapModel& m, int k, const Budget& budget = {});
StrongIndecomposabilityResult check_strong_indecomposable(const MapModel& m, int k, const Budget& budget = {});
/// Requires a Holds strong-indecomposability verdict at k.
CoreSet extract_core(const MapModel& m, int k, const Budget& budget = {});
/// Transitivity of f restricted to an invariant set E.
Verdict check_transitive_on(const MapModel& m, const IntervalSet& e, int k, const Budget& budget = {});
DecompositionResult cycle_decomposition(const MapModel& m, int k, const Budget& budget = {});
/// Uniform expansion |slope| >= lambda > 1 on every piece.
Verdict sensitivity_sufficient(const MapModel& m);

/// Cells of the partition generated by the breakpoints and their preimages.
std::vector<ClosedInterval> preimage_partition(const PLMap& m);

// Independent re-checks of Fails witnesses, using only set/map operations.
bool refutes_transitivity(const MapModel& m, const IntervalSet& invariant_set);
bool refutes_indecomposability(const MapModel& m, const IntervalSet& a, const IntervalSet& b);

}  // namespace ivdyn
