#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivdyn/interval_set.hpp"
#include "ivdyn/map_model.hpp"

namespace ivdyn {

enum class Status { holds, fails, unknown };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Three-valued conjunction: any Fails wins, then any Unknown.
Status conjunction(Status a, Status b);

struct LabeledSet {
  std::string label;
  IntervalSet set;
};

/// Exact data backing a verdict. Everything here is re-checkable with the
/// exact set and map operations.
struct Witness {
  std::string description;
  std::vector<LabeledSet> sets;
  std::vector<std::pair<std::string, Rational>> values;

  const IntervalSet* find_set(const std::string& label) const;
  const Rational* find_value(const std::string& label) const;
};

/// Limits for the semi-decision procedures. Exhausting any of them turns a
/// verdict into Unknown (or flags a partial result), never an exception.
struct Budget {
  std::size_t hull_iterations = 512;
  std::size_t component_cap = kDefaultComponentCap;
  std::size_t piece_cap = kDefaultPieceCap;
  int family_depth = 20;
  std::size_t denominator_bits = 4096;
  std::size_t orbit_steps = 1000;
};

struct BudgetUsage {
  std::size_t hulls = 0;
  std::size_t hull_iterations = 0;
  std::size_t unconverged_hulls = 0;
  std::size_t max_components = 0;
  int highest_complete_period = 0;
  std::size_t orbit_steps = 0;

  void absorb(const BudgetUsage& other);
};

/// Holds at a resolution k means no counterexample exists among invariant
/// sets whose interiors contain a width-2^-k cell; Fails always carries an
/// exact witness; Unknown means a budget ran out.
struct Verdict {
  std::string property;
  Status status = Status::unknown;
  bool certified = false;
  bool empirical = false;
  std::optional<int> resolution;
  std::optional<Witness> witness;
  BudgetUsage budget;
  std::string note;
};

}  // namespace ivdyn
