#pragma once

#include <cstddef>
#include <vector>

#include "ivdyn/interval_set.hpp"
#include "ivdyn/map_model.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

inline constexpr std::size_t kDefaultDenominatorBits = 4096;

/// x, f(x), ..., f^N(x), exact. `truncated` is set when a point's denominator
/// grew past the bit budget; the record then stops at that point.
struct OrbitRecord {
  Rational seed;
  std::vector<Rational> points;
  bool truncated = false;
};

OrbitRecord orbit(const MapModel& m, const Rational& x0, std::size_t steps,
                  std::size_t denominator_bits = kDefaultDenominatorBits);

/// Union of the width-2^-k cells visited by orbit points with index in
/// [burn_in, burn_in + tail_length).
struct OmegaEstimate {
  Rational seed;
  IntervalSet cover;
  int resolution = 0;
  std::size_t burn_in = 0;
  std::size_t tail_length = 0;
  bool truncated = false;
};

OmegaEstimate omega_estimate(const MapModel& m, const Rational& x0, std::size_t burn_in, std::size_t tail, int k,
                             std::size_t denominator_bits = kDefaultDenominatorBits);

/// Covers agree when each lies inside the other grown by one cell.
bool covers_agree(const IntervalSet& a, const IntervalSet& b, const ClosedInterval& domain, int k);

/// Seeds lo + (2i+1)/(2n) * (hi - lo), i = 0..n-1.
std::vector<Rational> grid_seeds(const ClosedInterval& domain, std::size_t n);

/// Empirical ω-limit agreement over a grid of seeds. Never certified.
Verdict weak_indecomposability_check(const MapModel& m, std::size_t sample_count, int k, std::size_t burn_in,
                                     std::size_t tail,
                                     std::size_t denominator_bits = kDefaultDenominatorBits);

}  // namespace ivdyn
