#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ivdyn/map_model.hpp"

namespace ivdyn::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Rational in [0,1] with denominator den.
inline Rational grid_rational(long den) { return Rational(uniform(0, den), den); }

// Rational strictly inside (0,1) with a random denominator up to max_den.
inline Rational interior_rational(long max_den = 1000) {
  const long den = uniform(2, max_den);
  return Rational(uniform(1, den - 1), den);
}

// Random valid PL self-map of [0,1] with at most max_pieces pieces.
inline PLMap random_pl_map(int max_pieces = 8) {
  const int pieces = static_cast<int>(uniform(1, max_pieces));
  std::set<long> xs{0, 48};
  while (static_cast<int>(xs.size()) < pieces + 1) xs.insert(uniform(1, 47));
  std::vector<Breakpoint> pts;
  for (long x : xs) pts.push_back({Rational(x, 48), grid_rational(12)});
  return PLMap({Rational(0), Rational(1)}, pts);
}

inline std::vector<MapModel> corpus() {
  return {builtin("tent"), builtin("example-3-1"), builtin("example-3-2"), builtin("identity"),
          builtin("constant", Rational(1, 2))};
}

}  // namespace ivdyn::testing
