#pragma once

#include "ivdyn/hull.hpp"
#include "ivdyn/periodic.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

/// Devaney chaos decided along three routes: transitivity, strong
/// indecomposability, or indecomposability, each paired with periodic density.
/// The routes are equivalent in theory; a contradiction between two decided
/// routes marks the result inconsistent.
struct DevaneyResult {
  Verdict transitivity;
  Verdict strong;
  Verdict indecomposable;
  Verdict density;
  Verdict via_transitivity;
  Verdict via_strong;
  Verdict via_indecomposable;
  Verdict overall;
  bool consistent = true;
};

DevaneyResult combine_devaney(Verdict transitivity, Verdict strong, Verdict indecomposable, Verdict density);
DevaneyResult check_devaney(const MapModel& m, int k, int max_period, const Budget& budget = {});

}  // namespace ivdyn
