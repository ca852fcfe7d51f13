#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ivdyn/hull.hpp"
#include "ivdyn/map_model.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

/// A periodic point, or a segment every point of which is periodic.
/// f^least_period fixes every point of `location`, and no smaller power does.
struct PeriodicFinding {
  enum class Kind { point, segment };
  Kind kind = Kind::point;
  ClosedInterval location;
  int least_period = 1;

  friend bool operator==(const PeriodicFinding&, const PeriodicFinding&) = default;
};

/// Fixed points of one PL map, piece by piece. least_period is 1.
std::vector<PeriodicFinding> fixed_points_pl(const PLMap& m);

struct PeriodicSet {
  std::vector<PeriodicFinding> findings;
  int max_period = 0;
  /// Highest p for which every point of period <= p is listed.
  int highest_complete_period = 0;
  /// The findings are the whole periodic set, for every period.
  bool exact = false;
  std::string note;
};

PeriodicSet periodic_points(const MapModel& m, int max_period, const Budget& budget = {});

/// Closed-form proof that f(x) > x on (0,1) for the staircase map.
Verdict staircase_gap_check();
/// Sign scan of f(x) - x over the open domain. For PL maps this checks the
/// endpoints of every piece; for the staircase it runs the closed-form check.
Verdict gap_check(const MapModel& m);

Verdict periodic_density_check(const MapModel& m, int k, int max_period, const Budget& budget = {});

/// Visits of the orbit of z to a periodic-free interval J must be strictly
/// monotone. `certificate` must be a Holds gap check whose "periodic_free"
/// set has J inside its open interior.
Verdict ordering_oracle(const MapModel& m, const ClosedInterval& j, const Rational& z, const Verdict& certificate,
                        std::size_t steps = 1000);

}  // namespace ivdyn
