#include "ivdyn/periodic.hpp"

#include <algorithm>

#include "ivdyn/errors.hpp"
#include "ivdyn/orbit.hpp"

namespace ivdyn {

namespace {

using Kind = PeriodicFinding::Kind;

PeriodicFinding point_finding(const Rational& x, int period) {
  return {Kind::point, ClosedInterval::point(x), period};
}

bool covers(const std::vector<PeriodicFinding>& list, const PeriodicFinding& f) {
  return std::any_of(list.begin(), list.end(), [&](const PeriodicFinding& g) {
    return g.location.contains(f.location) && (g.kind == Kind::segment || f.kind == Kind::point);
  });
}

bool lower_period_covers(const std::vector<std::vector<PeriodicFinding>>& by_period, int p,
                         const PeriodicFinding& f) {
  for (int d = 1; d < p; ++d) {
    if (p % d == 0 && covers(by_period[d], f)) return true;
  }
  return false;
}

// Sign of A + B*2^-n is positive for every n >= 1.
bool positive_for_all_n(const DyadicAffine& v) {
  if (v.coefficient.sign() >= 0) return v.constant.sign() > 0 || (v.constant.is_zero() && v.coefficient.sign() > 0);
  return (v.constant + v.coefficient / Rational(2)).sign() > 0;
}

DyadicAffine minus(const DyadicAffine& a, const DyadicAffine& b) {
  return {a.constant - b.constant, a.coefficient - b.coefficient};
}

// Index shift n -> n+1.
DyadicAffine shifted(const DyadicAffine& a) { return {a.constant, a.coefficient / Rational(2)}; }

struct PieceFamily {
  std::string name;
  DyadicAffine x_left, x_right, y_left, y_right;
};

Rational fixed_point_in(const LinearPiece& p) {
  const Rational g0 = p.y0 - p.x0;
  const Rational g1 = p.y1 - p.x1;
  return p.x0 + g0 * (p.x1 - p.x0) / (g0 - g1);
}

}  // namespace

std::vector<PeriodicFinding> fixed_points_pl(const PLMap& m) {
  std::vector<PeriodicFinding> segments;
  std::vector<Rational> points;
  for (std::size_t i = 0; i < m.piece_count(); ++i) {
    const LinearPiece p = m.piece(i);
    const Rational g0 = p.y0 - p.x0;
    const Rational g1 = p.y1 - p.x1;
    if (g0.is_zero() && g1.is_zero()) {
      if (!segments.empty() && segments.back().location.hi == p.x0) {
        segments.back().location.hi = p.x1;
      } else {
        segments.push_back({Kind::segment, {p.x0, p.x1}, 1});
      }
      continue;
    }
    if (g0.is_zero()) points.push_back(p.x0);
    if (g1.is_zero()) points.push_back(p.x1);
    if (g0.sign() * g1.sign() < 0) points.push_back(fixed_point_in(p));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<PeriodicFinding> out = segments;
  for (const auto& x : points) {
    const bool inside = std::any_of(segments.begin(), segments.end(),
                                    [&](const PeriodicFinding& s) { return s.location.contains(x); });
    if (!inside) out.push_back(point_finding(x, 1));
  }
  std::sort(out.begin(), out.end(), [](const PeriodicFinding& a, const PeriodicFinding& b) {
    return a.location.lo < b.location.lo;
  });
  return out;
}

PeriodicSet periodic_points(const MapModel& m, int max_period, const Budget& budget) {
  if (max_period < 1) throw PreconditionError("max period must be >= 1");
  PeriodicSet out;
  out.max_period = max_period;

  if (m.is_staircase()) {
    Verdict gap = staircase_gap_check();
    if (gap.status != Status::holds) throw InternalConsistencyError("staircase gap check failed");
    for (const Rational& x : {Rational(0), Rational(1)}) {
      if (m.eval(x) != x) throw InternalConsistencyError("staircase endpoint is not fixed");
      out.findings.push_back(point_finding(x, 1));
    }
    out.highest_complete_period = max_period;
    out.exact = true;
    out.note = "f(x) > x on (0,1): the periodic set is exactly {0,1}";
    return out;
  }

  const PLMap& base = m.as_pl();
  std::vector<std::vector<PeriodicFinding>> by_period(max_period + 1);
  PLMap power = base;
  for (int p = 1; p <= max_period; ++p) {
    if (p > 1) {
      try {
        power = compose(base, power, budget.piece_cap);
      } catch (const BudgetExceeded& e) {
        out.note = "piece budget exhausted at period " + std::to_string(p) + ": " + e.what();
        break;
      }
    }
    by_period[p] = fixed_points_pl(power);
    for (const auto& f : by_period[p]) {
      if (lower_period_covers(by_period, p, f)) continue;
      PeriodicFinding g = f;
      g.least_period = p;
      out.findings.push_back(std::move(g));
    }
    out.highest_complete_period = p;
  }
  std::sort(out.findings.begin(), out.findings.end(), [](const PeriodicFinding& a, const PeriodicFinding& b) {
    if (a.location.lo != b.location.lo) return a.location.lo < b.location.lo;
    return a.least_period < b.least_period;
  });
  out.exact = std::any_of(out.findings.begin(), out.findings.end(), [&](const PeriodicFinding& f) {
    return f.kind == Kind::segment && f.location == base.domain();
  });
  return out;
}

Verdict staircase_gap_check() {
  Verdict v{"gap-check"};
  const StaircaseMap s;
  using S = StaircaseMap;
  const std::vector<PieceFamily> families{
      {"descending", S::peak(), S::trough(), S::peak_value(), S::trough_value()},
      {"ascending", S::trough(), shifted(S::peak()), S::trough_value(), shifted(S::peak_value())},
  };

  // The families must describe the map: endpoints match eval, each piece is
  // affine, and the pieces tile [1/2, 1) without gaps.
  for (long n = 1; n <= 12; ++n) {
    for (const auto& fam : families) {
      const Rational xl = fam.x_left.at(n);
      const Rational xr = fam.x_right.at(n);
      if (!(xl < xr) || s.eval(xl) != fam.y_left.at(n) || s.eval(xr) != fam.y_right.at(n)) {
        throw InternalConsistencyError(fam.name + " family disagrees with the map at n=" + std::to_string(n));
      }
      const Rational mid = (xl + xr) / Rational(2);
      if (s.eval(mid) != (fam.y_left.at(n) + fam.y_right.at(n)) / Rational(2)) {
        throw InternalConsistencyError(fam.name + " piece is not affine at n=" + std::to_string(n));
      }
    }
  }
  const auto same = [](const DyadicAffine& a, const DyadicAffine& b) {
    return a.constant == b.constant && a.coefficient == b.coefficient;
  };
  if (!same(families[0].x_right, families[1].x_left) || !same(families[1].x_right, shifted(families[0].x_left)) ||
      families[0].x_left.at(1) != Rational(1, 2)) {
    throw InternalConsistencyError("staircase piece families do not tile [1/2,1)");
  }

  Witness w;
  w.description =
      "f(x) - x > 0 on (0,1): on [0,1/2] f(x) - x = x; on both piece families f(x) - x is affine with "
      "endpoint values A + B*2^-n positive for every n >= 1";
  bool all_positive = s.eval(Rational(1, 2)) - Rational(1, 2) > Rational(0) && s.eval(Rational(0)).is_zero();
  for (const auto& fam : families) {
    const DyadicAffine left = minus(fam.y_left, fam.x_left);
    const DyadicAffine right = minus(fam.y_right, fam.x_right);
    all_positive = all_positive && positive_for_all_n(left) && positive_for_all_n(right);
    w.values.emplace_back(fam.name + ".left.constant", left.constant);
    w.values.emplace_back(fam.name + ".left.coefficient", left.coefficient);
    w.values.emplace_back(fam.name + ".right.constant", right.constant);
    w.values.emplace_back(fam.name + ".right.coefficient", right.coefficient);
  }
  w.sets.push_back({"periodic_free", IntervalSet(S::domain())});
  if (!all_positive) {
    v.status = Status::fails;
    v.certified = true;
    w.description = "some piece family has a non-positive margin";
  } else {
    v.status = Status::holds;
    v.certified = true;
  }
  v.witness = std::move(w);
  return v;
}

Verdict gap_check(const MapModel& m) {
  if (m.is_staircase()) return staircase_gap_check();
  const PLMap& pl = m.as_pl();
  Verdict v{"gap-check"};
  v.certified = true;
  const ClosedInterval domain = pl.domain();
  int seen_sign = 0;
  for (std::size_t i = 0; i < pl.piece_count(); ++i) {
    const LinearPiece p = pl.piece(i);
    const Rational g0 = p.y0 - p.x0;
    const Rational g1 = p.y1 - p.x1;
    if (g0.is_zero() && g1.is_zero()) {
      v.status = Status::fails;
      v.witness = Witness{"segment of fixed points", {{"fixed_segment", IntervalSet(ClosedInterval{p.x0, p.x1})}}, {}};
      return v;
    }
    for (const auto& [x, g] : {std::pair{p.x0, g0}, std::pair{p.x1, g1}}) {
      const bool interior = domain.lo < x && x < domain.hi;
      if (g.is_zero() && interior) {
        v.status = Status::fails;
        v.witness = Witness{"fixed point inside the domain", {}, {{"fixed_point", x}}};
        return v;
      }
      if (g.is_zero()) continue;
      if (seen_sign != 0 && g.sign() != seen_sign) {
        v.status = Status::fails;
        v.witness = Witness{"f(x) - x changes sign; fixed point inside the domain", {},
                            {{"fixed_point", fixed_point_in(p)}}};
        return v;
      }
      seen_sign = g.sign();
    }
  }
  v.status = Status::holds;
  v.witness = Witness{"f(x) - x has constant sign on the open domain", {{"periodic_free", IntervalSet(domain)}}, {}};
  return v;
}

Verdict periodic_density_check(const MapModel& m, int k, int max_period, const Budget& budget) {
  if (k < 1) throw PreconditionError("resolution must be >= 1");
  Verdict v{"periodic-density"};
  v.resolution = k;
  const PeriodicSet periodic = periodic_points(m, max_period, budget);
  v.budget.highest_complete_period = periodic.highest_complete_period;

  std::optional<ClosedInterval> first_empty;
  for (const auto& cell : dyadic_cells(m.domain(), k)) {
    const bool hit = std::any_of(periodic.findings.begin(), periodic.findings.end(),
                                 [&](const PeriodicFinding& f) { return cell.meets(f.location); });
    if (hit) continue;
    if (!first_empty) first_empty = cell;

    if (periodic.exact) {
      v.status = Status::fails;
      v.certified = true;
      Witness w{"cell contains no point of the exactly known periodic set", {{"cell", IntervalSet(cell)}}, {}};
      for (const auto& f : periodic.findings) w.sets.push_back({"periodic", IntervalSet(f.location)});
      v.witness = std::move(w);
      v.note = periodic.note;
      return v;
    }
    // A periodic point in the cell would return to it, so it would lie in
    // the hull of the cell's image.
    HullResult later = forward_hull(m, m.image_set(IntervalSet(cell)), budget);
    ++v.budget.hulls;
    v.budget.hull_iterations += later.iterations;
    if (!later.converged) {
      ++v.budget.unconverged_hulls;
      continue;
    }
    const IntervalSet back = intersect(later.hull, IntervalSet(cell));
    const bool touches_interior = std::any_of(back.components().begin(), back.components().end(),
                                              [&](const ClosedInterval& c) {
                                                return !c.degenerate() || (cell.lo < c.lo && c.lo < cell.hi);
                                              });
    if (!touches_interior) {
      v.status = Status::fails;
      v.certified = true;
      v.witness = Witness{"no orbit starting in the open cell ever returns to it, so it holds no periodic point",
                          {{"cell", IntervalSet(cell)}, {"later_hull", later.hull}},
                          {}};
      return v;
    }
  }
  if (!first_empty) {
    v.status = Status::holds;
    v.note = "every cell holds a periodic point of period <= " + std::to_string(periodic.highest_complete_period);
    return v;
  }
  v.status = Status::unknown;
  v.witness = Witness{"first cell without a periodic point found up to the period bound",
                      {{"empty_cell", IntervalSet(*first_empty)}},
                      {}};
  v.note = periodic.note;
  return v;
}

Verdict ordering_oracle(const MapModel& m, const ClosedInterval& j, const Rational& z, const Verdict& certificate,
                        std::size_t steps) {
  if (certificate.status != Status::holds || !certificate.witness) {
    throw PreconditionError("ordering oracle needs a periodic-free certificate");
  }
  const IntervalSet* region = certificate.witness->find_set("periodic_free");
  if (!region || region->size() != 1) throw PreconditionError("certificate carries no periodic-free region");
  const ClosedInterval open = region->components().front();
  if (!(open.lo < j.lo && j.hi < open.hi)) {
    throw PreconditionError("interval " + j.str() + " is not inside the certified region " + open.str());
  }
  if (!j.contains(z)) throw PreconditionError("z outside J");

  Verdict v{"ordering"};
  const OrbitRecord r = orbit(m, z, steps);
  v.budget.orbit_steps = r.points.size() - 1;
  std::vector<std::pair<std::size_t, Rational>> visits;
  for (std::size_t t = 0; t < r.points.size(); ++t) {
    if (j.contains(r.points[t])) visits.emplace_back(t, r.points[t]);
  }
  if (visits.size() < 2) {
    v.status = Status::unknown;
    v.note = "vacuous: the orbit visits J fewer than twice";
    return v;
  }
  const int direction = (visits[1].second - visits[0].second).sign();
  for (std::size_t i = 1; i < visits.size(); ++i) {
    if ((visits[i].second - visits[i - 1].second).sign() == direction && direction != 0) continue;
    v.status = Status::fails;
    v.certified = true;
    const auto& m_visit = visits[i - 1];
    const auto& n_visit = visits[i];
    v.witness = Witness{"orbit visits to J are not strictly monotone",
                        {},
                        {{"z", z},
                         {"m", Rational(static_cast<long>(m_visit.first))},
                         {"f^m(z)", m_visit.second},
                         {"n", Rational(static_cast<long>(n_visit.first))},
                         {"f^n(z)", n_visit.second}}};
    return v;
  }
  v.status = Status::holds;
  v.note = std::to_string(visits.size()) + " visits, strictly " + (direction > 0 ? "increasing" : "decreasing");
  return v;
}

}  // namespace ivdyn
