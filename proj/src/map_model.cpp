#include "ivdyn/map_model.hpp"

#include <algorithm>

#include "ivdyn/errors.hpp"

namespace ivdyn {

namespace {

void require_in_domain(const ClosedInterval& domain, const Rational& x) {
  if (!domain.contains(x)) {
    throw PreconditionError("point " + x.str() + " outside domain " + domain.str());
  }
}

void require_in_domain(const ClosedInterval& domain, const ClosedInterval& j) {
  if (!j.valid()) throw ValidationError("interval " + j.str() + " has lo > hi");
  if (!domain.contains(j)) {
    throw PreconditionError("interval " + j.str() + " outside domain " + domain.str());
  }
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Breakpoint> drop_collinear(std::vector<Breakpoint> points) {
  if (points.size() <= 2) return points;
  std::vector<Breakpoint> out;
  out.reserve(points.size());
  out.push_back(std::move(points.front()));
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (collinear(out.back(), points[i], points[i + 1])) continue;
    out.push_back(std::move(points[i]));
  }
  out.push_back(std::move(points.back()));
  return out;
}

}  // namespace

ValidationReport validate_breakpoints(const ClosedInterval& domain, const std::vector<Breakpoint>& points) {
  ValidationReport report;
  if (!domain.valid() || domain.degenerate()) {
    report.problems.push_back("domain " + domain.str() + " must be a non-degenerate interval");
  }
  if (points.size() < 2) {
    report.problems.push_back("need at least 2 breakpoints, got " + std::to_string(points.size()));
    return report;
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      report.problems.push_back("breakpoint " + std::to_string(i + 1) + ": x=" + points[i].x.str() +
                                " does not strictly increase");
    }
  }
  if (points.front().x != domain.lo) {
    report.problems.push_back("first breakpoint x=" + points.front().x.str() + " is not domain start " +
                              domain.lo.str());
  }
  if (points.back().x != domain.hi) {
    report.problems.push_back("last breakpoint x=" + points.back().x.str() + " is not domain end " +
                              domain.hi.str());
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!domain.contains(points[i].y)) {
      report.problems.push_back("breakpoint " + std::to_string(i + 1) + ": y=" + points[i].y.str() +
                                " escapes domain " + domain.str());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// PLMap

PLMap::PLMap(ClosedInterval domain, std::vector<Breakpoint> points)
    : domain_(std::move(domain)), points_(std::move(points)) {
  auto report = validate_breakpoints(domain_, points_);
  if (!report.ok()) {
    std::string msg = "invalid piecewise-linear map:";
    for (const auto& p : report.problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
}

LinearPiece PLMap::piece(std::size_t i) const {
  return {points_[i].x, points_[i + 1].x, points_[i].y, points_[i + 1].y};
}

std::size_t PLMap::piece_index(const Rational& x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  std::size_t idx = static_cast<std::size_t>(it - points_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, piece_count() - 1);
}

Rational PLMap::eval(const Rational& x) const {
  require_in_domain(domain_, x);
  return piece(piece_index(x)).at(x);
}

ClosedInterval PLMap::image(const ClosedInterval& j) const {
  require_in_domain(domain_, j);
  Rational lo = eval(j.lo);
  Rational hi = lo;
  auto widen = [&](const Rational& y) {
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  };
  if (!j.degenerate()) {
    widen(eval(j.hi));
    auto first = std::upper_bound(points_.begin(), points_.end(), j.lo,
                                  [](const Rational& v, const Breakpoint& b) { return v < b.x; });
    for (auto it = first; it != points_.end() && it->x < j.hi; ++it) widen(it->y);
  }
  return {lo, hi};
}

PLMap PLMap::simplified() const { return PLMap(domain_, drop_collinear(points_)); }

PLMap PLMap::restricted(const ClosedInterval& sub) const {
  require_in_domain(domain_, sub);
  if (sub.degenerate()) throw PreconditionError("cannot restrict to a single point");
  std::vector<Breakpoint> pts;
  pts.push_back({sub.lo, eval(sub.lo)});
  for (const auto& b : points_) {
    if (sub.lo < b.x && b.x < sub.hi) pts.push_back(b);
  }
  pts.push_back({sub.hi, eval(sub.hi)});
  return PLMap(sub, std::move(pts));
}

// ---------------------------------------------------------------------------
// StaircaseMap

long StaircaseMap::piece_index(const Rational& x) {
  if (!(Rational(1, 2) <= x && x < Rational(1))) {
    throw PreconditionError("staircase piece index needs x in [1/2,1), got " + x.str());
  }
  return floor_log2(Rational(1) / (Rational(1) - x));
}

Rational StaircaseMap::eval(const Rational& x) const {
  require_in_domain(domain(), x);
  if (x == Rational(1)) return Rational(1);
  if (x <= Rational(1, 2)) return x * Rational(2);
  const long n = piece_index(x);
  const Rational a = peak().at(n);
  const Rational b = trough().at(n);
  if (x <= b) return Rational(1) - Rational(2) * (x - a);
  return trough_value().at(n) + Rational(2) * (x - b);
}

ClosedInterval StaircaseMap::image(const ClosedInterval& j) const {
  require_in_domain(domain(), j);
  Rational lo = eval(j.lo);
  Rational hi = lo;
  if (j.degenerate()) return {lo, hi};
  Rational at_hi = eval(j.hi);
  if (at_hi < lo) lo = at_hi;
  if (at_hi > hi) hi = at_hi;

  // Interior extrema: any peak gives 1; trough values increase with n, so
  // only the first trough to the right of j.lo can lower the minimum.
  Rational next_peak;
  Rational next_trough;
  long trough_n;
  if (j.lo < Rational(1, 2)) {
    next_peak = Rational(1, 2);
    trough_n = 1;
  } else {
    const long n = piece_index(j.lo);  // j.lo < j.hi <= 1
    next_peak = peak().at(n + 1);
    trough_n = j.lo < trough().at(n) ? n : n + 1;
  }
  next_trough = trough().at(trough_n);
  if (next_peak < j.hi) hi = Rational(1);
  if (next_trough < j.hi) {
    Rational v = trough_value().at(trough_n);
    if (v < lo) lo = v;
  }
  return {lo, hi};
}

std::vector<Breakpoint> StaircaseMap::truncated_breakpoints(long max_index) const {
  std::vector<Breakpoint> pts{{Rational(0), Rational(0)}};
  for (long n = 1; n <= max_index; ++n) {
    pts.push_back({peak().at(n), peak_value().at(n)});
    pts.push_back({trough().at(n), trough_value().at(n)});
  }
  return pts;
}

// ---------------------------------------------------------------------------
// MapModel

MapModel::MapModel(PLMap map, std::string name) : impl_(std::move(map)), name_(std::move(name)) {}
MapModel::MapModel(StaircaseMap map, std::string name) : impl_(map), name_(std::move(name)) {}

const PLMap& MapModel::as_pl() const {
  if (!is_pl()) throw PreconditionError("map '" + name_ + "' is not a finite piecewise-linear map");
  return std::get<PLMap>(impl_);
}

ClosedInterval MapModel::domain() const {
  return std::visit([](const auto& m) { return m.domain(); }, impl_);
}

Rational MapModel::eval(const Rational& x) const {
  return std::visit([&](const auto& m) { return m.eval(x); }, impl_);
}

ClosedInterval MapModel::image_interval(const ClosedInterval& j) const {
  return std::visit([&](const auto& m) { return m.image(j); }, impl_);
}

IntervalSet MapModel::image_set(const IntervalSet& a, std::size_t cap) const {
  std::vector<ClosedInterval> raw;
  raw.reserve(a.size());
  for (const auto& c : a.components()) raw.push_back(image_interval(c));
  return IntervalSet::normalize(std::move(raw), cap);
}

ValidationReport validate(const MapModel& m) {
  if (m.is_pl()) {
    const auto& pl = m.as_pl();
    return validate_breakpoints(pl.domain(), pl.breakpoints());
  }
  ValidationReport report;
  StaircaseMap s;
  if (s.eval(Rational(0)) != Rational(0)) report.problems.push_back("staircase f(0) != 0");
  if (s.eval(Rational(1)) != Rational(1)) report.problems.push_back("staircase f(1) != 1");
  return report;
}

std::vector<std::string> builtin_names() {
  return {"example-3-1", "example-3-2", "tent", "identity", "constant"};
}

MapModel builtin(std::string_view name, const std::optional<Rational>& parameter) {
  const ClosedInterval unit{Rational(0), Rational(1)};
  if (name != "constant" && parameter) {
    throw ValidationError("builtin '" + std::string(name) + "' takes no parameter");
  }
  if (name == "example-3-1") {
    return MapModel(PLMap(unit, {{Rational(0), Rational(1)},
                                 {Rational(1, 6), Rational(2, 3)},
                                 {Rational(1, 3), Rational(1)},
                                 {Rational(2, 3), Rational(0)},
                                 {Rational(1), Rational(1, 3)}}),
                    "example-3-1");
  }
  if (name == "example-3-2" || name == "staircase") return MapModel(StaircaseMap{}, "example-3-2");
  if (name == "tent") {
    return MapModel(PLMap(unit, {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)}, {Rational(1), Rational(0)}}),
                    "tent");
  }
  if (name == "identity") {
    return MapModel(PLMap(unit, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}), "identity");
  }
  if (name == "constant") {
    if (!parameter) throw ValidationError("builtin 'constant' needs a parameter c in [0,1]");
    if (!unit.contains(*parameter)) {
      throw ValidationError("constant parameter " + parameter->str() + " outside [0,1]");
    }
    return MapModel(PLMap(unit, {{Rational(0), *parameter}, {Rational(1), *parameter}}),
                    "constant:" + parameter->str());
  }
  throw ValidationError("unknown builtin map '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Composition

PLMap compose(const PLMap& outer, const PLMap& inner, std::size_t piece_cap) {
  if (!outer.domain().contains(inner.image(inner.domain()))) {
    throw PreconditionError("inner range escapes outer domain");
  }
  const auto& cuts = outer.breakpoints();
  std::vector<Rational> xs;
  xs.reserve(inner.breakpoints().size() * 2);
  for (std::size_t i = 0; i < inner.piece_count(); ++i) {
    const LinearPiece p = inner.piece(i);
    xs.push_back(p.x0);
    if (p.y0 == p.y1) continue;
    const bool rising = p.y0 < p.y1;
    const Rational& lo = rising ? p.y0 : p.y1;
    const Rational& hi = rising ? p.y1 : p.y0;
    std::vector<Rational> local;
    for (const auto& c : cuts) {
      if (lo < c.x && c.x < hi) local.push_back(p.x0 + (c.x - p.y0) * (p.x1 - p.x0) / (p.y1 - p.y0));
    }
    if (!rising) std::reverse(local.begin(), local.end());
    for (auto& x : local) xs.push_back(std::move(x));
  }
  xs.push_back(inner.breakpoints().back().x);

  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = outer.eval(inner.eval(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  pts = drop_collinear(std::move(pts));
  if (pts.size() - 1 > piece_cap) {
    throw BudgetExceeded("composition needs " + std::to_string(pts.size() - 1) + " pieces, cap is " +
                             std::to_string(piece_cap),
                         0);
  }
  return PLMap(inner.domain(), std::move(pts));
}

PLMap iterate_pl(const PLMap& m, int p, std::size_t piece_cap) {
  if (p < 1) throw PreconditionError("iterate power must be >= 1");
  PLMap result = m;
  if (result.piece_count() > piece_cap) throw BudgetExceeded("map exceeds piece cap", 0);
  for (int degree = 2; degree <= p; ++degree) {
    try {
      result = compose(m, result, piece_cap);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(std::string("iterate ") + std::to_string(degree) + ": " + e.what(), degree - 1);
    }
  }
  return result;
}

MapModel derived_map(const MapModel& m, int power, const std::optional<ClosedInterval>& sub) {
  if (power == 1 && !sub) return m;
  const PLMap& base = m.as_pl();
  PLMap g = power == 1 ? base : iterate_pl(base, power);
  std::string name = m.name();
  if (power != 1) name += "^" + std::to_string(power);
  if (sub) {
    g = g.restricted(*sub);
    name += "|" + sub->str();
  }
  return MapModel(std::move(g), std::move(name));
}

}  // namespace ivdyn
