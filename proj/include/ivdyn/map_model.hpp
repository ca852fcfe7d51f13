#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivdyn/interval_set.hpp"
#include "ivdyn/rational.hpp"

namespace ivdyn {

inline constexpr std::size_t kDefaultPieceCap = 65536;

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Affine piece y = slope * x + intercept over [x0, x1].
struct LinearPiece {
  Rational x0, x1;
  Rational y0, y1;

  Rational slope() const { return (y1 - y0) / (x1 - x0); }
  Rational intercept() const { return y0 - slope() * x0; }
  Rational at(const Rational& x) const { return y0 + (x - x0) * (y1 - y0) / (x1 - x0); }
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate_breakpoints(const ClosedInterval& domain, const std::vector<Breakpoint>& points);

/// Continuous piecewise-linear self-map of a closed interval, given by the
/// interpolation of its breakpoints.
class PLMap {
 public:
  /// Throws ValidationError listing every violated invariant.
  PLMap(ClosedInterval domain, std::vector<Breakpoint> points);

  const ClosedInterval& domain() const noexcept { return domain_; }
  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
  std::size_t piece_count() const noexcept { return points_.size() - 1; }
  LinearPiece piece(std::size_t i) const;

  Rational eval(const Rational& x) const;
  ClosedInterval image(const ClosedInterval& j) const;

  /// Same graph with collinear interior breakpoints removed.
  PLMap simplified() const;
  /// The map on `sub`; requires image(sub) ⊆ sub.
  PLMap restricted(const ClosedInterval& sub) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::size_t piece_index(const Rational& x) const;

  ClosedInterval domain_;
  std::vector<Breakpoint> points_;
};

/// Value c + k * 2^-n of a family of points indexed by n >= 1.
struct DyadicAffine {
  Rational constant;
  Rational coefficient;
  Rational at(long n) const { return constant + coefficient * Rational::pow2(-n); }
};

/// The countably-piecewise map on [0,1] with f(0)=0, f(1)=1,
/// f(1-2^-n)=1 and f(1-3*2^-(n+2)) = 1-2^-(n+1) for n >= 1, linear in between.
/// Slopes are +-2 on every piece; the pieces accumulate at the fixed point 1.
class StaircaseMap {
 public:
  static ClosedInterval domain() { return {Rational(0), Rational(1)}; }

  // Peaks sit at 1 - 2^-n, troughs at 1 - 3/4 * 2^-n.
  static DyadicAffine peak() { return {Rational(1), Rational(-1)}; }
  static DyadicAffine trough() { return {Rational(1), Rational(-3, 4)}; }
  static DyadicAffine peak_value() { return {Rational(1), Rational(0)}; }
  static DyadicAffine trough_value() { return {Rational(1), Rational(-1, 2)}; }

  /// Piece index n with 1 - 2^-n <= x < 1 - 2^-(n+1), for x in [1/2, 1).
  static long piece_index(const Rational& x);

  Rational eval(const Rational& x) const;
  ClosedInterval image(const ClosedInterval& j) const;

  /// Graph vertices (0,0), then peak and trough for n = 1..max_index.
  std::vector<Breakpoint> truncated_breakpoints(long max_index) const;

  friend bool operator==(const StaircaseMap&, const StaircaseMap&) { return true; }
};

/// A named dynamical system f : I -> I.
class MapModel {
 public:
  MapModel(PLMap map, std::string name = "custom");
  MapModel(StaircaseMap map, std::string name = "staircase");

  const std::string& name() const noexcept { return name_; }
  bool is_pl() const noexcept { return std::holds_alternative<PLMap>(impl_); }
  bool is_staircase() const noexcept { return std::holds_alternative<StaircaseMap>(impl_); }
  const PLMap& as_pl() const;
  const std::variant<PLMap, StaircaseMap>& variant() const noexcept { return impl_; }

  ClosedInterval domain() const;
  Rational eval(const Rational& x) const;
  ClosedInterval image_interval(const ClosedInterval& j) const;
  IntervalSet image_set(const IntervalSet& a, std::size_t cap = kDefaultComponentCap) const;

  friend bool operator==(const MapModel& a, const MapModel& b) { return a.impl_ == b.impl_; }

 private:
  std::variant<PLMap, StaircaseMap> impl_;
  std::string name_;
};

ValidationReport validate(const MapModel& m);

/// Corpus maps: example-3-1, example-3-2, tent, identity, constant (needs c in [0,1]).
MapModel builtin(std::string_view name, const std::optional<Rational>& parameter = std::nullopt);
std::vector<std::string> builtin_names();

/// outer ∘ inner. Throws BudgetExceeded past `piece_cap` pieces.
PLMap compose(const PLMap& outer, const PLMap& inner, std::size_t piece_cap = kDefaultPieceCap);
/// f^p by repeated composition; BudgetExceeded reports the last complete degree.
PLMap iterate_pl(const PLMap& m, int p, std::size_t piece_cap = kDefaultPieceCap);

/// f^power restricted to `sub` (whole domain when absent), as a new corpus entry.
MapModel derived_map(const MapModel& m, int power, const std::optional<ClosedInterval>& sub);

}  // namespace ivdyn
