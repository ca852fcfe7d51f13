#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ivdyn/rational.hpp"

namespace ivdyn {

inline constexpr std::size_t kDefaultComponentCap = 4096;

/// Closed interval [lo, hi]. lo == hi is a single point.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  bool valid() const { return lo <= hi; }
  bool degenerate() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const ClosedInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool meets(const ClosedInterval& other) const { return lo <= other.hi && other.lo <= hi; }
  std::string str() const;

  static ClosedInterval point(const Rational& x) { return {x, x}; }
  static ClosedInterval parse(std::string_view text);

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Canonical finite union of closed intervals: sorted, pairwise disjoint and
/// non-touching. Immutable once built.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(ClosedInterval interval);

  /// Sorts and merges `raw`. Throws ValidationError on lo > hi and
  /// ComponentOverflow when the result exceeds `cap` components.
  static IntervalSet normalize(std::vector<ClosedInterval> raw,
                               std::size_t cap = kDefaultComponentCap);
  /// Parses `[[a,b],[c,d]]`; `[]` is the empty set.
  static IntervalSet parse(std::string_view text);

  const std::vector<ClosedInterval>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  std::size_t size() const noexcept { return components_.size(); }

  bool interior_nonempty() const;
  bool contains(const Rational& x) const;
  bool contains(const IntervalSet& other) const;
  Rational total_length() const;
  /// Drops single-point components.
  IntervalSet without_points() const;
  /// Smallest closed interval containing the set. Requires !empty().
  ClosedInterval span() const;

  std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<ClosedInterval> components_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b, std::size_t cap = kDefaultComponentCap);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
/// Grows each component by `radius` on both sides, clipped to `domain`.
IntervalSet dilate(const IntervalSet& a, const Rational& radius, const ClosedInterval& domain);

/// The 2^k equal-width cells of `domain`, left to right. On [0,1] these are
/// the dyadic intervals [j/2^k, (j+1)/2^k].
std::vector<ClosedInterval> dyadic_cells(const ClosedInterval& domain, int k);
Rational dyadic_width(const ClosedInterval& domain, int k);
/// Index of the cell containing x; a shared boundary point goes to the right
/// cell, except domain.hi which belongs to the last cell.
std::size_t dyadic_cell_index(const ClosedInterval& domain, int k, const Rational& x);

}  // namespace ivdyn
