#include "ivdyn/interval_set.hpp"

#include <algorithm>
#include <cctype>

#include "ivdyn/errors.hpp"

namespace ivdyn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string ClosedInterval::str() const { return "[" + lo.str() + "," + hi.str() + "]"; }

ClosedInterval ClosedInterval::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("malformed interval '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("interval needs two endpoints");
  ClosedInterval out{Rational::parse(trim(body.substr(0, comma))),
                     Rational::parse(trim(body.substr(comma + 1)))};
  if (!out.valid()) throw ValidationError("interval " + out.str() + " has lo > hi");
  return out;
}

IntervalSet::IntervalSet(ClosedInterval interval) {
  if (!interval.valid()) throw ValidationError("interval " + interval.str() + " has lo > hi");
  components_.push_back(std::move(interval));
}

IntervalSet IntervalSet::normalize(std::vector<ClosedInterval> raw, std::size_t cap) {
  for (const auto& iv : raw) {
    if (!iv.valid()) throw ValidationError("interval " + iv.str() + " has lo > hi");
  }
  // Comparing long rationals is expensive, and callers such as unite already pass sorted input.
  const auto by_lo = [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; };
  if (!std::is_sorted(raw.begin(), raw.end(), by_lo)) std::sort(raw.begin(), raw.end(), by_lo);
  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.components_.empty() && out.components_.back().hi >= iv.lo) {
      auto& last = out.components_.back();
      if (iv.hi > last.hi) last.hi = std::move(iv.hi);
    } else {
      out.components_.push_back(std::move(iv));
    }
  }
  if (out.components_.size() > cap) throw ComponentOverflow(out.components_.size(), cap);
  return out;
}

IntervalSet IntervalSet::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("malformed interval set '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<ClosedInterval> raw;
  while (!body.empty()) {
    auto close = body.find(']');
    if (body.front() != '[' || close == std::string_view::npos) {
      throw ParseError("malformed interval set '" + std::string(text) + "'");
    }
    raw.push_back(ClosedInterval::parse(body.substr(0, close + 1)));
    body = trim(body.substr(close + 1));
    if (!body.empty()) {
      if (body.front() != ',') throw ParseError("expected ',' in interval set");
      body = trim(body.substr(1));
    }
  }
  return normalize(std::move(raw), SIZE_MAX);
}

bool IntervalSet::interior_nonempty() const {
  return std::any_of(components_.begin(), components_.end(),
                     [](const ClosedInterval& c) { return c.lo < c.hi; });
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), x,
                             [](const Rational& v, const ClosedInterval& c) { return v < c.lo; });
  if (it == components_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool IntervalSet::contains(const IntervalSet& other) const {
  // Canonical components are maximal, so each piece of `other` must sit
  // inside a single component of this set.
  auto it = components_.begin();
  for (const auto& piece : other.components_) {
    while (it != components_.end() && it->hi < piece.lo) ++it;
    if (it == components_.end() || !it->contains(piece)) return false;
  }
  return true;
}

Rational IntervalSet::total_length() const {
  Rational sum;
  for (const auto& c : components_) sum += c.length();
  return sum;
}

IntervalSet IntervalSet::without_points() const {
  IntervalSet out;
  for (const auto& c : components_) {
    if (!c.degenerate()) out.components_.push_back(c);
  }
  return out;
}

ClosedInterval IntervalSet::span() const {
  if (components_.empty()) throw PreconditionError("span of empty interval set");
  return {components_.front().lo, components_.back().hi};
}

std::string IntervalSet::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += components_[i].str();
  }
  return out + "]";
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b, std::size_t cap) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  std::vector<ClosedInterval> raw;
  raw.reserve(a.size() + b.size());
  std::merge(a.components().begin(), a.components().end(), b.components().begin(),
             b.components().end(), std::back_inserter(raw),
             [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
  return IntervalSet::normalize(std::move(raw), cap);
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<ClosedInterval> out;
  const auto& ca = a.components();
  const auto& cb = b.components();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ca.size() && j < cb.size()) {
    const Rational& lo = max(ca[i].lo, cb[j].lo);
    const Rational& hi = min(ca[i].hi, cb[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ca[i].hi < cb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  // Pieces come out sorted and disjoint already; normalize only re-checks.
  return IntervalSet::normalize(std::move(out), SIZE_MAX);
}

IntervalSet dilate(const IntervalSet& a, const Rational& radius, const ClosedInterval& domain) {
  std::vector<ClosedInterval> raw;
  raw.reserve(a.size());
  for (const auto& c : a.components()) {
    raw.push_back({max(domain.lo, c.lo - radius), min(domain.hi, c.hi + radius)});
  }
  return IntervalSet::normalize(std::move(raw), SIZE_MAX);
}

Rational dyadic_width(const ClosedInterval& domain, int k) {
  return domain.length() * Rational::pow2(-k);
}

std::vector<ClosedInterval> dyadic_cells(const ClosedInterval& domain, int k) {
  if (k < 0 || k > 24) throw PreconditionError("dyadic resolution out of range");
  const Rational width = dyadic_width(domain, k);
  const std::size_t count = std::size_t{1} << k;
  std::vector<ClosedInterval> cells;
  cells.reserve(count);
  Rational left = domain.lo;
  for (std::size_t j = 0; j < count; ++j) {
    Rational right = j + 1 == count ? domain.hi : left + width;
    cells.push_back({left, right});
    left = std::move(right);
  }
  return cells;
}

std::size_t dyadic_cell_index(const ClosedInterval& domain, int k, const Rational& x) {
  if (!domain.contains(x)) throw PreconditionError("point " + x.str() + " outside domain");
  const std::size_t count = std::size_t{1} << k;
  if (domain.length().is_zero()) return 0;
  Rational scaled = (x - domain.lo) / dyadic_width(domain, k);
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.value().get_num_mpz_t(), scaled.value().get_den_mpz_t());
  std::size_t index = whole.get_ui();
  return std::min(index, count - 1);
}

}  // namespace ivdyn
