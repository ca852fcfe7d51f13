#include "doctest.h"
#include "support.hpp"

#include "ivdyn/errors.hpp"
#include "ivdyn/interval_set.hpp"

using namespace ivdyn;
using ivdyn::testing::uniform;

namespace {

IntervalSet S(const char* text) { return IntervalSet::parse(text); }

// Random set with endpoints on the 2^-10 grid; about one in five components is a point.
IntervalSet random_set() {
  std::vector<ClosedInterval> raw;
  const long count = uniform(0, 5);
  for (long i = 0; i < count; ++i) {
    long a = uniform(0, 1024);
    long b = uniform(0, 5) == 0 ? a : uniform(0, 1024);
    if (a > b) std::swap(a, b);
    raw.push_back({Rational(a, 1024), Rational(b, 1024)});
  }
  return IntervalSet::normalize(raw);
}

bool is_canonical(const IntervalSet& s) {
  const auto& c = s.components();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].valid()) return false;
    if (i + 1 < c.size() && !(c[i].hi < c[i + 1].lo)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational parsing and lowest terms") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-3").str() == "-3");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(floor_log2(Rational(1, 8)) == -3);
  CHECK(floor_log2(Rational(5)) == 2);
  CHECK(floor_log2(Rational(7, 64)) == -4);
}

TEST_CASE("normalize") {
  CHECK(S("[[0,1/2],[1/2,1]]") == S("[[0,1]]"));
  CHECK(S("[[1/4,1/4]]").components().size() == 1);
  CHECK(S("[[1/4,1/4]]").components()[0] == ClosedInterval::point(Rational(1, 4)));
  CHECK(S("[[2/3,1],[0,1/3],[1/3,4/9]]").str() == "[[0,4/9],[2/3,1]]");
  CHECK_THROWS_AS(IntervalSet::normalize({{Rational(1), Rational(0)}}), ValidationError);
  CHECK_THROWS_AS(IntervalSet::normalize({{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1)}}, 1),
                  ComponentOverflow);
}

TEST_CASE("union and intersection examples") {
  CHECK(unite(S("[[0,1/3]]"), S("[[2/3,1]]")) == S("[[0,1/3],[2/3,1]]"));
  CHECK(unite(S("[[0,1/3]]"), IntervalSet{}) == S("[[0,1/3]]"));
  CHECK(unite(S("[[0,1/3]]"), S("[[1/4,1/2]]")) == S("[[0,1/2]]"));
  CHECK(intersect(S("[[0,1/2]]"), S("[[1/2,1]]")) == S("[[1/2,1/2]]"));
  CHECK(intersect(S("[[0,4/9],[2/3,1]]"), S("[[1/3,1]]")) == S("[[1/3,4/9],[2/3,1]]"));
  CHECK(intersect(S("[[0,4/9]]"), IntervalSet{}).empty());
}

TEST_CASE("interior, containment, length") {
  CHECK_FALSE(S("[[1/2,1/2]]").interior_nonempty());
  CHECK(S("[[0,1/3],[2/3,1]]").interior_nonempty());
  CHECK_FALSE(IntervalSet{}.interior_nonempty());
  CHECK(S("[[0,1]]").contains(S("[[1/4,3/4]]")));
  CHECK_FALSE(S("[[0,1/3]]").contains(S("[[0,1/2]]")));
  CHECK(S("[[0,1/3],[1/2,1/2]]").contains(S("[[0,1/3],[1/2,1/2]]")));
  CHECK(S("[[0,1/3],[2/3,1]]").total_length() == Rational(2, 3));
  CHECK(S("[[1/2,1/2]]").total_length() == 0);
  CHECK(S("[[1/2,3/4]]").total_length() == Rational(1, 4));
}

TEST_CASE("dyadic cells are relative to the domain") {
  const ClosedInterval dom{Rational(0), Rational(1, 3)};
  const auto cells = dyadic_cells(dom, 2);
  REQUIRE(cells.size() == 4);
  CHECK(cells[1] == ClosedInterval{Rational(1, 12), Rational(1, 6)});
  CHECK(dyadic_cell_index(dom, 2, Rational(1, 12)) == 1);
  CHECK(dyadic_cell_index(dom, 2, Rational(1, 3)) == 3);
  CHECK(dilate(S("[[1/4,1/2]]"), Rational(1, 2), {Rational(0), Rational(1)}) == S("[[0,1]]"));
}

TEST_CASE("property: normalize is idempotent and canonical") {
  for (int trial = 0; trial < 500; ++trial) {
    const IntervalSet a = random_set();
    CHECK(is_canonical(a));
    CHECK(IntervalSet::normalize(a.components()) == a);
  }
}

TEST_CASE("property: algebra agrees with a grid membership oracle at 2^-12") {
  const long grid = 4096;
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet a = random_set();
    const IntervalSet b = random_set();
    const IntervalSet u = unite(a, b);
    const IntervalSet n = intersect(a, b);
    CHECK(is_canonical(u));
    CHECK(is_canonical(n));
    bool agree = true;
    // Grid points and the midpoints between them probe both endpoints and interiors.
    for (long j = 0; j <= 2 * grid && agree; ++j) {
      const Rational x(j, 2 * grid);
      const bool ina = a.contains(x), inb = b.contains(x);
      agree = u.contains(x) == (ina || inb) && n.contains(x) == (ina && inb);
    }
    CHECK(agree);
    CHECK(u.total_length() + n.total_length() == a.total_length() + b.total_length());
    if (a.contains(b) && b.contains(a)) CHECK(a == b);
    CHECK(u.contains(a));
    CHECK(a.contains(n));
  }
}
