#include "doctest.h"
#include "support.hpp"

#include "ivdyn/orbit.hpp"

using namespace ivdyn;
using namespace ivdyn::testing;

namespace {

IntervalSet S(const char* text) { return IntervalSet::parse(text); }

bool same_witness(const Verdict& a, const Verdict& b) {
  if (a.status != b.status || a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  if (a.witness->sets.size() != b.witness->sets.size()) return false;
  for (std::size_t i = 0; i < a.witness->sets.size(); ++i) {
    if (a.witness->sets[i].label != b.witness->sets[i].label || !(a.witness->sets[i].set == b.witness->sets[i].set))
      return false;
  }
  return a.witness->values == b.witness->values;
}

}  // namespace

TEST_CASE("orbit examples") {
  auto r = orbit(builtin("example-3-1"), Rational(1, 2), 5);
  CHECK(r.points == std::vector<Rational>(6, Rational(1, 2)));
  r = orbit(builtin("example-3-2"), Rational(1, 2), 2);
  CHECK(r.points == std::vector<Rational>{Rational(1, 2), 1, 1});
  r = orbit(builtin("identity"), Rational(1, 3), 3);
  CHECK(r.points == std::vector<Rational>(4, Rational(1, 3)));
  CHECK_FALSE(r.truncated);
}

TEST_CASE("orbit truncates on the denominator budget") {
  // Slope -1/2 doubles the denominator at every step.
  const MapModel halving(PLMap({Rational(0), Rational(1)}, {{0, Rational(1, 2)}, {1, 0}}), "halving");
  const auto r = orbit(halving, Rational(1, 7), 200, 16);
  CHECK(r.truncated);
  CHECK(r.points.size() < 201);
  for (std::size_t i = 0; i < r.points.size(); ++i) CHECK(r.points[i].denominator_bits() <= 16);
}

TEST_CASE("omega-limit covers") {
  const auto w = omega_estimate(builtin("example-3-2"), Rational(1, 3), 64, 64, 10);
  CHECK(w.cover == S("[[1023/1024,1]]"));
  const auto c = omega_estimate(builtin("constant", Rational(1, 2)), Rational(1, 7), 8, 8, 4);
  CHECK(c.cover.size() == 1);
  CHECK(c.cover.contains(Rational(1, 2)));
  CHECK(c.cover.total_length() == Rational(1, 16));
  const auto t = omega_estimate(builtin("tent"), Rational(2, 3), 8, 8, 6);
  CHECK(t.cover.total_length() == Rational(1, 64));
  CHECK(t.cover.contains(Rational(2, 3)));
}

TEST_CASE("weak indecomposability examples") {
  const Verdict s = weak_indecomposability_check(builtin("example-3-2"), 64, 10, 64, 64);
  CHECK(s.status == Status::holds);
  CHECK(s.empirical);
  REQUIRE(s.witness);
  CHECK(*s.witness->find_set("cover") == S("[[1023/1024,1]]"));
  const Verdict id = weak_indecomposability_check(builtin("identity"), 64, 6, 8, 8);
  CHECK(id.status == Status::fails);
  CHECK(id.empirical);
  REQUIRE(id.witness);
  CHECK(intersect(*id.witness->find_set("cover_a"), *id.witness->find_set("cover_b")).empty());
  CHECK(weak_indecomposability_check(builtin("constant", Rational(1, 2)), 64, 6, 8, 8).status == Status::holds);
}

TEST_CASE("grid seeds have odd numerators") {
  const auto seeds = grid_seeds({Rational(0), Rational(1)}, 64);
  REQUIRE(seeds.size() == 64);
  CHECK(seeds.front() == Rational(1, 128));
  CHECK(seeds.back() == Rational(127, 128));
}

TEST_CASE("property: orbits stay in the domain and follow eval") {
  for (const auto& m : corpus()) {
    for (int i = 0; i < 50; ++i) {
      const auto r = orbit(m, interior_rational(), 100);
      for (std::size_t j = 0; j < r.points.size(); ++j) {
        CHECK(m.domain().contains(r.points[j]));
        if (j + 1 < r.points.size()) CHECK(r.points[j + 1] == m.eval(r.points[j]));
      }
    }
  }
}

TEST_CASE("property: omega cover shrinks with burn-in") {
  const ClosedInterval unit{Rational(0), Rational(1)};
  for (const auto& m : corpus()) {
    for (const auto& x : grid_seeds(m.domain(), 16)) {
      const auto early = omega_estimate(m, x, 16, 32, 6);
      const auto late = omega_estimate(m, x, 32, 32, 6);
      if (early.truncated || late.truncated) continue;
      CHECK(dilate(early.cover, Rational(1, 64), unit).contains(late.cover));
      const auto r = orbit(m, x, 47);
      for (std::size_t j = 16; j < r.points.size(); ++j) CHECK(early.cover.contains(r.points[j]));
    }
  }
}

TEST_CASE("property: weak check is deterministic") {
  for (const auto& m : corpus()) {
    const Verdict a = weak_indecomposability_check(m, 32, 6, 32, 32);
    const Verdict b = weak_indecomposability_check(m, 32, 6, 32, 32);
    CHECK(same_witness(a, b));
  }
}
