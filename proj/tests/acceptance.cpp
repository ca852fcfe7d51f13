// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Runtime limits are wall-clock seconds measured around each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ivdyn/devaney.hpp"
#include "ivdyn/hull.hpp"
#include "ivdyn/orbit.hpp"
#include "ivdyn/periodic.hpp"
#include "ivdyn/report.hpp"

using namespace ivdyn;

namespace {

constexpr double kLimitExample31 = 10.0;
constexpr double kLimitDecomposition = 20.0;
constexpr double kLimitExample32 = 30.0;
constexpr double kLimitPeriodicSet = 5.0;
constexpr double kLimitTent = 15.0;
constexpr double kLimitProperties = 60.0;
constexpr double kNoLimit = 1e9;

constexpr int kTentMaxPower = 12;
constexpr int kFamilyDepth = 20;
constexpr int kGridSeeds = 64;
constexpr int kOracleRuns = 100;
constexpr int kPropertyTrials = 200;
constexpr long kGridDenominator = 4096;

IntervalSet S(const char* text) { return IntervalSet::parse(text); }

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::mt19937_64 rng(7);
long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

const Verdict& verdict(const AnalysisReport& r, const std::string& name) {
  const Verdict* v = r.find(name);
  if (!v) throw std::runtime_error("report lacks verdict " + name);
  return *v;
}

void example_31_verdicts(Check& c) {
  AnalysisParameters p;
  p.resolution = 8;
  const AnalysisReport r = analyze(builtin("example-3-1"), p);
  const Verdict& t = verdict(r, "transitivity");
  c.expect(t.status == Status::fails && t.certified, "transitivity should be a certified Fails");
  c.expect(t.witness && t.witness->find_set("seed") && *t.witness->find_set("seed") == S("[[1/3,4/9]]"),
           "witness seed should be [1/3,4/9]");
  c.expect(t.witness && t.witness->find_set("hull") && *t.witness->find_set("hull") == S("[[0,4/9],[2/3,1]]"),
           "witness hull should be [0,4/9] u [2/3,1]");
  const HullResult h = forward_hull(r.map, S("[[1/3,4/9]]"));
  c.expect(h.converged && h.hull == S("[[0,4/9],[2/3,1]]"), "independent hull recomputation disagrees");
  c.expect(verdict(r, "strong-indecomposability").status == Status::holds, "strong indecomposability should hold");
  c.expect(r.core.set == S("[[0,1/3],[2/3,1]]"), "core should be [0,1/3] u [2/3,1], got " + r.core.set.str());
}

void example_31_decomposition(Check& c) {
  const MapModel f = builtin("example-3-1");
  const DecompositionResult d = cycle_decomposition(f, 6);
  c.expect(d.decomposition.has_value(), "no decomposition returned");
  if (!d.decomposition) return;
  const auto& j = d.decomposition->intervals;
  c.expect(d.decomposition->n == 2 && j.size() == 2, "n should be 2");
  if (j.size() != 2) return;
  c.expect(j[0] == ClosedInterval{0, Rational(1, 3)} && j[1] == ClosedInterval{Rational(2, 3), 1},
           "intervals should be [0,1/3] and [2/3,1]");
  c.expect(f.image_interval(j[0]) == j[1], "f(J_0) != J_1");
  c.expect(f.image_interval(j[1]) == j[0], "f(J_1) != J_0");
  const MapModel g = derived_map(f, 2, j[0]);
  c.expect(check_transitivity(g, 6).status == Status::holds, "f^2 on J_0 should be transitive at k=6");
  c.expect(periodic_density_check(g, 5, 10).status == Status::holds, "f^2 on J_0 should have dense periodic points");
}

void example_32_verdicts(Check& c) {
  const MapModel f = builtin("example-3-2");
  c.expect(check_indecomposable(f, 6).status == Status::holds, "indecomposability should hold at k=6");
  const HullResult h = forward_hull(f, S("[[1/2,3/4]]"));
  c.expect(h.converged && h.hull == S("[[1/2,1]]"), "hull([1/2,3/4]) should be [1/2,1]");
  // Pairwise checks over all dyadic cells at k=6: the meet of two hulls contains [1 - min(|I|,|J|)/4, 1].
  const auto cells = dyadic_cells(f.domain(), 6);
  std::vector<IntervalSet> hulls;
  for (const auto& cell : cells) hulls.push_back(forward_hull(f, IntervalSet(cell)).hull);
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a; b < cells.size(); ++b) {
      const Rational tail = Rational(1) - min(cells[a].length(), cells[b].length()) / Rational(4);
      c.expect(intersect(hulls[a], hulls[b]).contains(IntervalSet({tail, 1})),
               "pairwise meet too small for " + cells[a].str() + ", " + cells[b].str());
    }
  }
  Budget b;
  b.family_depth = kFamilyDepth;
  const auto s = check_strong_indecomposable(f, 10, b);
  c.expect(s.verdict.status == Status::fails && s.verdict.certified, "strong indecomposability should fail");
  for (int t = 1; t <= kFamilyDepth; ++t) {
    const IntervalSet expected({Rational(1) - Rational::pow2(-t), Rational(1)});
    const IntervalSet* a = s.verdict.witness ? s.verdict.witness->find_set("A_" + std::to_string(t)) : nullptr;
    c.expect(a && *a == expected, "family member " + std::to_string(t) + " differs from [1-1/2^t,1]");
    c.expect(f.image_set(expected).components().size() == 1 && expected.contains(f.image_set(expected)),
             "f(J_" + std::to_string(t) + ") not inside J_" + std::to_string(t));
  }
}

void example_32_periodic(Check& c) {
  const MapModel f = builtin("example-3-2");
  const PeriodicSet p = periodic_points(f, 6);
  std::vector<Rational> pts;
  for (const auto& x : p.findings) {
    c.expect(x.kind == PeriodicFinding::Kind::point && x.least_period == 1, "unexpected finding kind or period");
    pts.push_back(x.location.lo);
  }
  c.expect(pts == std::vector<Rational>{0, 1}, "periodic set should be exactly {0,1}");
  const Verdict g = staircase_gap_check();
  c.expect(g.status == Status::holds && g.certified, "gap check should hold");
  const Verdict d = periodic_density_check(f, 6, 6);
  c.expect(d.status == Status::fails && d.certified && d.witness && d.witness->find_set("cell"),
           "periodic density should fail with a witness cell");
  if (d.witness && d.witness->find_set("cell")) {
    const ClosedInterval cell = d.witness->find_set("cell")->span();
    c.expect(!cell.contains(Rational(0)) && !cell.contains(Rational(1)), "witness cell contains a periodic point");
  }
  c.expect(check_devaney(f, 6, 6).overall.status == Status::fails, "Devaney should fail");
}

void tent_control(Check& c) {
  const MapModel f = builtin("tent");
  const DevaneyResult d = check_devaney(f, 6, 10);
  c.expect(d.via_transitivity.status == Status::holds, "route via transitivity");
  c.expect(d.via_strong.status == Status::holds, "route via strong indecomposability");
  c.expect(d.via_indecomposable.status == Status::holds, "route via indecomposability");
  c.expect(d.overall.status == Status::holds && d.consistent, "overall Devaney");
  for (int p = 1; p <= kTentMaxPower; ++p) {
    const PLMap fp = iterate_pl(f.as_pl(), p);
    std::size_t oracle = 0;
    for (std::size_t i = 0; i < fp.piece_count(); ++i) {
      const LinearPiece q = fp.piece(i);
      const Rational gu = q.y0 - q.x0, gv = q.y1 - q.x1;
      if (gu.is_zero() || gu.sign() * gv.sign() < 0) ++oracle;
    }
    if (fp.breakpoints().back().y == fp.breakpoints().back().x) ++oracle;
    const std::size_t expected = std::size_t{1} << p;
    c.expect(fixed_points_pl(fp).size() == expected && oracle == expected,
             "fixed points of tent^" + std::to_string(p));
  }
}

void route_consistency(Check& c) {
  const std::vector<MapModel> corpus{builtin("tent"), builtin("example-3-1"), builtin("example-3-2"),
                                     builtin("identity"), builtin("constant", Rational(1, 2))};
  for (const auto& m : corpus) {
    for (int k : {4, 6}) {
      const DevaneyResult d = check_devaney(m, k, 8);
      c.expect(d.consistent, m.name() + " routes contradict at k=" + std::to_string(k));
    }
  }
}

void weak_from_indecomposable(Check& c) {
  const std::vector<MapModel> corpus{builtin("tent"), builtin("example-3-1"), builtin("example-3-2"),
                                     builtin("identity"), builtin("constant", Rational(1, 2))};
  for (const auto& m : corpus) {
    if (check_indecomposable(m, 6).status != Status::holds) continue;
    c.expect(weak_indecomposability_check(m, kGridSeeds, 6, 64, 64).status != Status::fails,
             m.name() + " is indecomposable but the weak check failed");
  }
  const MapModel s = builtin("example-3-2");
  const IntervalSet expected({Rational(1) - Rational::pow2(-10), Rational(1)});
  for (const auto& x : grid_seeds(s.domain(), kGridSeeds)) {
    const OmegaEstimate w = omega_estimate(s, x, 64, 64, 10);
    c.expect(w.cover == expected, "seed " + x.str() + " has cover " + w.cover.str());
  }
}

void ordering_property(Check& c) {
  const MapModel s = builtin("example-3-2");
  const Verdict cert = staircase_gap_check();
  for (int run = 0; run < kOracleRuns; ++run) {
    long a = uniform(1, 999), b = uniform(1, 999);
    if (a > b) std::swap(a, b);
    if (a == b) ++b;
    const ClosedInterval j{Rational(a, 1000), Rational(b, 1000)};
    const Rational z = j.lo + j.length() * Rational(uniform(0, 97), 97);
    const Verdict v = ordering_oracle(s, j, z, cert);
    c.expect(v.status != Status::fails, "oracle failed for J=" + j.str() + " z=" + z.str());
  }
}

PLMap random_map() {
  const long pieces = uniform(1, 8);
  std::vector<long> xs{0, 48};
  while (static_cast<long>(xs.size()) < pieces + 1) {
    const long x = uniform(1, 47);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Breakpoint> pts;
  for (long x : xs) pts.push_back({Rational(x, 48), Rational(uniform(0, 12), 12)});
  return PLMap({0, 1}, pts);
}

IntervalSet random_set(long den) {
  std::vector<ClosedInterval> raw;
  for (long i = uniform(0, 4); i > 0; --i) {
    long a = uniform(0, den), b = uniform(0, 4) == 0 ? a : uniform(0, den);
    if (a > b) std::swap(a, b);
    raw.push_back({Rational(a, den), Rational(b, den)});
  }
  return IntervalSet::normalize(raw);
}

void property_suites(Check& c) {
  int converged = 0;
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const MapModel m(random_map(), "random");
    IntervalSet u = random_set(64);
    if (u.empty()) u = IntervalSet({Rational(1, 4), Rational(1, 2)});
    const IntervalSet v = unite(u, random_set(64));
    const HullResult hu = forward_hull(m, u), hv = forward_hull(m, v);
    c.expect(hu.hull.contains(u), "hull misses its seed");
    if (!hu.converged) continue;
    ++converged;
    c.expect(hu.hull.contains(m.image_set(hu.hull)), "converged hull not invariant");
    c.expect(forward_hull(m, hu.hull).hull == hu.hull, "hull not idempotent");
    if (hv.converged) c.expect(hv.hull.contains(hu.hull), "hull not monotone");
  }
  c.expect(converged * 2 >= kPropertyTrials, "fewer than half of the random hulls converged");
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const IntervalSet a = random_set(1024), b = random_set(1024);
    const IntervalSet un = unite(a, b), in = intersect(a, b);
    bool agree = true;
    for (long j = 0; j <= kGridDenominator && agree; ++j) {
      const Rational x(j, kGridDenominator);
      agree = un.contains(x) == (a.contains(x) || b.contains(x)) && in.contains(x) == (a.contains(x) && b.contains(x));
    }
    c.expect(agree, "set algebra disagrees with grid oracle on " + a.str() + ", " + b.str());
  }
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "four-piece map: not transitive, strongly indecomposable", kLimitExample31, example_31_verdicts},
      {2, "four-piece map: 2-cycle decomposition, chaotic square on J_0", kLimitDecomposition,
       example_31_decomposition},
      {3, "staircase: indecomposable, shrinking invariant family", kLimitExample32, example_32_verdicts},
      {4, "staircase: periodic set {0,1}, density and Devaney fail", kLimitPeriodicSet, example_32_periodic},
      {5, "tent control: Devaney on all routes, 2^p fixed points", kLimitTent, tent_control},
      {6, "composite routes never contradict on the corpus", kNoLimit, route_consistency},
      {7, "indecomposable maps are not weakly split; staircase omega covers", kNoLimit, weak_from_indecomposable},
      {8, "ordering oracle never fails on periodic-free intervals", kNoLimit, ordering_property},
      {9, "hull and set-algebra property suites", kLimitProperties, property_suites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "runtime %.2f s exceeds %.0f s", secs, cr.limit_seconds);
      c.failures.push_back(buf);
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
