// ivdyn: command-line front end for the interval-dynamics analyzer.
//
// Exit codes: 0 completed (whatever the verdicts), 1 usage or parse error,
// 2 internal consistency failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivdyn/devaney.hpp"
#include "ivdyn/errors.hpp"
#include "ivdyn/hull.hpp"
#include "ivdyn/orbit.hpp"
#include "ivdyn/periodic.hpp"
#include "ivdyn/plm_format.hpp"
#include "ivdyn/report.hpp"
#include "ivdyn/svg.hpp"

namespace {

using nlohmann::json;
using namespace ivdyn;

constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct Options {
  std::string map_spec;
  int resolution = 6;
  int max_period = 10;
  std::size_t hull_iters = Budget{}.hull_iterations;
  std::size_t components = Budget{}.component_cap;
  int family_depth = Budget{}.family_depth;
  std::string report_path;
  std::string svg_path;
  int power = 1;
  std::string restrict_to;

  std::string x;
  std::string seed;
  std::size_t steps = 20;
  std::string seed_set;
  std::string property;
  bool sets_mode = false;
  std::vector<std::string> extra_sets;
  long truncate = 8;

  Budget budget() const {
    Budget b;
    b.hull_iterations = hull_iters;
    b.component_cap = components;
    b.family_depth = family_depth;
    return b;
  }
};

MapModel load_map(const Options& o) {
  MapModel m = resolve_map(o.map_spec);
  std::optional<ClosedInterval> sub;
  if (!o.restrict_to.empty()) sub = ClosedInterval::parse(o.restrict_to);
  return derived_map(m, o.power, sub);
}

json findings_json(const PeriodicSet& p) { return periodic_to_json(p); }

void emit(const Options& o, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!o.report_path.empty()) write_file_atomically(o.report_path, text);
}

json base_doc(const MapModel& m, const std::string& command) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}, {"map", map_to_json(m)}};
}

int run_eval(const Options& o) {
  MapModel m = load_map(o);
  const Rational x = Rational::parse(o.x);
  json doc = base_doc(m, "eval");
  doc["x"] = x.str();
  doc["value"] = m.eval(x).str();
  emit(o, doc);
  return 0;
}

int run_orbit(const Options& o) {
  MapModel m = load_map(o);
  const OrbitRecord r = orbit(m, Rational::parse(o.seed), o.steps);
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(p.str());
  json doc = base_doc(m, "orbit");
  doc["seed"] = r.seed.str();
  doc["points"] = pts;
  doc["truncated"] = r.truncated;
  emit(o, doc);
  return 0;
}

int run_hull(const Options& o) {
  MapModel m = load_map(o);
  const IntervalSet seed = IntervalSet::parse(o.seed_set);
  const HullResult h = forward_hull(m, seed, o.budget());
  json doc = base_doc(m, "hull");
  doc["seed"] = set_to_json(h.seed);
  doc["hull"] = set_to_json(h.hull);
  doc["iterations"] = h.iterations;
  doc["converged"] = h.converged;
  doc["invariant"] = is_invariant(m, h.hull);
  if (!h.stop_reason.empty()) doc["stop_reason"] = h.stop_reason;
  emit(o, doc);
  if (!o.svg_path.empty()) {
    render_sets(m.domain(), {{"seed", h.seed}, {"hull", h.hull}}, "forward hull under " + m.name(), o.svg_path);
  }
  return 0;
}

int run_periodic(const Options& o) {
  MapModel m = load_map(o);
  json doc = base_doc(m, "periodic");
  doc["periodic"] = findings_json(periodic_points(m, o.max_period, o.budget()));
  emit(o, doc);
  return 0;
}

int run_check(const Options& o) {
  MapModel m = load_map(o);
  const Budget budget = o.budget();
  const int k = o.resolution;
  json doc = base_doc(m, "check");
  int code = 0;
  if (o.property == "transitivity") {
    doc["verdict"] = verdict_to_json(check_transitivity(m, k, budget));
  } else if (o.property == "indecomposable") {
    doc["verdict"] = verdict_to_json(check_indecomposable(m, k, budget));
  } else if (o.property == "strong") {
    auto r = check_strong_indecomposable(m, k, budget);
    doc["verdict"] = verdict_to_json(r.verdict);
    doc["core"] = set_to_json(r.core.set);
  } else if (o.property == "weak") {
    doc["verdict"] = verdict_to_json(weak_indecomposability_check(m, 64, k, 64, 64));
  } else if (o.property == "density") {
    doc["verdict"] = verdict_to_json(periodic_density_check(m, k, o.max_period, budget));
  } else if (o.property == "sensitivity") {
    doc["verdict"] = verdict_to_json(sensitivity_sufficient(m));
  } else if (o.property == "gap") {
    doc["verdict"] = verdict_to_json(gap_check(m));
  } else if (o.property == "devaney") {
    DevaneyResult r = check_devaney(m, k, o.max_period, budget);
    json routes = json::array();
    for (const Verdict* v : {&r.transitivity, &r.strong, &r.indecomposable, &r.density, &r.via_transitivity,
                             &r.via_strong, &r.via_indecomposable}) {
      routes.push_back(verdict_to_json(*v));
    }
    doc["verdict"] = verdict_to_json(r.overall);
    doc["components"] = routes;
    doc["routes_consistent"] = r.consistent;
    if (!r.consistent) code = kExitInconsistent;
  } else {
    throw ParseError("unknown property '" + o.property +
                     "' (transitivity, indecomposable, strong, weak, density, sensitivity, gap, devaney)");
  }
  emit(o, doc);
  return code;
}

int run_decompose(const Options& o) {
  MapModel m = load_map(o);
  const DecompositionResult r = cycle_decomposition(m, o.resolution, o.budget());
  json doc = base_doc(m, "decompose");
  doc["verdict"] = verdict_to_json(r.verdict);
  if (r.decomposition) {
    json intervals = json::array();
    for (const auto& j : r.decomposition->intervals) intervals.push_back({j.lo.str(), j.hi.str()});
    doc["n"] = r.decomposition->n;
    doc["intervals"] = intervals;
    doc["core"] = set_to_json(r.decomposition->core.set);
  }
  emit(o, doc);
  if (!o.svg_path.empty() && r.decomposition) {
    std::vector<LabeledSet> rows{{"E", r.decomposition->core.set}};
    for (std::size_t i = 0; i < r.decomposition->intervals.size(); ++i) {
      rows.push_back({"J_" + std::to_string(i), IntervalSet(r.decomposition->intervals[i])});
    }
    render_sets(m.domain(), rows, "cycle decomposition of " + m.name(), o.svg_path);
  }
  return 0;
}

int run_analyze(const Options& o) {
  MapModel m = load_map(o);
  AnalysisParameters params;
  params.resolution = o.resolution;
  params.max_period = o.max_period;
  params.budget = o.budget();
  const AnalysisReport r = analyze(m, params);
  emit(o, report_to_json(r));
  if (!o.svg_path.empty()) {
    std::vector<LabeledSet> rows{{"E", r.core.set}};
    if (r.decomposition.decomposition) {
      const auto& d = *r.decomposition.decomposition;
      for (std::size_t i = 0; i < d.intervals.size(); ++i) rows.push_back({"J_" + std::to_string(i), IntervalSet(d.intervals[i])});
    }
    if (const Verdict* t = r.find("transitivity"); t && t->witness) {
      for (const auto& s : t->witness->sets) rows.push_back({"transitivity " + s.label, s.set});
    }
    render_sets(m.domain(), rows, "analysis of " + m.name(), o.svg_path);
  }
  return r.consistent() ? 0 : kExitInconsistent;
}

int run_render(const Options& o) {
  MapModel m = load_map(o);
  if (o.svg_path.empty()) throw ParseError("render needs --svg <path>");
  if (o.sets_mode) {
    std::vector<LabeledSet> rows;
    for (const auto& spec : o.extra_sets) {
      auto eq = spec.find('=');
      if (eq == std::string::npos) throw ParseError("--set expects label=[[lo,hi],...]");
      rows.push_back({spec.substr(0, eq), IntervalSet::parse(spec.substr(eq + 1))});
    }
    render_sets(m.domain(), rows, "sets for " + m.name(), o.svg_path);
  } else {
    CobwebOptions c;
    c.seed = o.seed.empty() ? m.domain().lo + m.domain().length() / Rational(3) : Rational::parse(o.seed);
    c.steps = o.steps;
    c.staircase_truncation = o.truncate;
    render_cobweb(m, c, o.svg_path);
  }
  json doc = base_doc(m, "render");
  doc["svg"] = o.svg_path;
  emit(o, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analyzer for interval maps: transitivity, indecomposability, periodic density, Devaney chaos"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--resolution", o.resolution, "dyadic resolution k")->check(CLI::Range(1, 20));
  app.add_option("--max-period", o.max_period, "largest period enumerated")->check(CLI::Range(1, 64));
  app.add_option("--hull-iters", o.hull_iters, "iteration budget per forward hull");
  app.add_option("--components", o.components, "component cap for interval sets");
  app.add_option("--family-depth", o.family_depth, "depth of shrinking-family verification");
  app.add_option("--report", o.report_path, "also write the JSON document here");
  app.add_option("--svg", o.svg_path, "SVG output path");
  app.add_option("--power", o.power, "analyze f^p instead of f")->check(CLI::PositiveNumber);
  app.add_option("--restrict", o.restrict_to, "restrict to an invariant interval [lo,hi]");

  auto* eval = app.add_subcommand("eval", "evaluate f(x) exactly");
  eval->add_option("map", o.map_spec, "map file, builtin name, or builtin:<name>[:<param>]")->required();
  eval->add_option("x", o.x)->required();

  auto* orb = app.add_subcommand("orbit", "exact orbit of a seed");
  orb->add_option("map", o.map_spec)->required();
  orb->add_option("seed", o.seed)->required();
  orb->add_option("--steps", o.steps);

  auto* hull = app.add_subcommand("hull", "forward hull of an interval set");
  hull->add_option("map", o.map_spec)->required();
  hull->add_option("set", o.seed_set, "e.g. [[1/3,4/9]]")->required();

  auto* per = app.add_subcommand("periodic", "enumerate periodic points");
  per->add_option("map", o.map_spec)->required();

  auto* check = app.add_subcommand("check", "decide one property");
  check->add_option("property", o.property, "transitivity|indecomposable|strong|weak|density|sensitivity|gap|devaney")
      ->required();
  check->add_option("map", o.map_spec)->required();

  auto* dec = app.add_subcommand("decompose", "cycle decomposition of the transitive core");
  dec->add_option("map", o.map_spec)->required();

  auto* ana = app.add_subcommand("analyze", "full verdict suite and report");
  ana->add_option("map", o.map_spec)->required();

  auto* ren = app.add_subcommand("render", "SVG cobweb plot or set chart");
  ren->add_option("map", o.map_spec)->required();
  ren->add_option("--seed", o.seed);
  ren->add_option("--steps", o.steps);
  ren->add_option("--truncate", o.truncate, "staircase piece index to draw up to");
  ren->add_flag("--sets", o.sets_mode, "draw labeled sets instead of a cobweb");
  ren->add_option("--set", o.extra_sets, "label=[[lo,hi],...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(o);
    if (*orb) return run_orbit(o);
    if (*hull) return run_hull(o);
    if (*per) return run_periodic(o);
    if (*check) return run_check(o);
    if (*dec) return run_decompose(o);
    if (*ana) return run_analyze(o);
    if (*ren) return run_render(o);
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
