#include "ivdyn/report.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "ivdyn/orbit.hpp"
#include "ivdyn/plm_format.hpp"

namespace ivdyn {

using nlohmann::json;

std::vector<const Verdict*> AnalysisReport::verdicts() const {
  return {&devaney.transitivity,     &devaney.strong,     &devaney.indecomposable,
          &weak,                     &devaney.density,    &sensitivity,
          &gap,                      &devaney.via_transitivity, &devaney.via_strong,
          &devaney.via_indecomposable, &devaney.overall,  &decomposition.verdict};
}

const Verdict* AnalysisReport::find(const std::string& property) const {
  for (const Verdict* v : verdicts()) {
    if (v->property == property) return v;
  }
  return nullptr;
}

AnalysisReport analyze(const MapModel& m, const AnalysisParameters& params) {
  const auto start = std::chrono::steady_clock::now();
  const int k = params.resolution;
  const Budget& budget = params.budget;

  auto strong = check_strong_indecomposable(m, k, budget);
  AnalysisReport r{m,
                   params,
                   combine_devaney(check_transitivity(m, k, budget), strong.verdict,
                                   check_indecomposable(m, k, budget),
                                   periodic_density_check(m, k, params.max_period, budget)),
                   weak_indecomposability_check(m, params.weak_samples, k, params.weak_burn_in, params.weak_tail,
                                                budget.denominator_bits),
                   sensitivity_sufficient(m),
                   gap_check(m),
                   strong.core,
                   {},
                   periodic_points(m, params.max_period, budget),
                   0};
  if (strong.verdict.status == Status::holds) {
    r.decomposition = cycle_decomposition(m, k, budget);
  } else {
    r.decomposition.verdict.property = "cycle-decomposition";
    r.decomposition.verdict.resolution = k;
    r.decomposition.verdict.note = "not applicable: strong indecomposability is " + to_string(strong.verdict.status);
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json set_to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& c : s.components()) out.push_back({c.lo.str(), c.hi.str()});
  return out;
}

IntervalSet set_from_json(const json& j) {
  std::vector<ClosedInterval> raw;
  for (const auto& c : j) {
    raw.push_back({Rational::parse(c.at(0).get<std::string>()), Rational::parse(c.at(1).get<std::string>())});
  }
  return IntervalSet::normalize(std::move(raw), SIZE_MAX);
}

json verdict_to_json(const Verdict& v) {
  json out{{"property", v.property},
           {"status", to_string(v.status)},
           {"certified", v.certified},
           {"empirical", v.empirical},
           {"resolution", v.resolution ? json(*v.resolution) : json(nullptr)},
           {"note", v.note}};
  if (v.witness) {
    json sets = json::array();
    for (const auto& s : v.witness->sets) sets.push_back({{"label", s.label}, {"components", set_to_json(s.set)}});
    json values = json::array();
    for (const auto& [label, value] : v.witness->values) values.push_back({{"label", label}, {"value", value.str()}});
    out["witness"] = {{"description", v.witness->description}, {"sets", sets}, {"values", values}};
  } else {
    out["witness"] = nullptr;
  }
  out["budget"] = {{"hulls", v.budget.hulls},
                   {"hull_iterations", v.budget.hull_iterations},
                   {"unconverged_hulls", v.budget.unconverged_hulls},
                   {"max_components", v.budget.max_components},
                   {"highest_complete_period", v.budget.highest_complete_period},
                   {"orbit_steps", v.budget.orbit_steps}};
  return out;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.property = j.at("property").get<std::string>();
  v.status = status_from_string(j.at("status").get<std::string>());
  v.certified = j.at("certified").get<bool>();
  v.empirical = j.at("empirical").get<bool>();
  if (!j.at("resolution").is_null()) v.resolution = j.at("resolution").get<int>();
  v.note = j.at("note").get<std::string>();
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    Witness out;
    out.description = w.at("description").get<std::string>();
    for (const auto& s : w.at("sets")) out.sets.push_back({s.at("label").get<std::string>(), set_from_json(s.at("components"))});
    for (const auto& val : w.at("values")) {
      out.values.emplace_back(val.at("label").get<std::string>(), Rational::parse(val.at("value").get<std::string>()));
    }
    v.witness = std::move(out);
  }
  const json& b = j.at("budget");
  v.budget.hulls = b.at("hulls").get<std::size_t>();
  v.budget.hull_iterations = b.at("hull_iterations").get<std::size_t>();
  v.budget.unconverged_hulls = b.at("unconverged_hulls").get<std::size_t>();
  v.budget.max_components = b.at("max_components").get<std::size_t>();
  v.budget.highest_complete_period = b.at("highest_complete_period").get<int>();
  v.budget.orbit_steps = b.at("orbit_steps").get<std::size_t>();
  return v;
}

json periodic_to_json(const PeriodicSet& p) {
  json findings = json::array();
  for (const auto& f : p.findings) {
    findings.push_back({{"kind", f.kind == PeriodicFinding::Kind::point ? "point" : "segment"},
                        {"location", {f.location.lo.str(), f.location.hi.str()}},
                        {"least_period", f.least_period}});
  }
  return {{"max_period", p.max_period},
          {"highest_complete_period", p.highest_complete_period},
          {"exact", p.exact},
          {"note", p.note},
          {"findings", findings}};
}

json map_to_json(const MapModel& m) {
  return {{"name", m.name()}, {"kind", m.is_pl() ? "plmap" : "staircase"}, {"plm", print_plm(m)}};
}

json report_to_json(const AnalysisReport& r) {
  const auto& p = r.parameters;
  json verdicts = json::array();
  for (const Verdict* v : r.verdicts()) verdicts.push_back(verdict_to_json(*v));

  json decomposition = nullptr;
  if (r.decomposition.decomposition) {
    const auto& d = *r.decomposition.decomposition;
    json intervals = json::array();
    for (const auto& j : d.intervals) intervals.push_back({j.lo.str(), j.hi.str()});
    decomposition = {{"n", d.n}, {"intervals", intervals}};
  }

  return {
      {"schema_version", kReportSchemaVersion},
      {"map", map_to_json(r.map)},
      {"parameters",
       {{"resolution", p.resolution},
        {"max_period", p.max_period},
        {"hull_iterations", p.budget.hull_iterations},
        {"component_cap", p.budget.component_cap},
        {"piece_cap", p.budget.piece_cap},
        {"family_depth", p.budget.family_depth},
        {"denominator_bits", p.budget.denominator_bits},
        {"weak_samples", p.weak_samples},
        {"weak_burn_in", p.weak_burn_in},
        {"weak_tail", p.weak_tail}}},
      {"headline",
       {{"transitivity", to_string(r.devaney.transitivity.status)},
        {"strong_indecomposability", to_string(r.devaney.strong.status)},
        {"indecomposability", to_string(r.devaney.indecomposable.status)},
        {"weak_indecomposability", to_string(r.weak.status)},
        {"periodic_density", to_string(r.devaney.density.status)},
        {"sensitivity", to_string(r.sensitivity.status)},
        {"devaney", to_string(r.devaney.overall.status)},
        {"routes_consistent", r.devaney.consistent}}},
      {"verdicts", verdicts},
      {"core", {{"resolution", r.core.resolution}, {"invariant_verified", r.core.invariant_verified},
                {"set", set_to_json(r.core.set)}}},
      {"decomposition", decomposition},
      {"periodic", periodic_to_json(r.periodic)},
      {"timing", {{"elapsed_seconds", r.elapsed_seconds}}},
  };
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

}  // namespace ivdyn
