#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ivdyn/devaney.hpp"
#include "ivdyn/hull.hpp"
#include "ivdyn/map_model.hpp"
#include "ivdyn/periodic.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisParameters {
  int resolution = 6;
  int max_period = 10;
  Budget budget;
  std::size_t weak_samples = 64;
  std::size_t weak_burn_in = 64;
  std::size_t weak_tail = 64;
};

struct AnalysisReport {
  MapModel map;
  AnalysisParameters parameters;
  DevaneyResult devaney;
  Verdict weak;
  Verdict sensitivity;
  Verdict gap;
  CoreSet core;
  DecompositionResult decomposition;
  PeriodicSet periodic;
  double elapsed_seconds = 0;

  /// Every verdict in report order.
  std::vector<const Verdict*> verdicts() const;
  const Verdict* find(const std::string& property) const;
  bool consistent() const { return devaney.consistent; }
};

AnalysisReport analyze(const MapModel& m, const AnalysisParameters& params);

nlohmann::json set_to_json(const IntervalSet& s);
IntervalSet set_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json periodic_to_json(const PeriodicSet& p);
nlohmann::json map_to_json(const MapModel& m);

/// The full report. The "timing" member is the only non-deterministic part.
nlohmann::json report_to_json(const AnalysisReport& r);

/// Writes via a temporary file and rename. Throws std::runtime_error when the
/// path is not writable.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace ivdyn
