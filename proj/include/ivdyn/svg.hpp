#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ivdyn/map_model.hpp"
#include "ivdyn/verdict.hpp"

namespace ivdyn {

/// Coordinates are rendered with this many significant digits. Rendering
/// never feeds back into analysis.
inline constexpr int kSvgSignificantDigits = 9;

struct CobwebOptions {
  Rational seed;
  std::size_t steps = 20;
  /// Last staircase piece index drawn; the tail towards 1 is omitted.
  long staircase_truncation = 8;
};

/// Graph polyline, diagonal, and a cobweb path of two segments per step.
std::string cobweb_svg(const MapModel& m, const CobwebOptions& options);
/// One horizontal track per labeled set, exact endpoints in tooltips.
std::string sets_svg(const ClosedInterval& domain, const std::vector<LabeledSet>& rows, const std::string& title);

void render_cobweb(const MapModel& m, const CobwebOptions& options, const std::filesystem::path& out);
void render_sets(const ClosedInterval& domain, const std::vector<LabeledSet>& rows, const std::string& title,
                 const std::filesystem::path& out);

}  // namespace ivdyn
