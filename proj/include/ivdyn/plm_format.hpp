#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ivdyn/map_model.hpp"

namespace ivdyn {

// Line-oriented `.plm` map files:
//
//   plmap                 | staircase
//   domain <lo> <hi>
//   <x> <y>               one breakpoint per line, increasing x
//
// `#` starts a comment, blank lines are ignored.

MapModel parse_plm(std::string_view text, std::string name = "custom");
std::string print_plm(const MapModel& m);

MapModel load_plm(const std::filesystem::path& path);

/// Resolves `builtin:<name>[:<param>]`, a bare builtin name, or a `.plm` path.
MapModel resolve_map(const std::string& spec);

}  // namespace ivdyn
