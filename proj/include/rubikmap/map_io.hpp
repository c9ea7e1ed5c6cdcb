#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rubikmap/map.hpp"

namespace rubikmap {

// Map documents are JSON objects with exactly the keys
//   "name"  : string
//   "darts" : dart count (even)
//   "sigma" : list of 3-element cycles of one-based darts
//   "alpha" : list of 2-element pairs of one-based darts
// Unknown keys are rejected. See docs/formats.md.

nlohmann::json map_to_json(const Map &m);
Map map_from_json(const nlohmann::json &doc);

/// Throws IoError.
void save(const Map &m, const std::filesystem::path &path);
/// Throws IoError or MalformedInput.
Map load(const std::filesystem::path &path);

/// Built-in maps by name: theta, tetrahedron, cube, dodecahedron, prismN,
/// truncated_<name>, hex_torus_MxN. Throws UnknownMap.
Map catalog_map(std::string_view name);

/// A representative list of catalog names.
std::vector<std::string> catalog_names();

/// `spec` is either a catalog name or a path to a map file.
Map resolve_map(std::string_view spec);

} // namespace rubikmap
