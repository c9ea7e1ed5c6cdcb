#include "rubikmap/map_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"

namespace rubikmap {

using nlohmann::json;

json map_to_json(const Map &m)
{
  json sigma = json::array();
  for (const auto &v : m.vertices())
    sigma.push_back({v[0] + 1, v[1] + 1, v[2] + 1});
  json alpha = json::array();
  for (const auto &[a, b] : m.alpha_pairs())
    alpha.push_back({a + 1, b + 1});
  return json{{"name", m.name()}, {"darts", m.num_darts()}, {"sigma", sigma}, {"alpha", alpha}};
}

namespace {

Dart read_dart(const json &value, std::size_t darts)
{
  if (!value.is_number_integer())
    throw Error(ErrorCode::MalformedInput, "dart ids must be integers");
  auto id = value.get<long long>();
  if (id < 1 || static_cast<std::size_t>(id) > darts)
    throw Error(ErrorCode::MalformedInput, "dart id " + std::to_string(id) + " outside 1.." +
                                               std::to_string(darts));
  return static_cast<Dart>(id - 1);
}

} // namespace

Map map_from_json(const json &doc)
{
  static const std::set<std::string> known{"name", "darts", "sigma", "alpha"};
  if (!doc.is_object())
    throw Error(ErrorCode::MalformedInput, "map document must be an object");
  for (const auto &[key, _] : doc.items())
    if (!known.contains(key))
      throw Error(ErrorCode::MalformedInput, "unknown field '" + key + "'");
  for (const auto &key : known)
    if (!doc.contains(key))
      throw Error(ErrorCode::MalformedInput, "missing field '" + key + "'");
  if (!doc["name"].is_string())
    throw Error(ErrorCode::MalformedInput, "'name' must be a string");
  if (!doc["darts"].is_number_unsigned())
    throw Error(ErrorCode::MalformedInput, "'darts' must be a non-negative integer");
  const auto darts = doc["darts"].get<std::size_t>();
  if (darts == 0 || darts % 2 != 0)
    throw Error(ErrorCode::MalformedInput, "dart count must be positive and even, got " +
                                               std::to_string(darts));
  if (!doc["sigma"].is_array() || !doc["alpha"].is_array())
    throw Error(ErrorCode::MalformedInput, "'sigma' and 'alpha' must be lists");

  std::vector<std::vector<Dart>> cycles;
  std::size_t listed = 0;
  for (const auto &c : doc["sigma"]) {
    if (!c.is_array())
      throw Error(ErrorCode::MalformedInput, "sigma entries must be lists");
    std::vector<Dart> cycle;
    for (const auto &d : c)
      cycle.push_back(read_dart(d, darts));
    listed += cycle.size();
    cycles.push_back(std::move(cycle));
  }
  if (listed != darts)
    throw Error(ErrorCode::MalformedInput, "sigma lists " + std::to_string(listed) +
                                               " darts, expected " + std::to_string(darts));
  std::vector<std::array<Dart, 2>> pairs;
  for (const auto &p : doc["alpha"]) {
    if (!p.is_array() || p.size() != 2)
      throw Error(ErrorCode::MalformedInput, "alpha entries must be pairs");
    pairs.push_back({read_dart(p[0], darts), read_dart(p[1], darts)});
  }
  return Map::from_rotation_system(cycles, pairs, doc["name"].get<std::string>());
}

void save(const Map &m, const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << map_to_json(m).dump(2) << '\n';
  if (!out)
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

Map load(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot read " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": " + e.what());
  }
  return map_from_json(doc);
}

namespace {

bool parse_size(std::string_view s, std::size_t &out)
{
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && !s.empty();
}

} // namespace

Map catalog_map(std::string_view name)
{
  try {
    if (name == "theta")
      return theta();
    if (name == "tetrahedron" || name == "cube" || name == "dodecahedron")
      return platonic(name);
    std::size_t k = 0;
    if (name.starts_with("prism") && parse_size(name.substr(5), k))
      return prism(k);
    if (name.starts_with("truncated_")) {
      Map inner = catalog_map(name.substr(10));
      return truncate(inner);
    }
    if (name.starts_with("hex_torus_")) {
      auto dims = name.substr(10);
      auto x = dims.find('x');
      std::size_t a = 0, b = 0;
      if (x != std::string_view::npos && parse_size(dims.substr(0, x), a) &&
          parse_size(dims.substr(x + 1), b))
        return hex_torus(a, b);
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::ParameterOutOfRange)
      throw Error(ErrorCode::UnknownMap, "catalog entry '" + std::string(name) + "': " + e.what());
    throw;
  }
  throw Error(ErrorCode::UnknownMap, "no catalog map named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names()
{
  std::vector<std::string> names{"theta", "tetrahedron", "cube", "dodecahedron"};
  for (int k = 3; k <= 10; ++k)
    names.push_back("prism" + std::to_string(k));
  names.insert(names.end(), {"truncated_tetrahedron", "truncated_cube", "hex_torus_2x3"});
  return names;
}

Map resolve_map(std::string_view spec)
{
  std::filesystem::path path{std::string(spec)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec))
    return load(path);
  return catalog_map(spec);
}

} // namespace rubikmap
