#include "rubikmap/builders.hpp"

#include <map>
#include <utility>

#include "rubikmap/error.hpp"

namespace rubikmap {

Map from_oriented_faces(const std::vector<std::vector<std::size_t>> &faces, std::string name)
{
  // One dart per directed edge u->v, sitting at u. alpha reverses it; the
  // face containing u->v continues with v->w, and phi = sigma ∘ alpha makes
  // sigma(v->u) = v->w.
  std::map<std::pair<std::size_t, std::size_t>, Dart> dart_of;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto &face : faces) {
    if (face.size() < 2)
      throw Error(ErrorCode::MalformedInput, "face with fewer than two vertices");
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto key = std::make_pair(face[i], face[(i + 1) % face.size()]);
      if (dart_of.contains(key))
        throw Error(ErrorCode::MalformedInput, "directed edge used by two faces; orientation is inconsistent");
      dart_of.emplace(key, static_cast<Dart>(ends.size()));
      ends.push_back(key);
    }
  }
  const std::size_t n = ends.size();
  std::vector<Dart> sigma(n, static_cast<Dart>(n));
  std::vector<std::array<Dart, 2>> pairs;
  for (Dart d = 0; d < n; ++d) {
    auto [u, v] = ends[d];
    auto rev = dart_of.find({v, u});
    if (rev == dart_of.end())
      throw Error(ErrorCode::MalformedInput, "edge borders only one face");
    if (d < rev->second)
      pairs.push_back({d, rev->second});
  }
  for (const auto &face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      std::size_t u = face[i];
      std::size_t v = face[(i + 1) % face.size()];
      std::size_t w = face[(i + 2) % face.size()];
      sigma[dart_of.at({v, u})] = dart_of.at({v, w});
    }
  }
  std::vector<std::vector<Dart>> cycles;
  std::vector<bool> seen(n, false);
  for (Dart start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<Dart> cycle;
    for (Dart d = start; !seen[d]; d = sigma[d]) {
      seen[d] = true;
      cycle.push_back(d);
    }
    cycles.push_back(std::move(cycle));
  }
  return Map::from_rotation_system(cycles, pairs, std::move(name));
}

Map prism(std::size_t n)
{
  if (n < 3)
    throw Error(ErrorCode::ParameterOutOfRange, "prism needs n >= 3");
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> top, bottom;
  for (std::size_t i = 0; i < n; ++i) {
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
  }
  faces.push_back(top);
  faces.push_back(bottom);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    faces.push_back({j, i, n + i, n + j});
  }
  return from_oriented_faces(faces, "prism" + std::to_string(n));
}

Map platonic(std::string_view which)
{
  if (which == "tetrahedron")
    return from_oriented_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, "tetrahedron");
  if (which == "cube")
    return prism(4).renamed("cube");
  if (which == "dodecahedron")
    return from_oriented_faces({{0, 1, 2, 3, 4},
                                {0, 4, 5, 6, 7},
                                {8, 6, 5, 9, 10},
                                {8, 10, 11, 12, 13},
                                {14, 15, 2, 1, 16},
                                {14, 12, 11, 17, 15},
                                {4, 3, 18, 9, 5},
                                {15, 17, 18, 3, 2},
                                {10, 9, 18, 17, 11},
                                {7, 6, 8, 13, 19},
                                {16, 1, 0, 7, 19},
                                {13, 12, 14, 16, 19}},
                               "dodecahedron");
  throw Error(ErrorCode::ParameterOutOfRange, "unknown platonic solid '" + std::string(which) + "'");
}

Map theta()
{
  return Map::from_rotation_system({{0, 1, 2}, {3, 5, 4}}, {{0, 3}, {1, 4}, {2, 5}}, "theta");
}

Map truncate(const Map &m)
{
  // Dart d of m becomes the vertex {3d, 3d+1, 3d+2}: 3d runs along the old
  // edge, 3d+1 toward the new vertex of sigma(d), 3d+2 toward sigma^-1(d).
  const auto n = static_cast<Dart>(m.num_darts());
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::array<Dart, 2>> pairs;
  for (Dart d = 0; d < n; ++d) {
    cycles.push_back({3 * d, 3 * d + 1, 3 * d + 2});
    if (d < m.alpha(d))
      pairs.push_back({3 * d, 3 * m.alpha(d)});
    pairs.push_back({3 * d + 1, 3 * m.sigma(d) + 2});
  }
  return Map::from_rotation_system(cycles, pairs, "truncated_" + m.name());
}

Map hex_torus(std::size_t m, std::size_t n)
{
  if (m < 2 || n < 2)
    throw Error(ErrorCode::ParameterOutOfRange, "hex_torus needs m, n >= 2");
  // Cell (i, j) holds vertices A = 2c and B = 2c+1. A(i,j) meets B(i,j),
  // B(i-1,j), B(i,j-1); darts are listed counterclockwise at each vertex.
  auto cell = [&](std::size_t i, std::size_t j) { return (i % m) * n + (j % n); };
  auto a_dart = [&](std::size_t c, std::size_t k) { return static_cast<Dart>(6 * c + k); };
  auto b_dart = [&](std::size_t c, std::size_t k) { return static_cast<Dart>(6 * c + 3 + k); };
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::array<Dart, 2>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = cell(i, j);
      // A: 0 -> B(i,j), 1 -> B(i-1,j), 2 -> B(i,j-1)
      // B: 0 -> A(i+1,j), 1 -> A(i,j+1), 2 -> A(i,j)
      cycles.push_back({a_dart(c, 0), a_dart(c, 1), a_dart(c, 2)});
      cycles.push_back({b_dart(c, 0), b_dart(c, 1), b_dart(c, 2)});
      pairs.push_back({a_dart(c, 0), b_dart(c, 2)});
      pairs.push_back({a_dart(c, 1), b_dart(cell(i + m - 1, j), 0)});
      pairs.push_back({a_dart(c, 2), b_dart(cell(i, j + n - 1), 1)});
    }
  }
  return Map::from_rotation_system(cycles, pairs,
                                   "hex_torus_" + std::to_string(m) + "x" + std::to_string(n));
}

} // namespace rubikmap
