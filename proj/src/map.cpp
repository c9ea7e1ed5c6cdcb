#include "rubikmap/map.hpp"

#include <algorithm>

#include "rubikmap/error.hpp"

namespace rubikmap {

namespace {

std::vector<std::vector<Dart>> orbits(const Permutation &p, std::vector<std::size_t> &owner)
{
  std::vector<std::vector<Dart>> result;
  owner.assign(p.degree(), 0);
  std::vector<bool> seen(p.degree(), false);
  for (Dart start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<Dart> orbit;
    for (Dart d = start; !seen[d]; d = p[d]) {
      seen[d] = true;
      owner[d] = result.size();
      orbit.push_back(d);
    }
    result.push_back(std::move(orbit));
  }
  return result;
}

std::string dart_name(Dart d) { return "dart " + std::to_string(d + 1); }

} // namespace

Map Map::from_rotation_system(const std::vector<std::vector<Dart>> &sigma_cycles,
                              const std::vector<std::array<Dart, 2>> &alpha_pairs,
                              std::string name)
{
  std::size_t n = 0;
  for (const auto &c : sigma_cycles)
    n += c.size();
  if (n == 0)
    throw Error(ErrorCode::MalformedInput, "a map needs at least one dart");
  if (n % 2 != 0)
    throw Error(ErrorCode::MalformedInput, "odd dart count " + std::to_string(n));

  std::vector<Point> sigma(n);
  std::vector<bool> seen(n, false);
  for (const auto &c : sigma_cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Dart d = c[i];
      if (d >= n)
        throw Error(ErrorCode::MalformedInput, dart_name(d) + " outside 1.." + std::to_string(n));
      if (seen[d])
        throw Error(ErrorCode::MalformedInput, dart_name(d) + " appears twice in sigma");
      seen[d] = true;
      sigma[d] = c[(i + 1) % c.size()];
    }
  }
  for (const auto &c : sigma_cycles)
    if (c.size() != 3)
      throw Error(ErrorCode::NotTrivalent,
                  "vertex of degree " + std::to_string(c.size()) + " at " + dart_name(c.front()));

  std::vector<Point> alpha(n);
  std::vector<bool> paired(n, false);
  for (const auto &[a, b] : alpha_pairs) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::MalformedInput, "alpha pair refers to a dart outside 1.." + std::to_string(n));
    if (a == b)
      throw Error(ErrorCode::NotInvolution, "alpha fixes " + dart_name(a));
    if (paired[a] || paired[b])
      throw Error(ErrorCode::NotInvolution, "alpha repeats " + dart_name(paired[a] ? a : b));
    paired[a] = paired[b] = true;
    alpha[a] = b;
    alpha[b] = a;
  }
  for (Dart d = 0; d < n; ++d)
    if (!paired[d])
      throw Error(ErrorCode::MalformedInput, dart_name(d) + " missing from alpha");

  Map m;
  m.name_ = std::move(name);
  m.sigma_ = Permutation(std::move(sigma));
  m.alpha_ = Permutation(std::move(alpha));
  m.phi_ = m.alpha_ * m.sigma_;

  // Connectivity: <sigma, alpha> transitive on darts.
  std::vector<bool> reached(n, false);
  std::vector<Dart> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.sigma_[d], m.alpha_[d]}) {
      if (!reached[e]) {
        reached[e] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  if (count != n)
    throw Error(ErrorCode::Disconnected, "map is not connected");

  m.vertices_ = orbits(m.sigma_, m.vertex_of_);
  m.edges_ = orbits(m.alpha_, m.edge_of_);
  m.faces_ = orbits(m.phi_, m.face_of_);
  return m;
}

Map Map::renamed(std::string name) const
{
  Map m = *this;
  m.name_ = std::move(name);
  return m;
}

long long Map::euler_characteristic() const noexcept
{
  return static_cast<long long>(num_vertices()) - static_cast<long long>(num_edges()) +
         static_cast<long long>(num_faces());
}

long long Map::genus() const noexcept { return (2 - euler_characteristic()) / 2; }

std::vector<std::size_t> Map::face_sizes() const
{
  std::vector<std::size_t> sizes;
  for (const auto &f : faces_)
    sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool Map::all_faces_odd() const
{
  return std::all_of(faces_.begin(), faces_.end(), [](const auto &f) { return f.size() % 2 == 1; });
}

std::vector<std::array<Dart, 2>> Map::alpha_pairs() const
{
  std::vector<std::array<Dart, 2>> pairs;
  for (const auto &e : edges_)
    pairs.push_back({e[0], e[1]});
  return pairs;
}

Map Map::relabeled(const Permutation &relabel) const
{
  if (relabel.degree() != num_darts())
    throw Error(ErrorCode::DomainMismatch, "relabeling has the wrong number of darts");
  std::vector<std::vector<Dart>> cycles;
  for (const auto &v : vertices_) {
    std::vector<Dart> c;
    for (Dart d : v)
      c.push_back(relabel[d]);
    cycles.push_back(std::move(c));
  }
  std::vector<std::array<Dart, 2>> pairs;
  for (const auto &e : edges_)
    pairs.push_back({relabel[e[0]], relabel[e[1]]});
  return from_rotation_system(cycles, pairs, name_);
}

} // namespace rubikmap
