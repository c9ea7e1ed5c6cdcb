#include "rubikmap/orientation.hpp"

#include "rubikmap/error.hpp"

namespace rubikmap {

std::vector<Dart> corner_triple(const Map &m, std::size_t v)
{
  if (v >= m.num_vertices())
    throw Error(ErrorCode::ParameterOutOfRange, "vertex " + std::to_string(v + 1) + " not in map");
  return m.vertices()[v];
}

Shift sh_pair(const Map &m, Dart c, Dart c2)
{
  if (m.vertex_of(c) != m.vertex_of(c2))
    throw Error(ErrorCode::DifferentVertices, "corners " + std::to_string(c + 1) + " and " +
                                                  std::to_string(c2 + 1) + " lie at different vertices");
  Dart d = c;
  for (int k = 0; k < 3; ++k, d = m.sigma(d))
    if (d == c2)
      return Shift(k);
  throw Error(ErrorCode::NotTrivalent, "vertex rotation is not a 3-cycle");
}

bool is_ormap(const Map &m, const Permutation &f)
{
  if (f.degree() != m.num_darts())
    return false;
  for (const auto &triple : m.vertices()) {
    Dart image = f[triple[0]];
    for (int k = 1; k < 3; ++k) {
      image = m.sigma(image);
      if (f[triple[static_cast<std::size_t>(k)]] != image)
        return false;
    }
  }
  return true;
}

CornerSelection canonical_selection(const Map &m)
{
  CornerSelection sel;
  for (const auto &triple : m.vertices())
    sel.push_back(triple[0]);
  return sel;
}

Shift sh(const Map &m, const Permutation &f, const std::optional<CornerSelection> &selection)
{
  if (!is_ormap(m, f))
    throw Error(ErrorCode::NotOrientationPreserving, "corner permutation breaks a vertex triple");
  CornerSelection sel = selection ? *selection : canonical_selection(m);
  if (sel.size() != m.num_vertices())
    throw Error(ErrorCode::MalformedInput, "corner selection must pick one corner per vertex");
  for (std::size_t v = 0; v < sel.size(); ++v)
    if (sel[v] >= m.num_darts() || m.vertex_of(sel[v]) != v)
      throw Error(ErrorCode::MalformedInput, "selected corner is not at its vertex");

  Shift total;
  for (std::size_t v = 0; v < sel.size(); ++v) {
    Dart moved = f[sel[v]];
    Dart reference = sel[m.vertex_of(moved)];
    total = total + sh_pair(m, reference, moved);
  }
  return total;
}

Permutation single_vertex_twist(const Map &m, std::size_t v)
{
  const auto triple = corner_triple(m, v);
  return Permutation::from_cycles(m.num_darts(), {triple});
}

} // namespace rubikmap
