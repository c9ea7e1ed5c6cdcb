#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rubikmap/permutation.hpp"

namespace rubikmap {

/// Zero-based dart index. Map files and printed output are one-based.
using Dart = std::uint32_t;

/// Oriented 3-valent map stored as a rotation system over darts.
///
/// sigma rotates the three darts at a vertex, alpha swaps the two darts of
/// an edge, and the face permutation is phi = sigma ∘ alpha (alpha first):
/// phi(d) = sigma(alpha(d)). The face of dart d therefore contains the
/// edge of d and the corner at the vertex of d between sigma^-1(d) and d.
///
/// Vertices, edges and faces are numbered by their smallest dart and every
/// orbit is listed starting from that dart, so the numbering is canonical
/// for a given dart labelling.
class Map {
public:
  /// Cycles and pairs use zero-based darts and must cover 0..n-1 exactly.
  ///
  /// Throws MalformedInput (missing/duplicated dart, odd dart count),
  /// NotTrivalent, NotInvolution or Disconnected.
  static Map from_rotation_system(const std::vector<std::vector<Dart>> &sigma_cycles,
                                  const std::vector<std::array<Dart, 2>> &alpha_pairs,
                                  std::string name);

  const std::string &name() const noexcept { return name_; }
  Map renamed(std::string name) const;

  std::size_t num_darts() const noexcept { return sigma_.degree(); }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  const Permutation &sigma() const noexcept { return sigma_; }
  const Permutation &alpha() const noexcept { return alpha_; }
  const Permutation &phi() const noexcept { return phi_; }

  Dart sigma(Dart d) const noexcept { return sigma_[d]; }
  Dart alpha(Dart d) const noexcept { return alpha_[d]; }
  Dart phi(Dart d) const noexcept { return phi_[d]; }

  /// Darts of each vertex in sigma order.
  const std::vector<std::vector<Dart>> &vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<Dart>> &edges() const noexcept { return edges_; }
  /// Face boundaries in phi order; a p-gon lists p darts.
  const std::vector<std::vector<Dart>> &faces() const noexcept { return faces_; }

  std::size_t vertex_of(Dart d) const noexcept { return vertex_of_[d]; }
  std::size_t edge_of(Dart d) const noexcept { return edge_of_[d]; }
  std::size_t face_of(Dart d) const noexcept { return face_of_[d]; }

  long long euler_characteristic() const noexcept;
  long long genus() const noexcept;

  /// Sorted face sizes.
  std::vector<std::size_t> face_sizes() const;
  bool all_faces_odd() const;

  std::vector<std::vector<Dart>> sigma_cycles() const { return vertices_; }
  std::vector<std::array<Dart, 2>> alpha_pairs() const;

  /// Same map with darts renamed by `relabel` (dart d becomes relabel[d]).
  Map relabeled(const Permutation &relabel) const;

  /// Same rotation system, ignoring the name.
  friend bool operator==(const Map &a, const Map &b)
  {
    return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
  }

private:
  Map() = default;

  std::string name_;
  Permutation sigma_;
  Permutation alpha_;
  Permutation phi_;
  std::vector<std::vector<Dart>> vertices_;
  std::vector<std::vector<Dart>> edges_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> edge_of_;
  std::vector<std::size_t> face_of_;
};

} // namespace rubikmap
