#pragma once

#include <optional>
#include <vector>

#include "rubikmap/map.hpp"
#include "rubikmap/permutation.hpp"

namespace rubikmap {

// Corner orientation bookkeeping. Corners are identified with darts (see
// RubikPresentation), so a corner permutation here is a permutation of
// darts. The three corners at a vertex are ordered by sigma, and the
// rotation r steps one place along that order.

/// Residue mod 3.
class Shift {
public:
  constexpr Shift() = default;
  constexpr explicit Shift(long long k) : value_(static_cast<int>(((k % 3) + 3) % 3)) {}
  constexpr int value() const noexcept { return value_; }
  friend constexpr Shift operator+(Shift a, Shift b) { return Shift(a.value_ + b.value_); }
  friend constexpr Shift operator-(Shift a, Shift b) { return Shift(a.value_ - b.value_ + 3); }
  friend constexpr bool operator==(Shift, Shift) = default;

private:
  int value_ = 0;
};

/// One chosen corner per vertex (indexed by vertex).
using CornerSelection = std::vector<Dart>;

/// Corners of vertex `v` starting at its smallest dart, in sigma order.
std::vector<Dart> corner_triple(const Map &m, std::size_t v);

/// The k with r^k(c) = c2. Throws DifferentVertices.
Shift sh_pair(const Map &m, Dart c, Dart c2);

/// Maps every vertex triple onto a vertex triple, keeping the cyclic order.
bool is_ormap(const Map &m, const Permutation &corner_perm);

/// Smallest dart at each vertex.
CornerSelection canonical_selection(const Map &m);

/// Aggregate shift of an orientation-preserving corner permutation f:
/// the sum over vertices of sh(phi(f(v)), f(phi(v))), i.e. how far f
/// turns each chosen corner past the chosen corner of its target vertex.
/// Independent of the selection. Throws NotOrientationPreserving.
Shift sh(const Map &m, const Permutation &corner_perm,
         const std::optional<CornerSelection> &selection = std::nullopt);

/// 3-cycle c_i -> c_{i+1} on the corners of `v`, identity elsewhere.
Permutation single_vertex_twist(const Map &m, std::size_t v);

} // namespace rubikmap
