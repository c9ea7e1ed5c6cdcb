#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rubikmap/map.hpp"

namespace rubikmap {

/// Map from faces given as vertex cycles, all listed counterclockwise as
/// seen from outside. Every directed edge u->v must occur in exactly one
/// face, and its reverse in another. Darts are numbered by first
/// occurrence along the face list.
Map from_oriented_faces(const std::vector<std::vector<std::size_t>> &faces, std::string name);

/// n-gonal prism, n >= 3: V = 2n, two n-gons and n squares.
Map prism(std::size_t n);

/// "tetrahedron", "cube" or "dodecahedron".
Map platonic(std::string_view which);

/// Planar theta graph: two vertices, three parallel edges, three digons.
Map theta();

/// Vertex truncation. Every dart becomes a vertex, every vertex a
/// triangle, every p-gon a 2p-gon.
Map truncate(const Map &m);

/// Hexagonal tiling of the torus with m x n cells (2mn vertices, mn
/// hexagons). Requires m, n >= 2.
Map hex_torus(std::size_t m, std::size_t n);

} // namespace rubikmap
