#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rubikmap/group.hpp"
#include "rubikmap/map.hpp"

namespace rubikmap {

/// Rubik group presentation of a 3-valent map.
///
/// Corners (face, vertex) and side edges (face, edge) are both in
/// bijection with darts: dart d stands for the corner of face_of(d) at
/// vertex_of(d) and for the side edge of face_of(d) on edge_of(d). Points
/// are numbered face-major: walk the faces in canonical order and their
/// boundaries from the smallest dart. Corners take points [0, 3V) and side
/// edges [3V, 6V) in the same order.
class RubikPresentation {
public:
  /// Throws DegenerateFace when a face boundary meets itself in a way that
  /// keeps the rotation of that face from being a permutation.
  explicit RubikPresentation(Map map);

  const Map &map() const noexcept { return map_; }

  std::size_t num_corners() const noexcept { return map_.num_darts(); }
  std::size_t num_side_edges() const noexcept { return map_.num_darts(); }
  std::size_t degree() const noexcept { return 2 * map_.num_darts(); }

  Point corner_point(Dart d) const noexcept { return position_[d]; }
  Point side_edge_point(Dart d) const noexcept
  {
    return static_cast<Point>(num_corners() + position_[d]);
  }
  Dart corner_dart(Point p) const noexcept { return dart_at_[p]; }
  Dart side_edge_dart(Point p) const noexcept { return dart_at_[p - num_corners()]; }

  /// One side movement per face, in canonical face order.
  const std::vector<Permutation> &generators() const noexcept { return generators_; }

  /// Throws FaceNotInMap.
  const Permutation &side_movement(std::size_t face) const;

  // Point maps from the full corner+side-edge domain.
  Projection to_corner_side_edge() const;
  Projection to_corner_edge() const; ///< side edge -> its edge, points [3V, 3V+E)
  Projection to_corner() const;
  Projection to_vertex() const; ///< corner -> its vertex
  Projection to_edge() const;   ///< corners dropped, side edge -> edge
  Projection to_side_edge() const;

  // Steps of the chain corner+side-edge -> corner+edge -> corner -> vertex.
  Projection corner_edge_to_corner() const;
  Projection corner_to_vertex() const;

  /// Corner action of a full-domain element, as a permutation of darts.
  Permutation corner_dart_action(const Permutation &g) const;

  GroupHandle group(const BuildOptions &options = {}) const;

private:
  Map map_;
  std::vector<Point> position_; // dart -> position in face-major order
  std::vector<Dart> dart_at_;
  std::vector<Permutation> generators_;
};

/// sm(M, F) on the canonical numbering. Throws FaceNotInMap.
Permutation side_movement(const Map &m, std::size_t face);

/// GAP script declaring the group; byte-identical for a given map.
std::string script_text(const RubikPresentation &p);
/// Throws IoError.
void export_script(const RubikPresentation &p, const std::filesystem::path &path);

/// Generators parsed back from a script written by export_script, or any
/// GAP `Group([...])` of cycle products over `degree` points.
std::vector<Permutation> parse_script_generators(std::string_view text, std::size_t degree);

} // namespace rubikmap
