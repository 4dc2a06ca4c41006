#ifndef FVROE_MESH2D_HPP
#define FVROE_MESH2D_HPP

#include <string>
#include <vector>

#include "fvroe/core.hpp"

namespace fvroe {

enum class BoundaryMarker { none, wall, fluid, inflow, outflow };

BoundaryMarker marker_from_token(const std::string& token);

struct Vertex {
  Vec2 pos{};
};

struct Cell {
  std::vector<int> vertices;  // CCW polygon, 3 or 4 vertices
  std::vector<int> faces;
  double area = 0.0;
  Vec2 centroid{};
};

struct Face {
  int v0 = -1, v1 = -1;
  double length = 0.0;
  Vec2 normal{};        // unit, points from left_cell to right_cell
  int left_cell = -1;
  int right_cell = -1;  // -1 on the boundary
  BoundaryMarker marker = BoundaryMarker::none;
  Vec2 point{};         // barycenter-segment interface point (face midpoint on the boundary)
  double theta = 0.0;   // point = (1-theta) x_left + theta x_right for internal faces
};

/// Reference to a neighbor used by the slope limitation: either an adjacent
/// cell or, against a wall, the boundary face itself.
struct NeighborRef {
  enum Kind { cell, face } kind = cell;
  int id = -1;
};

enum class BoundaryMode { fluid, wall };

class UnstructuredMesh {
public:
  std::vector<Vertex> vertices;
  std::vector<Cell> cells;
  std::vector<Face> faces;
  std::vector<std::string> warnings;  // mesh-quality notes from construction

  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_faces() const { return static_cast<int>(faces.size()); }

  /// Outward normal of face f as seen from cell k.
  Vec2 outward_normal(int k, int f) const;

  /// Cell on the other side of internal face f, or -1.
  int neighbor(int k, int f) const;

  /// Interface point and its interpolation parameter along the barycenter
  /// segment, as seen from cell k.
  std::pair<Vec2, double> interface_point(int k, int f) const;

  /// Neighbors for the limiting bounds: adjacent cells, plus wall boundary
  /// faces as pseudo-neighbors in wall mode.
  std::vector<NeighborRef> neighbor_set(int k, BoundaryMode mode) const;
};

/// Parses the plain-text mesh format:
///   vertices N    followed by N lines "x y"
///   cells M       followed by M lines "k i1 ... ik" (0-based, CCW, k in {3,4})
///   boundary B    followed by B lines "i j marker"
/// '#' starts a comment. Every boundary edge must carry a marker.
UnstructuredMesh build_mesh(const std::string& text);

UnstructuredMesh load_mesh(const std::string& path);

}  // namespace fvroe

#endif
