#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipunfold/geometry.hpp"
#include "zipunfold/hampath.hpp"
#include "zipunfold/solids.hpp"

namespace zipunfold {

/// One corner of the net's boundary polygon.
struct BoundaryVertex {
  Vec2 pos;
  /// Interior angle of the net at this corner, radians.
  double angle = 0.0;
  /// Position along the perimeter, normalized to [0, 1).
  double arc = 0.0;
  /// Polyhedron vertex this corner develops from.
  VertexId origin = 0;
  /// Number of face corners meeting here.
  int face_corners = 0;

  bool reflex() const { return angle > kPi + kAngleEps; }
  bool straight() const { return std::abs(angle - kPi) <= kAngleEps; }
  bool strictly_convex() const { return angle < kPi - kAngleEps; }
};

/// Boundary edge i runs from boundary vertex i to i+1.
struct BoundaryEdge {
  int poly_edge = 0;  ///< index into Polyhedron::edges()
  int face = 0;       ///< face whose side this is
  int mate = 0;       ///< the other boundary edge cut from the same polyhedron edge
};

/// Planar development of a solid cut open along a Hamiltonian path. The
/// boundary is counter-clockwise and starts at the first path vertex.
struct Net {
  Solid solid = Solid::Tetrahedron;
  CutPath path;
  double face_angle = 0.0;
  /// Planar image of every face, vertices in the polyhedron's face order.
  std::vector<Polygon2> faces;
  /// Parent of each face in the dual spanning tree (-1 at the root).
  std::vector<int> face_parent;
  std::vector<BoundaryVertex> boundary;
  std::vector<BoundaryEdge> boundary_edges;
  double perimeter = 0.0;
  bool simple = true;
  std::string non_simple_reason;

  int size() const { return static_cast<int>(boundary.size()); }
  Polygon2 outline() const;
  bool convex() const;
  double area() const;
};

/// Raised for operations that require a simple (non-overlapping) net.
class NonSimpleNetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Develops `p` cut along `c`. Overlapping developments come back with
/// simple == false rather than throwing; an invalid cut path throws
/// std::invalid_argument.
Net unfold(const Polyhedron& p, const CutPath& c);

/// Interior angle and origin for each boundary corner, in boundary order.
struct AngleSample {
  double angle = 0.0;
  VertexId origin = 0;
};
std::vector<AngleSample> boundary_angle_profile(const Net& n);

void require_simple(const Net& n);

/// Mirror image across the x-axis, with the boundary re-oriented CCW.
Net mirrored(const Net& n);

/// Applies a rigid motion to every coordinate of the net.
Net transformed(const Net& n, const Isometry2& m);

}  // namespace zipunfold
