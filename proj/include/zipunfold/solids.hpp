#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zipunfold/geometry.hpp"

namespace zipunfold {

enum class Solid : std::uint8_t { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline constexpr std::array<Solid, 5> kAllSolids = {
    Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron,
    Solid::Icosahedron};

std::string_view solid_name(Solid s);

/// Parses a solid identifier; throws std::invalid_argument naming the input.
Solid parse_solid(std::string_view name);

using VertexId = int;

/// Unordered edge stored with first < second.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// A Platonic solid with unit edges. Faces are listed counter-clockwise as seen
/// from outside, so each edge is traversed once in each direction.
class Polyhedron {
 public:
  Polyhedron(Solid kind, std::vector<Vec3> vertices, std::vector<std::vector<VertexId>> faces);

  Solid kind() const { return kind_; }
  std::string_view name() const { return solid_name(kind_); }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Number of sides per face (3, 4 or 5).
  int face_sides() const { return static_cast<int>(faces_.front().size()); }
  /// Interior angle of a face corner.
  double face_angle() const { return kPi * (face_sides() - 2) / face_sides(); }
  /// Faces meeting at each vertex.
  int vertex_degree() const { return static_cast<int>(neighbors_.front().size()); }
  double surface_area() const;

  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
  /// Index into edges(), or -1 if u and v are not adjacent.
  int edge_index(VertexId u, VertexId v) const;
  /// The two faces sharing edge e, ordered so the first traverses it a->b.
  std::pair<int, int> edge_faces(int edge_index) const { return edge_faces_.at(edge_index); }

 private:
  Solid kind_;
  std::vector<Vec3> vertices_;
  std::vector<std::vector<VertexId>> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::pair<int, int>> edge_faces_;
};

Polyhedron build_solid(Solid s);
Polyhedron build_solid(std::string_view name);

/// Shortest-path edge count between two vertices of the 1-skeleton.
int graph_distance(const Polyhedron& p, VertexId u, VertexId v);

/// All-pairs graph distances.
std::vector<std::vector<int>> distance_matrix(const Polyhedron& p);

}  // namespace zipunfold
