#pragma once

#include <vector>

#include "zipunfold/solids.hpp"

namespace zipunfold {

/// A Hamiltonian path in a solid's 1-skeleton, stored in canonical direction
/// (first vertex label smaller than the last).
struct CutPath {
  Solid solid = Solid::Tetrahedron;
  std::vector<VertexId> vertices;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  CutPath reversed() const;
  bool operator==(const CutPath&) const = default;
};

/// Checks the path visits every vertex once along skeleton edges.
bool is_valid_cut_path(const Polyhedron& p, const CutPath& c);

/// Throws std::invalid_argument describing the first violated invariant.
void validate_cut_path(const Polyhedron& p, const CutPath& c);

/// Every labeled Hamiltonian path, each undirected path reported once, in
/// lexicographic order of the canonical vertex sequence.
std::vector<CutPath> enumerate_paths(const Polyhedron& p);

/// Labeled Hamiltonian paths with endpoint set {u, v}, oriented from min(u, v).
std::vector<CutPath> enumerate_paths_between(const Polyhedron& p, VertexId u, VertexId v);

/// Number of labeled undirected Hamiltonian cycles containing edge {u, v}.
long long count_cycles_through_edge(const Polyhedron& p, VertexId u, VertexId v);

}  // namespace zipunfold
