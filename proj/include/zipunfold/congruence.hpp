#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zipunfold/hampath.hpp"
#include "zipunfold/unfold.hpp"

namespace zipunfold {

/// Boundary of a polygon as alternating (edge length, signed turn) tokens,
/// quantized and reduced to the lexicographic minimum over all starting
/// edges and both orientations. Equal signatures <=> congruent polygons.
struct CanonicalSignature {
  std::vector<long long> tokens;

  auto operator<=>(const CanonicalSignature&) const = default;
  bool operator==(const CanonicalSignature&) const = default;
  std::string str() const;
};

inline constexpr double kSignatureLengthGrid = 1e-6;
inline constexpr double kSignatureAngleGrid = 1e-6;

/// Signature of a counter-clockwise polygon.
CanonicalSignature polygon_signature(const Polygon2& poly);

/// Signature of a net's boundary; throws NonSimpleNetError for overlapping nets.
CanonicalSignature signature(const Net& n);

struct CongruenceClass {
  CanonicalSignature signature;
  /// Indices into the deduped input, in input order; members.front() is the representative.
  std::vector<int> members;

  int representative() const { return members.front(); }
  int size() const { return static_cast<int>(members.size()); }
};

/// Partitions nets into congruence classes, ordered by first occurrence.
std::vector<CongruenceClass> dedupe(const std::vector<Net>& nets);

/// Rotation/reflection symmetries of a solid as vertex permutations; the
/// identity comes first.
std::vector<std::vector<VertexId>> symmetry_group(const Polyhedron& p);

/// Orbits of paths under the solid's symmetries (and reversal), as index
/// lists into `paths` ordered by first occurrence.
std::vector<std::vector<int>> path_orbits(const Polyhedron& p, const std::vector<CutPath>& paths);

}  // namespace zipunfold
