#pragma once

#include <optional>
#include <vector>

#include "zipunfold/surface.hpp"
#include "zipunfold/zipper.hpp"

namespace zipunfold {

/// Angle screen for a doubly covered convex polygon: every cluster has
/// curvature in (0, 2π) and the implied corner angles π - κ/2 form a convex
/// polygon's angle set. Necessary but NOT sufficient for flatness; a true
/// result is only a candidate.
bool flat_compatible(const Zipping& z);

/// Corner angles π - κ/2 implied by the clusters, in cluster order.
std::vector<double> implied_corner_angles(const Zipping& z);

/// Proof that a zipping folds to a doubly covered convex polygon Q: a simple
/// closed geodesic ("rim") through every cone point that bisects each cone
/// angle. Each half of the surface is then a copy of Q.
struct FlatCertificate {
  /// Surface point ids of the corners, in rim order.
  std::vector<int> corners;
  /// Interior angle of Q at each corner (half the cone angle).
  std::vector<double> angles;
  /// side_lengths[i] joins corners[i] and corners[i+1].
  std::vector<double> side_lengths;
  /// Rim edges, traced in net coordinates.
  std::vector<GluedSurface::Geodesic> rim;
  /// Q, counter-clockwise, corner i at target[i].
  Polygon2 target;
};

/// Exact flatness decision (up to floating-point tolerance). Returns the rim
/// when the zipped surface is a doubly covered convex polygon.
std::optional<FlatCertificate> flat_certificate(const Net& n, const Zipping& z);

inline bool is_flat(const Net& n, const Zipping& z) { return flat_certificate(n, z).has_value(); }

}  // namespace zipunfold
