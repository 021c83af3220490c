#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zipunfold/unfold.hpp"

namespace zipunfold {

/// One point of the glued surface that lies on the zip path: either a fold
/// anchor (a single boundary point) or two boundary points x+s and x-s.
struct GlueEvent {
  /// Distance from the anchor x along the perimeter, normalized (0 .. 1/2).
  double offset = 0.0;
  /// Arc positions identified at this point (one for anchors, else two).
  std::vector<double> arcs;
  /// Boundary vertices taking part (0, 1 or 2).
  std::vector<int> vertices;
  double total_angle = 0.0;

  bool anchor() const { return arcs.size() == 1; }
  double curvature() const { return kTwoPi - total_angle; }
};

/// A glued point with positive curvature, i.e. a vertex of the folded polyhedron.
struct VertexCluster {
  int event = 0;  ///< index into Zipping::events
  double total_angle = 0.0;
  double curvature = 0.0;
};

struct Zipping {
  double anchor = 0.0;     ///< x
  double co_anchor = 0.0;  ///< x + 1/2 (mod 1)
  /// Every boundary vertex and both anchors, ordered by offset from x.
  std::vector<GlueEvent> events;
  std::vector<VertexCluster> clusters;
  /// The gluing re-identifies exactly the edges that were cut.
  bool identity_refold = false;

  int vertex_count() const { return static_cast<int>(clusters.size()); }
  double total_curvature() const;
  /// Cluster curvatures sorted ascending.
  std::vector<double> curvature_profile() const;
  /// Boundary-point pairing x+s <-> x-s as an arc map.
  double partner(double arc) const;
};

/// First glue event whose total angle exceeds 2π.
struct ZipRejection {
  double anchor = 0.0;
  double arc = 0.0;
  std::vector<int> vertices;
  double total_angle = 0.0;
};

using ZipOutcome = std::variant<Zipping, ZipRejection>;

/// Zips the net from anchor x; rejects when some glued point would carry
/// more than 2π of angle.
ZipOutcome zip_at(const Net& n, double x);

struct ZipCandidate {
  double x = 0.0;
  /// Boundary vertex glued to the reflex anchor vertex, or -1 when x sits on it.
  int partner = -1;
  ZipOutcome outcome;

  bool valid() const { return std::holds_alternative<Zipping>(outcome); }
};

struct ZipReport {
  /// Convex nets zip from every x; no discrete list is produced.
  bool convex_continuum = false;
  int reflex_vertex = -1;
  std::vector<ZipCandidate> candidates;
  /// Valid zippings in candidate order, duplicates kept.
  std::vector<Zipping> zippings;

  /// Points into `zippings`; not available on temporaries.
  std::vector<const Zipping*> non_identity() const&;
  std::vector<const Zipping*> non_identity() const&& = delete;
  int rejected_count() const;
};

/// All perimeter-halving zippings of a net satisfying Alexandrov's angle
/// condition, found by anchoring on the first reflex boundary vertex.
ZipReport enumerate_zippings(const Net& n);

/// True iff the net admits no zipping other than a refold of its solid.
/// Convex nets are never zip-rigid.
bool is_zip_rigid(const Net& n);
bool is_zip_rigid(const ZipReport& r);

/// Same glued point sets, independent of which anchor was called x.
bool same_gluing(const Zipping& a, const Zipping& b);

}  // namespace zipunfold
