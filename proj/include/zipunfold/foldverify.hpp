#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipunfold/flatness.hpp"
#include "zipunfold/unfold.hpp"

namespace zipunfold {

/// The identification a fold claims to realize.
struct FoldGluing {
  enum class Kind { Zip, NonZip };
  Kind kind = Kind::Zip;
  /// Zip anchor x in [0, 1); boundary arc x+s is glued to x-s.
  double anchor = 0.0;
  /// Non-zip only: claimed degrees of the junctions (degree >= 3) of the gluing tree.
  std::vector<int> junction_degrees;
};

/// A claimed flat folding: a partition of the net into facets, each moved by
/// a planar isometry onto a target polygon that it covers twice.
struct FoldSpec {
  std::string name;
  Solid solid = Solid::Tetrahedron;
  CutPath path;
  /// The net is the mirror image of unfold(solid, path).
  bool mirrored = false;
  std::vector<Polygon2> facets;  ///< net coordinates, counter-clockwise
  std::vector<Isometry2> isometries;
  Polygon2 target;  ///< counter-clockwise
  FoldGluing gluing;
  std::string description;
};

/// Structurally unusable spec (as opposed to a fold claim that fails).
class FoldSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

/// A point of the gluing tree together with its degree (number of boundary
/// points of the net identified there).
struct GluingNode {
  Vec2 image;
  std::vector<double> arcs;  ///< normalized boundary positions, sorted
  int degree() const { return static_cast<int>(arcs.size()); }
};

struct GluingTree {
  std::vector<GluingNode> junctions;  ///< degree >= 3
  int max_degree = 0;
  bool path() const { return junctions.empty(); }
};

struct TargetShape {
  std::vector<double> sides;
  std::vector<double> angles;
  std::string kind;  ///< triangle | rhombus | square | rectangle | parallelogram | convex | nonconvex
  /// Distinct side lengths, ascending (for rectangles/parallelograms: the two dimensions).
  std::vector<double> dimensions;
};

struct VerificationReport {
  std::string name;
  std::vector<CheckResult> checks;
  double net_area = 0.0;
  double facet_area = 0.0;
  double target_area = 0.0;
  int coverage_samples = 0;
  int coverage_failures = 0;
  GluingTree tree;
  TargetShape shape;

  bool passed() const;
  const CheckResult* check(const std::string& name) const;
};

/// The net a spec refers to.
Net spec_net(const FoldSpec& f);

/// Classifies a polygon and lists its sides and interior angles.
TargetShape describe_target(const Polygon2& target);

/// Runs checks (a) tiling, (b) isometries, (c) creases, (d) containment,
/// (e) double coverage, (f) gluing. Throws FoldSpecError for malformed input.
VerificationReport verify_fold(const FoldSpec& f);
VerificationReport verify_fold(const FoldSpec& f, const Net& net);

/// |Σ facet areas − 2·target area| ≤ 1e-6 · net area.
bool target_area_check(const FoldSpec& f);

/// Identification of boundary points with coincident images on a shared layer.
GluingTree derive_gluing_tree(const FoldSpec& f, const Net& net);

/// Builds the fold claimed by a rim certificate: every face is cut along the
/// rim and each piece is mapped onto the target. The result still has to
/// pass verify_fold.
FoldSpec foldspec_from_certificate(const Net& net, const Zipping& z, const FlatCertificate& cert);

/// Mirror image of the whole spec (net, facets, isometries and target).
FoldSpec reflected(const FoldSpec& f);

}  // namespace zipunfold
