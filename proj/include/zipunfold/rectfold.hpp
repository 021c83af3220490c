#pragma once

#include <optional>

#include "zipunfold/foldverify.hpp"

namespace zipunfold {

struct RectFoldOptions {
  /// Net rotations tried, in steps of pi / angle_steps over [0, pi).
  int angle_steps = 12;
  /// Boundary points sent to the rectangle corner, per unit edge.
  int arc_steps = 48;
  /// Coverage samples per rectangle side.
  int samples = 24;
  /// Only accept folds whose gluing tree branches.
  bool require_junction = true;
};

/// Searches for a fold of the net onto the w x h rectangle by the reflection
/// group of the rectangle: the net is laid on the plane, and the plane is
/// folded along every line x = i*w and y = j*h. Accepts a placement when
/// the net covers the rectangle exactly twice. The result is a non-zip
/// FoldSpec (or zip, if junctions are not required and none appear) that has
/// already passed verify_fold.
std::optional<FoldSpec> fold_onto_rectangle(const Net& net, double w, double h,
                                            const RectFoldOptions& opt = {});

}  // namespace zipunfold
