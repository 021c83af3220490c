#pragma once

#include <optional>
#include <vector>

#include "zipunfold/geometry.hpp"
#include "zipunfold/unfold.hpp"

namespace zipunfold {

/// The closed surface obtained by zipping a net from anchor x: boundary point
/// x+s is identified with x-s. Geodesics are traced directly in the net's
/// plane, jumping across the seam with the gluing isometry.
class GluedSurface {
 public:
  /// Angular sector of a glued point contributed by one boundary point.
  struct Wedge {
    double arc = 0.0;    ///< perimeter units
    Vec2 pos;            ///< location in the net
    double start = 0.0;  ///< direction of the forward boundary edge
    double width = 0.0;  ///< interior angle (π for edge-interior points)
    double offset = 0.0; ///< cone-angle coordinate where this sector begins
  };
  struct Point {
    std::vector<Wedge> wedges;
    double total_angle = 0.0;
    double curvature() const { return kTwoPi - total_angle; }
    bool cone() const { return curvature() > 1e-9; }
  };
  /// A segment of a traced geodesic, in net coordinates.
  struct Piece {
    Vec2 a, b;
  };
  struct Geodesic {
    int from = -1;
    int to = -1;
    double length = 0.0;
    double departure = 0.0;  ///< cone angle at `from`
    double arrival = 0.0;    ///< cone angle at `to` of the direction pointing back
    std::vector<Piece> pieces;
  };

  GluedSurface(const Net& net, double anchor_x);

  const std::vector<Point>& points() const { return points_; }
  std::vector<int> cone_points() const;
  double perimeter() const { return static_cast<double>(k_); }

  /// Marked point at arc position u (perimeter units), or -1.
  int point_at(double u) const;

  /// Follows the geodesic leaving point `from` at cone angle `angle` until it
  /// meets a cone point, passing straight through flat points.
  std::optional<Geodesic> trace(int from, double angle, double max_length) const;

  /// Every geodesic from `from` that reaches a cone point within max_length
  /// without meeting another cone point first.
  std::vector<Geodesic> geodesics_from(int from, double max_length) const;

 private:
  struct Hit {
    double t = 0.0;
    double arc = 0.0;
    int point = -1;
    Vec2 pos;
  };
  struct Beam {
    Vec2 apex;
    double lo = 0.0, hi = 0.0;
    double shift = 0.0;  // cone angle = direction - shift
    bool windowed = false;
    Vec2 w0, w1;
  };

  Vec2 arc_pos(double u) const;
  Vec2 edge_dir(int edge) const;
  int edge_of(double u) const;
  std::optional<Hit> first_hit(Vec2 origin, Vec2 dir, double t_min) const;
  double window_param(const Beam& b, Vec2 dir) const;
  /// Isometry carrying the exterior side of arc u onto the interior side of its partner.
  Isometry2 seam_map(double u) const;
  /// Cone coordinate of a direction at a boundary arc belonging to point p.
  double cone_angle_at(int p, double arc, double direction) const;
  const Wedge& wedge_for(int p, double cone_angle) const;
  std::optional<Geodesic> run(Vec2 pos, Vec2 dir, double max_length) const;

  const Net& net_;
  int k_ = 0;
  double x_ = 0.0;  // anchor, perimeter units
  std::vector<double> marks_;       // sorted arcs of marked points
  std::vector<int> mark_point_;     // point index per mark
  std::vector<Point> points_;
};

}  // namespace zipunfold
