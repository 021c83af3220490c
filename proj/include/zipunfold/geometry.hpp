#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace zipunfold {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Global comparison tolerances for lengths and angles.
inline constexpr double kLengthEps = 1e-9;
inline constexpr double kAngleEps = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 rotate(Vec2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Planar isometry p -> R(angle) * (reflect ? (x, -y) : (x, y)) + t.
struct Isometry2 {
  bool reflect = false;
  double angle = 0.0;
  Vec2 t;

  Vec2 apply(Vec2 p) const {
    if (reflect) p.y = -p.y;
    return rotate(p, angle) + t;
  }
  Vec2 apply_linear(Vec2 v) const {
    if (reflect) v.y = -v.y;
    return rotate(v, angle);
  }
  Isometry2 inverse() const;
  /// (this ∘ other)(p) = this(other(p)).
  Isometry2 compose(const Isometry2& other) const;

  /// Reflection across the line through a and b.
  static Isometry2 reflection_across(Vec2 a, Vec2 b);
  /// Orientation-preserving map taking a0 -> a1 with direction (b0 - a0) -> (b1 - a1).
  static Isometry2 rigid_from_segments(Vec2 a0, Vec2 b0, Vec2 a1, Vec2 b1);
};

using Polygon2 = std::vector<Vec2>;

/// Signed area, positive for counter-clockwise vertex order.
double signed_area(std::span<const Vec2> poly);

/// Interior angle at vertex i of a counter-clockwise polygon, in (0, 2π).
double interior_angle(std::span<const Vec2> poly, std::size_t i);

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps = kLengthEps);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Point-in-polygon test; points within eps of the boundary count as inside.
bool point_in_polygon(std::span<const Vec2> poly, Vec2 p, double eps = kLengthEps);

/// True when every vertex turns left (or goes straight) for a CCW polygon.
bool is_convex(std::span<const Vec2> poly, double eps = kAngleEps);

/// Keeps the part of a convex polygon on the left of the directed line a->b.
Polygon2 clip_half_plane(std::span<const Vec2> poly, Vec2 a, Vec2 b);

/// Wraps an angle into [0, 2π).
double wrap_angle(double a);

/// Wraps an arc parameter into [0, 1).
double wrap_unit(double s);

}  // namespace zipunfold
