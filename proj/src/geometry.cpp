#include "zipunfold/geometry.hpp"

#include <algorithm>

namespace zipunfold {

Isometry2 Isometry2::inverse() const {
  // p = R F q + t  =>  q = F R^-1 (p - t).
  Isometry2 inv;
  inv.reflect = reflect;
  inv.angle = reflect ? angle : -angle;
  inv.t = -inv.apply_linear(t);
  return inv;
}

Isometry2 Isometry2::compose(const Isometry2& other) const {
  Isometry2 out;
  out.reflect = reflect != other.reflect;
  // R_a F_a R_b F_b = R_a R_{±b} F_a F_b
  out.angle = wrap_angle(angle + (reflect ? -other.angle : other.angle));
  out.t = apply(other.t);
  return out;
}

Isometry2 Isometry2::reflection_across(Vec2 a, Vec2 b) {
  // Reflection across a line at angle phi through a: R(2 phi) F, fixed point a.
  const double phi = std::atan2(b.y - a.y, b.x - a.x);
  Isometry2 m;
  m.reflect = true;
  m.angle = wrap_angle(2.0 * phi);
  m.t = a - m.apply_linear(a);
  return m;
}

Isometry2 Isometry2::rigid_from_segments(Vec2 a0, Vec2 b0, Vec2 a1, Vec2 b1) {
  const Vec2 d0 = b0 - a0, d1 = b1 - a1;
  Isometry2 m;
  m.angle = wrap_angle(std::atan2(d1.y, d1.x) - std::atan2(d0.y, d0.x));
  m.t = a1 - rotate(a0, m.angle);
  return m;
}

double signed_area(std::span<const Vec2> poly) {
  double s = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    s += cross(poly[i], poly[(i + 1) % n]);
  }
  return 0.5 * s;
}

double interior_angle(std::span<const Vec2> poly, std::size_t i) {
  const std::size_t n = poly.size();
  const Vec2 prev = poly[(i + n - 1) % n], cur = poly[i], next = poly[(i + 1) % n];
  const Vec2 a = prev - cur, b = next - cur;
  // Angle swept counter-clockwise from the outgoing edge to the incoming edge.
  return wrap_angle(std::atan2(cross(b, a), dot(b, a)));
}

namespace {
int orient(Vec2 a, Vec2 b, Vec2 c, double eps) {
  const double v = cross(b - a, c - a);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}
bool on_segment(Vec2 a, Vec2 b, Vec2 p, double eps) {
  return point_segment_distance(p, a, b) <= eps;
}
}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
  const int o1 = orient(a, b, c, eps), o2 = orient(a, b, d, eps);
  const int o3 = orient(c, d, a, eps), o4 = orient(c, d, b, eps);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c, eps) || on_segment(a, b, d, eps) ||
         on_segment(c, d, a, eps) || on_segment(c, d, b, eps);
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

bool point_in_polygon(std::span<const Vec2> poly, Vec2 p, double eps) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, poly[i], poly[(i + 1) % n]) <= eps) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

bool is_convex(std::span<const Vec2> poly, double eps) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (interior_angle(poly, i) > kPi + eps) return false;
  }
  return true;
}

Polygon2 clip_half_plane(std::span<const Vec2> poly, Vec2 a, Vec2 b) {
  Polygon2 out;
  const std::size_t n = poly.size();
  const Vec2 dir = b - a;
  const double len = norm(dir);
  auto side = [&](Vec2 p) { return cross(dir, p - a) / len; };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = poly[i], q = poly[(i + 1) % n];
    const double sp = side(p), sq = side(q);
    if (sp >= -kLengthEps) out.push_back(p);
    if ((sp > kLengthEps && sq < -kLengthEps) || (sp < -kLengthEps && sq > kLengthEps)) {
      const double t = sp / (sp - sq);
      out.push_back(p + (q - p) * t);
    }
  }
  // Drop consecutive duplicates produced by vertices on the clip line.
  Polygon2 dedup;
  for (const Vec2& p : out) {
    if (dedup.empty() || dist(dedup.back(), p) > kLengthEps) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dist(dedup.front(), dedup.back()) <= kLengthEps) {
    dedup.pop_back();
  }
  if (dedup.size() < 3 || std::abs(signed_area(dedup)) <= kLengthEps) return {};
  return dedup;
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double wrap_unit(double s) {
  s = s - std::floor(s);
  if (s >= 1.0) s -= 1.0;
  return s;
}

}  // namespace zipunfold
