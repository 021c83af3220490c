#include "zipunfold/flatness.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace zipunfold {

namespace {

double circular_gap(double a, double b, double period) {
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

// The segments share more than an endpoint: a proper crossing or a
// collinear overlap of positive length.
bool cross_properly(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const Vec2 r = b - a, s = d - c;
  const double den = cross(r, s);
  if (std::abs(den) < 1e-12) {
    if (std::abs(cross(c - a, r)) / norm(r) > 1e-7) return false;
    const double rr = dot(r, r);
    const double t0 = dot(c - a, r) / rr, t1 = dot(d - a, r) / rr;
    const double lo = std::max(0.0, std::min(t0, t1)), hi = std::min(1.0, std::max(t0, t1));
    return (hi - lo) * std::sqrt(rr) > 1e-7;
  }
  const double t = cross(c - a, s) / den, u = cross(c - a, r) / den;
  return t > 1e-7 && t < 1.0 - 1e-7 && u > 1e-7 && u < 1.0 - 1e-7;
}

bool rim_simple(const std::vector<GluedSurface::Geodesic>& rim) {
  for (std::size_t i = 0; i < rim.size(); ++i) {
    for (std::size_t j = i; j < rim.size(); ++j) {
      for (std::size_t p = 0; p < rim[i].pieces.size(); ++p) {
        for (std::size_t q = (i == j ? p + 1 : 0); q < rim[j].pieces.size(); ++q) {
          const auto& s = rim[i].pieces[p];
          const auto& t = rim[j].pieces[q];
          if (cross_properly(s.a, s.b, t.a, t.b)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<double> implied_corner_angles(const Zipping& z) {
  std::vector<double> out;
  for (const auto& c : z.clusters) out.push_back(kPi - c.curvature / 2.0);
  return out;
}

bool flat_compatible(const Zipping& z) {
  const int k = z.vertex_count();
  if (k < 3) return false;
  double sum = 0.0;
  for (const auto& c : z.clusters) {
    if (c.curvature <= kAngleEps || c.curvature >= kTwoPi - kAngleEps) return false;
    sum += kPi - c.curvature / 2.0;
  }
  return std::abs(sum - (k - 2) * kPi) < 1e-6;
}

std::optional<FlatCertificate> flat_certificate(const Net& n, const Zipping& z) {
  if (!flat_compatible(z)) return std::nullopt;
  const GluedSurface s(n, z.anchor);
  const auto cones = s.cone_points();
  const int k = static_cast<int>(cones.size());
  const double reach = s.perimeter() / 2.0 + 1e-6;

  std::map<int, std::vector<GluedSurface::Geodesic>> cache;
  auto from = [&](int p) -> const std::vector<GluedSurface::Geodesic>& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, s.geodesics_from(p, reach)).first;
    return it->second;
  };
  auto half = [&](int p) { return s.points()[p].total_angle / 2.0; };

  const int start = cones.front();
  for (const auto& first : from(start)) {
    std::vector<GluedSurface::Geodesic> rim{first};
    std::vector<bool> seen(s.points().size(), false);
    seen[start] = true;
    bool closed = false;
    while (true) {
      const auto& last = rim.back();
      const int p = last.to;
      if (p == start) {
        const double tau = s.points()[p].total_angle;
        closed = static_cast<int>(rim.size()) == k &&
                 circular_gap(last.arrival + half(p), first.departure, tau) < 1e-6;
        break;
      }
      if (seen[p]) break;
      seen[p] = true;
      // Leave so that the cone angle is split evenly; ±θ coincide mod 2θ.
      const double tau = s.points()[p].total_angle;
      const double want = std::fmod(last.arrival + half(p), tau);
      const GluedSurface::Geodesic* next = nullptr;
      for (const auto& g : from(p)) {
        if (circular_gap(g.departure, want, tau) < 1e-6) {
          next = &g;
          break;
        }
      }
      if (!next) break;
      rim.push_back(*next);
    }
    if (!closed || !rim_simple(rim)) continue;

    FlatCertificate cert;
    for (const auto& g : rim) {
      cert.corners.push_back(g.from);
      cert.angles.push_back(half(g.from));
      cert.side_lengths.push_back(g.length);
    }
    // Develop Q: walk each side, turning by the exterior angle at the next corner.
    Vec2 at;
    double heading = 0.0;
    for (int i = 0; i < k; ++i) {
      cert.target.push_back(at);
      at += Vec2{std::cos(heading), std::sin(heading)} * cert.side_lengths[i];
      heading += kPi - cert.angles[(i + 1) % k];
    }
    if (norm(at) > 1e-6) continue;
    if (signed_area(cert.target) < 0.0) {
      for (auto& q : cert.target) q.y = -q.y;
    }
    // Two copies of Q must account for the whole surface.
    if (std::abs(2.0 * signed_area(cert.target) - n.area()) > 1e-6) continue;
    cert.rim = std::move(rim);
    return cert;
  }
  return std::nullopt;
}

}  // namespace zipunfold
