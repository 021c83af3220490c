#include "zipunfold/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zipunfold {

namespace {

// Hits closer than this (in edge units) to a marked point snap onto it.
constexpr double kSnap = 1e-7;
constexpr double kRayEps = 1e-9;

double wrap_period(double u, double period) {
  u = std::fmod(u, period);
  if (u < 0) u += period;
  if (period - u < 1e-12) u = 0.0;
  return u;
}

double cyclic_gap(double a, double b, double period) {
  const double d = std::abs(wrap_period(a - b, period));
  return std::min(d, period - d);
}

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

GluedSurface::GluedSurface(const Net& net, double anchor_x) : net_(net), k_(net.size()) {
  const double per = static_cast<double>(k_);
  x_ = wrap_period(anchor_x * per, per);

  auto vertex_at = [&](double u) {
    const double r = std::round(u);
    if (std::abs(u - r) > kSnap) return -1;
    return static_cast<int>(((static_cast<long long>(r) % k_) + k_) % k_);
  };
  auto wedge_at = [&](double u) {
    Wedge w;
    const int v = vertex_at(u);
    w.arc = v >= 0 ? static_cast<double>(v) : wrap_period(u, per);
    w.pos = arc_pos(w.arc);
    const int e = v >= 0 ? v : edge_of(u);
    const Vec2 d = edge_dir(e);
    w.start = std::atan2(d.y, d.x);
    w.width = v >= 0 ? net_.boundary[v].angle : kPi;
    return w;
  };
  auto add_point = [&](std::vector<double> arcs) {
    Point p;
    for (double a : arcs) {
      Wedge w = wedge_at(a);
      w.offset = p.total_angle;
      p.total_angle += w.width;
      p.wedges.push_back(w);
    }
    points_.push_back(std::move(p));
  };

  std::vector<bool> used(k_, false);
  for (double a : {x_, wrap_period(x_ + per / 2.0, per)}) {
    const int v = vertex_at(a);
    if (v >= 0) used[v] = true;
    add_point({a});
  }
  for (int i = 0; i < k_; ++i) {
    if (used[i]) continue;
    const double b = wrap_period(2.0 * x_ - i, per);
    const int j = vertex_at(b);
    used[i] = true;
    if (j >= 0) used[j] = true;
    add_point({static_cast<double>(i), b});
  }

  std::vector<std::pair<double, int>> marks;
  for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
    for (const auto& w : points_[p].wedges) marks.emplace_back(w.arc, p);
  }
  std::sort(marks.begin(), marks.end());
  for (const auto& [a, p] : marks) {
    marks_.push_back(a);
    mark_point_.push_back(p);
  }
}

std::vector<int> GluedSurface::cone_points() const {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
    if (points_[p].cone()) out.push_back(p);
  }
  return out;
}

int GluedSurface::point_at(double u) const {
  const double per = static_cast<double>(k_);
  u = wrap_period(u, per);
  auto it = std::lower_bound(marks_.begin(), marks_.end(), u);
  int best = -1;
  double gap = kSnap;
  for (auto cand : {it, it == marks_.begin() ? marks_.end() - 1 : it - 1}) {
    if (cand == marks_.end()) cand = marks_.begin();
    const double g = cyclic_gap(*cand, u, per);
    if (g <= gap) {
      gap = g;
      best = mark_point_[cand - marks_.begin()];
    }
  }
  return best;
}

Vec2 GluedSurface::arc_pos(double u) const {
  u = wrap_period(u, static_cast<double>(k_));
  const int i = std::min(static_cast<int>(std::floor(u)), k_ - 1);
  const double f = u - i;
  const Vec2 a = net_.boundary[i].pos, b = net_.boundary[(i + 1) % k_].pos;
  return a + (b - a) * f;
}

Vec2 GluedSurface::edge_dir(int edge) const {
  const Vec2 d = net_.boundary[(edge + 1) % k_].pos - net_.boundary[edge].pos;
  return d * (1.0 / norm(d));
}

int GluedSurface::edge_of(double u) const {
  u = wrap_period(u, static_cast<double>(k_));
  return std::min(static_cast<int>(std::floor(u)), k_ - 1);
}

std::optional<GluedSurface::Hit> GluedSurface::first_hit(Vec2 origin, Vec2 dir,
                                                         double t_min) const {
  std::optional<Hit> best;
  auto offer = [&](double t, double arc) {
    if (t <= t_min + kRayEps) return;
    if (best && t >= best->t) return;
    best = Hit{t, arc, -1, origin + dir * t};
  };
  for (int i = 0; i < k_; ++i) {
    const Vec2 a = net_.boundary[i].pos;
    const Vec2 e = net_.boundary[(i + 1) % k_].pos - a;
    const double denom = cross(dir, e);
    if (std::abs(denom) < 1e-12) {
      if (std::abs(cross(a - origin, dir)) > 1e-9) continue;
      // Running along the edge: the ray meets it first at one of its ends.
      offer(dot(a - origin, dir), i);
      offer(dot(a + e - origin, dir), i + 1);
      for (double m : marks_) {
        if (m > i && m < i + 1) offer(dot(a + e * (m - i) - origin, dir), m);
      }
      continue;
    }
    const double t = cross(a - origin, e) / denom;
    const double lam = cross(a - origin, dir) / denom;
    if (lam < -1e-9 || lam > 1.0 + 1e-9) continue;
    offer(t, i + std::clamp(lam, 0.0, 1.0));
  }
  if (best) {
    best->arc = wrap_period(best->arc, static_cast<double>(k_));
    best->point = point_at(best->arc);
    if (best->point >= 0) {
      // Report the marked arc exactly.
      const double r = std::round(best->arc);
      for (const auto& w : points_[best->point].wedges) {
        if (cyclic_gap(w.arc, best->arc, k_) <= kSnap) best->arc = w.arc;
      }
      (void)r;
      best->pos = arc_pos(best->arc);
    }
  }
  return best;
}

double GluedSurface::window_param(const Beam& b, Vec2 dir) const {
  const Vec2 e = b.w1 - b.w0;
  return cross(b.w0 - b.apex, e) / cross(dir, e);
}

Isometry2 GluedSurface::seam_map(double u) const {
  const double w = wrap_period(2.0 * x_ - u, static_cast<double>(k_));
  const Vec2 fu = edge_dir(edge_of(u));
  const Vec2 fw = edge_dir(edge_of(w));
  Isometry2 m;
  m.angle = std::atan2(-fw.y, -fw.x) - std::atan2(fu.y, fu.x);
  m.t = arc_pos(w) - rotate(arc_pos(u), m.angle);
  return m;
}

double GluedSurface::cone_angle_at(int p, double arc, double direction) const {
  const Point& pt = points_[p];
  for (const auto& w : pt.wedges) {
    if (cyclic_gap(w.arc, arc, k_) > kSnap) continue;
    double rel = wrap_angle(direction - w.start);
    if (rel > w.width + 1e-7 && rel > kTwoPi - 1e-7) rel = 0.0;
    return wrap_period(w.offset + std::min(rel, w.width), pt.total_angle);
  }
  return 0.0;
}

const GluedSurface::Wedge& GluedSurface::wedge_for(int p, double cone_angle) const {
  const Point& pt = points_[p];
  const Wedge* out = &pt.wedges.front();
  for (const auto& w : pt.wedges) {
    if (w.offset <= cone_angle + 1e-12) out = &w;
  }
  return *out;
}

std::optional<GluedSurface::Geodesic> GluedSurface::run(Vec2 pos, Vec2 dir,
                                                        double max_length) const {
  Geodesic g;
  for (int guard = 0; guard < 100000; ++guard) {
    const auto hit = first_hit(pos, dir, 0.0);
    if (!hit || g.length + hit->t > max_length + kRayEps) return std::nullopt;
    g.pieces.push_back({pos, hit->pos});
    g.length += hit->t;
    if (hit->point >= 0) {
      const int p = hit->point;
      const double back = cone_angle_at(p, hit->arc, std::atan2(-dir.y, -dir.x));
      if (points_[p].cone()) {
        g.to = p;
        g.arrival = back;
        return g;
      }
      // Flat point: leave straight ahead.
      const double out = wrap_period(back + kPi, points_[p].total_angle);
      const Wedge& w = wedge_for(p, out);
      pos = w.pos;
      dir = unit(w.start + (out - w.offset));
      continue;
    }
    const Isometry2 m = seam_map(hit->arc);
    pos = m.apply(hit->pos);
    dir = m.apply_linear(dir);
  }
  return std::nullopt;
}

std::optional<GluedSurface::Geodesic> GluedSurface::trace(int from, double angle,
                                                          double max_length) const {
  const Point& pt = points_[from];
  angle = wrap_period(angle, pt.total_angle);
  const Wedge& w = wedge_for(from, angle);
  auto g = run(w.pos, unit(w.start + (angle - w.offset)), max_length);
  if (g) {
    g->from = from;
    g->departure = angle;
  }
  return g;
}

std::vector<GluedSurface::Geodesic> GluedSurface::geodesics_from(int from,
                                                                 double max_length) const {
  const Point& src = points_[from];
  std::vector<double> departures;
  std::vector<Beam> stack;
  for (const auto& w : src.wedges) {
    Beam b;
    b.apex = w.pos;
    b.lo = w.start;
    b.hi = w.start + w.width;
    b.shift = w.start - w.offset;
    stack.push_back(b);
  }

  std::vector<Vec2> mark_pos;
  for (double a : marks_) mark_pos.push_back(arc_pos(a));

  while (!stack.empty()) {
    const Beam b = stack.back();
    stack.pop_back();
    std::vector<double> crit{b.lo, b.hi};
    for (const Vec2& m : mark_pos) {
      const Vec2 d = m - b.apex;
      const double r = norm(d);
      if (r < 1e-9 || r > max_length + 1e-6) continue;
      const double th = b.lo + wrap_angle(std::atan2(d.y, d.x) - b.lo);
      if (th > b.lo + 1e-12 && th < b.hi - 1e-12) crit.push_back(th);
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end(),
                           [](double a, double c) { return c - a < 1e-12; }),
               crit.end());

    for (std::size_t i = 0; i < crit.size(); ++i) {
      if (b.windowed && (i == 0 || i + 1 == crit.size())) continue;
      departures.push_back(crit[i] - b.shift);
    }
    for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
      const double a = crit[i], c = crit[i + 1];
      const Vec2 dm = unit(0.5 * (a + c));
      const double t0 = b.windowed ? window_param(b, dm) : 0.0;
      const auto hit = first_hit(b.apex, dm, t0);
      if (!hit || hit->point >= 0) continue;
      const int e = edge_of(hit->arc);
      const Vec2 p0 = net_.boundary[e].pos;
      const Vec2 ev = net_.boundary[(e + 1) % k_].pos - p0;
      auto on_edge = [&](double ang) {
        const Vec2 d = unit(ang);
        const double t = cross(p0 - b.apex, ev) / cross(d, ev);
        return b.apex + d * t;
      };
      const Vec2 pa = on_edge(a), pc = on_edge(c);
      if (point_segment_distance(b.apex, pa, pc) > max_length + 1e-9) continue;
      const Isometry2 m = seam_map(hit->arc);
      Beam nb;
      nb.apex = m.apply(b.apex);
      nb.lo = a + m.angle;
      nb.hi = c + m.angle;
      nb.shift = b.shift + m.angle;
      nb.windowed = true;
      nb.w0 = m.apply(pa);
      nb.w1 = m.apply(pc);
      stack.push_back(nb);
    }
  }

  for (double& d : departures) d = wrap_period(d, src.total_angle);
  std::sort(departures.begin(), departures.end());
  std::vector<Geodesic> out;
  double last = -1.0;
  for (double d : departures) {
    if (last >= 0.0 && d - last < 1e-9) continue;
    last = d;
    if (auto g = trace(from, d, max_length)) {
      if (g->to == from && g->pieces.size() == 1 && g->length < 1e-9) continue;
      out.push_back(std::move(*g));
    }
  }
  return out;
}

}  // namespace zipunfold
