#include "zipunfold/zipper.hpp"

#include <algorithm>
#include <cmath>

namespace zipunfold {

namespace {

constexpr double kArcEps = 1e-9;
// Glued points with total angle up to 2π (plus slack) are admissible.
constexpr double kAngleSlack = 1e-9;

// Boundary vertex at perimeter position u (in edge units), or -1.
int vertex_at(const Net& n, double u) {
  const int k = n.size();
  const double r = std::round(u);
  if (std::abs(u - r) > kArcEps * k) return -1;
  return static_cast<int>(((static_cast<long long>(r) % k) + k) % k);
}

double wrap_units(double u, double period) {
  u = std::fmod(u, period);
  if (u < 0) u += period;
  if (period - u <= kArcEps * period) u = 0.0;
  return u;
}

}  // namespace

double Zipping::total_curvature() const {
  double s = 0.0;
  for (const auto& c : clusters) s += c.curvature;
  return s;
}

std::vector<double> Zipping::curvature_profile() const {
  std::vector<double> out;
  for (const auto& c : clusters) out.push_back(c.curvature);
  std::sort(out.begin(), out.end());
  return out;
}

double Zipping::partner(double arc) const { return wrap_unit(2.0 * anchor - arc); }

std::vector<const Zipping*> ZipReport::non_identity() const& {
  std::vector<const Zipping*> out;
  for (const auto& z : zippings) {
    if (!z.identity_refold) out.push_back(&z);
  }
  return out;
}

int ZipReport::rejected_count() const {
  return static_cast<int>(std::count_if(candidates.begin(), candidates.end(),
                                        [](const ZipCandidate& c) { return !c.valid(); }));
}

ZipOutcome zip_at(const Net& n, double x) {
  const int k = n.size();
  const double per = static_cast<double>(k);
  const double ux = wrap_units(x * per, per);
  const double uy = wrap_units(ux + per / 2.0, per);

  Zipping z;
  z.anchor = ux / per;
  z.co_anchor = uy / per;

  std::vector<bool> used(k, false);
  std::optional<ZipRejection> rejection;

  auto add_event = [&](double offset_units, std::vector<double> arcs_units,
                       std::vector<int> verts) {
    GlueEvent ev;
    ev.offset = offset_units / per;
    for (double a : arcs_units) ev.arcs.push_back(wrap_units(a, per) / per);
    ev.vertices = std::move(verts);
    // An edge-interior point contributes a straight angle.
    const int edge_points = static_cast<int>(ev.arcs.size()) - static_cast<int>(ev.vertices.size());
    ev.total_angle = kPi * edge_points;
    for (int v : ev.vertices) {
      used[v] = true;
      ev.total_angle += n.boundary[v].angle;
    }
    if (ev.total_angle > kTwoPi + kAngleSlack && !rejection) {
      rejection = ZipRejection{z.anchor, ev.arcs.front(), ev.vertices, ev.total_angle};
    }
    z.events.push_back(std::move(ev));
  };

  for (double a : {ux, uy}) {
    const int v = vertex_at(n, a);
    add_event(a == ux ? 0.0 : per / 2.0, {a}, v >= 0 ? std::vector<int>{v} : std::vector<int>{});
  }
  for (int i = 0; i < k; ++i) {
    if (used[i]) continue;
    const double b = wrap_units(2.0 * ux - i, per);
    const int j = vertex_at(n, b);
    const double off = wrap_units(i - ux, per);
    const double offset = std::min(off, per - off);
    std::vector<int> verts{i};
    if (j >= 0) verts.push_back(j);
    add_event(offset, {static_cast<double>(i), b}, verts);
  }
  if (rejection) return *rejection;

  std::stable_sort(z.events.begin(), z.events.end(),
                   [](const GlueEvent& a, const GlueEvent& b) { return a.offset < b.offset; });
  for (int e = 0; e < static_cast<int>(z.events.size()); ++e) {
    const auto& ev = z.events[e];
    if (ev.curvature() > kAngleEps) z.clusters.push_back({e, ev.total_angle, ev.curvature()});
  }

  // Identity refold: every boundary edge is glued to its cut mate.
  const double rx = std::round(ux);
  if (std::abs(ux - rx) <= kArcEps * per) {
    const long long ix = static_cast<long long>(rx);
    z.identity_refold = true;
    for (int e = 0; e < k; ++e) {
      const long long glued = (((2 * ix - e - 1) % k) + k) % k;
      if (n.boundary_edges[e].mate != glued) {
        z.identity_refold = false;
        break;
      }
    }
  }
  return z;
}

ZipReport enumerate_zippings(const Net& n) {
  require_simple(n);
  ZipReport report;
  if (n.convex()) {
    report.convex_continuum = true;
    return report;
  }
  const int k = n.size();
  int v = 0;
  while (!n.boundary[v].reflex()) ++v;
  report.reflex_vertex = v;
  const double beta = n.boundary[v].angle;

  auto try_x = [&](double x_units, int partner) {
    ZipCandidate c;
    c.x = wrap_units(x_units, k / 2.0) / k;
    c.partner = partner;
    c.outcome = zip_at(n, c.x);
    if (const auto* z = std::get_if<Zipping>(&c.outcome)) report.zippings.push_back(*z);
    report.candidates.push_back(std::move(c));
  };

  // Option 1: the reflex vertex is itself a fold anchor.
  try_x(static_cast<double>(v), -1);
  // Option 2: a single strictly convex vertex is glued into it, which puts x
  // halfway between the two along the perimeter.
  for (int u = 0; u < k; ++u) {
    const auto& bu = n.boundary[u];
    if (!bu.strictly_convex()) continue;
    if (bu.angle + beta > kTwoPi + kAngleSlack) {
      // Logged without zipping: the glued point alone already exceeds 2π.
      ZipCandidate c;
      c.x = wrap_units((u + v) / 2.0, k / 2.0) / k;
      c.partner = u;
      c.outcome = ZipRejection{c.x, n.boundary[v].arc, {v, u}, bu.angle + beta};
      report.candidates.push_back(std::move(c));
      continue;
    }
    try_x((u + v) / 2.0, u);
  }
  return report;
}

bool is_zip_rigid(const ZipReport& r) {
  if (r.convex_continuum) return false;
  return r.non_identity().empty();
}

bool is_zip_rigid(const Net& n) { return is_zip_rigid(enumerate_zippings(n)); }

bool same_gluing(const Zipping& a, const Zipping& b) {
  const double d = std::abs(a.anchor - b.anchor);
  const double m = std::fmod(d, 0.5);
  return m < kArcEps || 0.5 - m < kArcEps;
}

}  // namespace zipunfold
