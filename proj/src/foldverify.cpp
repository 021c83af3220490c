#include "zipunfold/foldverify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace zipunfold {

namespace {

// Geometric coincidence in the net / target plane.
constexpr double kTol = 1e-7;
// Image agreement of glued or creased points.
constexpr double kImageTol = 1e-9;
constexpr int kMinCoverageSamples = 10000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double boundary_distance(const Polygon2& poly, Vec2 p) {
  double d = 1e300;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d = std::min(d, point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  }
  return d;
}

// Inside and at least `margin` away from the boundary.
bool strictly_inside(const Polygon2& poly, Vec2 p, double margin) {
  return point_in_polygon(poly, p, 0.0) && boundary_distance(poly, p) > margin;
}

Polygon2 image(const Polygon2& poly, const Isometry2& g) {
  Polygon2 out;
  out.reserve(poly.size());
  for (Vec2 q : poly) out.push_back(g.apply(q));
  // Orientation-reversing maps flip the vertex order.
  if (g.reflect) std::reverse(out.begin(), out.end());
  return out;
}

bool polygon_simple(const Polygon2& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n], kTol)) return false;
    }
  }
  return true;
}

// Collinear overlap of two segments, as a sub-segment of the first.
std::optional<std::pair<Vec2, Vec2>> overlap(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const Vec2 r = b - a;
  const double len = norm(r);
  if (len < kTol) return std::nullopt;
  if (std::abs(cross(r, c - a)) / len > kTol || std::abs(cross(r, d - a)) / len > kTol) {
    return std::nullopt;
  }
  const double rr = len * len;
  double t0 = dot(c - a, r) / rr, t1 = dot(d - a, r) / rr;
  if (t0 > t1) std::swap(t0, t1);
  const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
  if ((hi - lo) * len <= kTol) return std::nullopt;
  return std::make_pair(a + r * lo, a + r * hi);
}

struct BoundaryLocator {
  const Net& net;
  Polygon2 outline;

  explicit BoundaryLocator(const Net& n) : net(n), outline(n.outline()) {}

  /// Perimeter position (edge units) of a point on the boundary, or -1.
  double arc_of(Vec2 p) const {
    const int k = net.size();
    double best = -1.0, gap = kTol;
    for (int i = 0; i < k; ++i) {
      const Vec2 a = outline[i], b = outline[(i + 1) % k];
      const double d = point_segment_distance(p, a, b);
      if (d <= gap) {
        gap = d;
        best = i + std::clamp(dot(p - a, b - a), 0.0, 1.0);
      }
    }
    if (best >= k - 1e-12) best -= k;
    return best;
  }
  Vec2 at(double u) const {
    const int k = net.size();
    u = std::fmod(u, static_cast<double>(k));
    if (u < 0) u += k;
    const int i = std::min(static_cast<int>(u), k - 1);
    return outline[i] + (outline[(i + 1) % k] - outline[i]) * (u - i);
  }
};

double cyclic_gap(double a, double b, double period) {
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

struct Context {
  const FoldSpec& f;
  const Net& net;
  BoundaryLocator loc;
  std::vector<Polygon2> images;
  // Facet edges lying on the net boundary.
  std::vector<std::vector<std::pair<Vec2, Vec2>>> boundary_edges;

  Context(const FoldSpec& spec, const Net& n) : f(spec), net(n), loc(n) {
    for (std::size_t i = 0; i < f.facets.size(); ++i) {
      images.push_back(image(f.facets[i], f.isometries[i]));
      std::vector<std::pair<Vec2, Vec2>> on;
      const auto& poly = f.facets[i];
      for (std::size_t j = 0; j < poly.size(); ++j) {
        const Vec2 a = poly[j], b = poly[(j + 1) % poly.size()];
        if (loc.arc_of(a) >= 0 && loc.arc_of(b) >= 0 && loc.arc_of((a + b) * 0.5) >= 0) {
          on.emplace_back(a, b);
        }
      }
      boundary_edges.push_back(std::move(on));
    }
  }

  /// Facets whose closure contains p.
  std::vector<int> facets_at(Vec2 p) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(f.facets.size()); ++i) {
      if (point_in_polygon(f.facets[i], p, kTol)) out.push_back(i);
    }
    return out;
  }

  std::optional<Vec2> map_point(Vec2 p) const {
    const auto at = facets_at(p);
    if (at.empty()) return std::nullopt;
    return f.isometries[at.front()].apply(p);
  }

  /// Layers a boundary point lies on: bit 0 for orientation-preserving
  /// facets, bit 1 for reversing ones; both when its image is on the rim.
  int layers(Vec2 p, Vec2 img) const {
    int mask = 0;
    for (int i : facets_at(p)) mask |= f.isometries[i].reflect ? 2 : 1;
    if (boundary_distance(f.target, img) <= kTol) mask = 3;
    return mask;
  }

  /// Boundary points of the net (edge units) whose image is `img`, with layers.
  std::vector<std::pair<double, int>> preimages(Vec2 img) const {
    std::vector<std::pair<double, int>> out;
    const double per = net.size();
    for (int i = 0; i < static_cast<int>(f.facets.size()); ++i) {
      const Vec2 q = f.isometries[i].inverse().apply(img);
      for (const auto& [a, b] : boundary_edges[i]) {
        if (point_segment_distance(q, a, b) > kTol) continue;
        const double u = loc.arc_of(q);
        if (u < 0) continue;
        const int mask = layers(q, img);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) {
          return cyclic_gap(e.first, u, per) < 1e-6;
        });
        if (it == out.end()) out.emplace_back(u, mask);
        else it->second |= mask;
      }
    }
    return out;
  }

  /// Boundary points identified with the boundary point at arc u (including itself).
  std::vector<double> identified(double u) const {
    const Vec2 p = loc.at(u);
    const auto img = map_point(p);
    if (!img) return {};
    const int mine = layers(p, *img);
    std::vector<double> out;
    for (const auto& [v, mask] : preimages(*img)) {
      if (mask & mine) out.push_back(v);
    }
    if (std::none_of(out.begin(), out.end(),
                     [&](double v) { return cyclic_gap(v, u, net.size()) < 1e-6; })) {
      out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

CheckResult check_tiling(const Context& c, VerificationReport& r) {
  CheckResult res{"tiling", true, false, ""};
  const auto& f = c.f;
  const Polygon2 outline = c.net.outline();
  for (std::size_t i = 0; i < f.facets.size(); ++i) {
    const auto& poly = f.facets[i];
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const Vec2 mid = (poly[j] + poly[(j + 1) % poly.size()]) * 0.5;
      if (!point_in_polygon(outline, poly[j], kTol) || !point_in_polygon(outline, mid, kTol)) {
        return {"tiling", false, false, "facet " + std::to_string(i) + " leaves the net"};
      }
    }
  }
  // Every facet side is either net boundary or shared with another facet.
  for (std::size_t i = 0; i < f.facets.size(); ++i) {
    const auto& poly = f.facets[i];
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const Vec2 a = poly[j], b = poly[(j + 1) % poly.size()];
      for (double t : {0.25, 0.5, 0.75}) {
        const Vec2 q = a + (b - a) * t;
        if (c.loc.arc_of(q) >= 0) continue;
        bool shared = false;
        for (std::size_t m = 0; m < f.facets.size() && !shared; ++m) {
          if (m != i) shared = boundary_distance(f.facets[m], q) <= kTol;
        }
        if (!shared) {
          return {"tiling", false, false,
                  "side " + std::to_string(j) + " of facet " + std::to_string(i) + " is unmatched"};
        }
      }
    }
  }
  // Interior points of the net lie in exactly one facet.
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (Vec2 p : outline) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  const int grid = 120;
  int bad = 0, used = 0;
  for (int ix = 0; ix < grid; ++ix) {
    for (int iy = 0; iy < grid; ++iy) {
      const Vec2 p{minx + (maxx - minx) * (ix + 0.5137) / grid,
                   miny + (maxy - miny) * (iy + 0.4729) / grid};
      if (!strictly_inside(outline, p, kTol)) continue;
      int count = 0;
      bool near_edge = false;
      for (const auto& poly : f.facets) {
        if (boundary_distance(poly, p) <= kTol) near_edge = true;
        else if (point_in_polygon(poly, p, 0.0)) ++count;
      }
      if (near_edge) continue;
      ++used;
      if (count != 1) ++bad;
    }
  }
  res.passed = bad == 0;
  res.detail = std::to_string(f.facets.size()) + " facets, facet area " + fmt(r.facet_area) +
               " vs net area " + fmt(r.net_area) + "; " + std::to_string(used) +
               " interior samples, " + std::to_string(bad) + " not covered exactly once";
  return res;
}

CheckResult check_isometries(const Context& c) {
  for (std::size_t i = 0; i < c.f.isometries.size(); ++i) {
    const auto& g = c.f.isometries[i];
    if (!std::isfinite(g.angle) || !std::isfinite(g.t.x) || !std::isfinite(g.t.y)) {
      return {"isometries", false, false, "isometry " + std::to_string(i) + " is not finite"};
    }
    const auto& poly = c.f.facets[i];
    for (std::size_t j = 0; j < poly.size(); ++j) {
      for (std::size_t m = j + 1; m < poly.size(); ++m) {
        const double d0 = dist(poly[j], poly[m]);
        const double d1 = dist(g.apply(poly[j]), g.apply(poly[m]));
        if (std::abs(d0 - d1) > kImageTol) {
          return {"isometries", false, false,
                  "facet " + std::to_string(i) + " is distorted by " + fmt(std::abs(d0 - d1))};
        }
      }
    }
  }
  return {"isometries", true, false, std::to_string(c.f.isometries.size()) + " distance-preserving maps"};
}

CheckResult check_creases(const Context& c) {
  const auto& f = c.f;
  int creases = 0, seams = 0;
  for (std::size_t i = 0; i < f.facets.size(); ++i) {
    for (std::size_t j = i + 1; j < f.facets.size(); ++j) {
      const auto& P = f.facets[i];
      const auto& Q = f.facets[j];
      for (std::size_t a = 0; a < P.size(); ++a) {
        for (std::size_t b = 0; b < Q.size(); ++b) {
          const auto ov = overlap(P[a], P[(a + 1) % P.size()], Q[b], Q[(b + 1) % Q.size()]);
          if (!ov) continue;
          const auto& gi = f.isometries[i];
          const auto& gj = f.isometries[j];
          const double e = std::max(dist(gi.apply(ov->first), gj.apply(ov->first)),
                                    dist(gi.apply(ov->second), gj.apply(ov->second)));
          if (e > kImageTol) {
            return {"creases", false, false,
                    "facets " + std::to_string(i) + " and " + std::to_string(j) +
                        " disagree on their shared side by " + fmt(e)};
          }
          // Agreeing on a segment, the maps are equal or differ by the reflection in it.
          (gi.reflect != gj.reflect ? creases : seams)++;
        }
      }
    }
  }
  return {"creases", true, false,
          std::to_string(creases) + " fold creases, " + std::to_string(seams) + " unfolded seams"};
}

CheckResult check_containment(const Context& c) {
  const auto& target = c.f.target;
  const bool convex = is_convex(target);
  for (std::size_t i = 0; i < c.images.size(); ++i) {
    const auto& img = c.images[i];
    for (std::size_t j = 0; j < img.size(); ++j) {
      const Vec2 a = img[j], b = img[(j + 1) % img.size()];
      for (double t : {0.0, 0.5}) {
        if (!point_in_polygon(target, a + (b - a) * t, kTol)) {
          return {"containment", false, false, "image of facet " + std::to_string(i) + " leaves the target"};
        }
      }
      if (convex) continue;
      for (std::size_t m = 0; m < target.size(); ++m) {
        const Vec2 p = target[m], q = target[(m + 1) % target.size()];
        const Vec2 r = b - a, s = q - p;
        const double den = cross(r, s);
        if (std::abs(den) < 1e-12) continue;
        const double t0 = cross(p - a, s) / den, u0 = cross(p - a, r) / den;
        if (t0 > 1e-7 && t0 < 1 - 1e-7 && u0 > 1e-7 && u0 < 1 - 1e-7) {
          return {"containment", false, false, "image of facet " + std::to_string(i) + " crosses the target boundary"};
        }
      }
    }
  }
  return {"containment", true, false, "all facet images inside the target"};
}

CheckResult check_coverage(const Context& c, VerificationReport& r) {
  const auto& target = c.f.target;
  const double rel = std::abs(r.facet_area - 2.0 * r.target_area) / (2.0 * r.target_area);
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (Vec2 p : target) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  // Grow a deterministic grid until enough samples fall inside the target.
  int grid = 128;
  std::vector<Vec2> samples;
  while (true) {
    samples.clear();
    for (int ix = 0; ix < grid; ++ix) {
      for (int iy = 0; iy < grid; ++iy) {
        const Vec2 p{minx + (maxx - minx) * (ix + 0.5137) / grid,
                     miny + (maxy - miny) * (iy + 0.4729) / grid};
        if (strictly_inside(target, p, kLengthEps)) samples.push_back(p);
      }
    }
    if (static_cast<int>(samples.size()) >= kMinCoverageSamples || grid > 4096) break;
    grid *= 2;
  }
  int used = 0, bad = 0;
  std::map<int, int> histogram;
  for (Vec2 p : samples) {
    int count = 0;
    bool near_edge = false;
    for (const auto& img : c.images) {
      if (boundary_distance(img, p) <= kLengthEps) {
        near_edge = true;
        break;
      }
      if (point_in_polygon(img, p, 0.0)) ++count;
    }
    if (near_edge) continue;
    ++used;
    ++histogram[count];
    if (count != 2) ++bad;
  }
  r.coverage_samples = used;
  r.coverage_failures = bad;
  std::string hist;
  for (const auto& [k, v] : histogram) hist += " " + std::to_string(k) + "x:" + std::to_string(v);
  CheckResult res{"double-coverage", rel <= 1e-6 && bad == 0 && used >= kMinCoverageSamples, false,
                  "facet area " + fmt(r.facet_area) + " = 2 x " + fmt(r.facet_area / 2) +
                      " vs target " + fmt(r.target_area) + "; " + std::to_string(used) +
                      " samples, coverage" + hist};
  return res;
}

CheckResult check_gluing(const Context& c, VerificationReport& r) {
  const auto& f = c.f;
  const int k = c.net.size();
  const int per_edge = 16;
  const int total = per_edge * k;
  r.tree = derive_gluing_tree(f, c.net);
  if (f.gluing.kind == FoldGluing::Kind::Zip) {
    const double x = f.gluing.anchor * k;
    double worst = 0.0;
    for (int s = 0; s < total; ++s) {
      const double u = (s + 0.3183) * k / total;
      const auto a = c.map_point(c.loc.at(u));
      const auto b = c.map_point(c.loc.at(2.0 * x - u));
      if (!a || !b) return {"gluing", false, false, "boundary point outside every facet"};
      worst = std::max(worst, dist(*a, *b));
    }
    const bool ok = worst <= kImageTol && r.tree.path();
    return {"gluing", ok, false,
            "zip from x=" + fmt(f.gluing.anchor) + ": max image gap " + fmt(worst) +
                ", gluing tree " + (r.tree.path() ? "is a path" : "has junctions")};
  }
  // Non-zip: generic boundary points must be glued to exactly one partner,
  // and the tree must branch.
  int odd = 0;
  for (int s = 0; s < total; ++s) {
    if (c.identified((s + 0.3183) * k / total).size() != 2) ++odd;
  }
  std::vector<int> degrees;
  for (const auto& j : r.tree.junctions) degrees.push_back(j.degree());
  std::sort(degrees.begin(), degrees.end());
  auto claimed = f.gluing.junction_degrees;
  std::sort(claimed.begin(), claimed.end());
  const bool ok = odd == 0 && !r.tree.path() && (claimed.empty() || claimed == degrees);
  std::string list;
  for (int d : degrees) list += " " + std::to_string(d);
  return {"gluing-tree", ok, false,
          "non-zip: " + std::to_string(odd) + " generic boundary samples unpaired; junction degrees:" +
              (list.empty() ? std::string(" none") : list)};
}

}  // namespace

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.passed || c.skipped; });
}

const CheckResult* VerificationReport::check(const std::string& n) const {
  for (const auto& c : checks) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

Net spec_net(const FoldSpec& f) {
  const Net n = unfold(build_solid(f.solid), f.path);
  return f.mirrored ? mirrored(n) : n;
}

TargetShape describe_target(const Polygon2& t) {
  TargetShape s;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    s.sides.push_back(dist(t[i], t[(i + 1) % n]));
    s.angles.push_back(interior_angle(t, i));
  }
  for (double l : s.sides) {
    if (std::none_of(s.dimensions.begin(), s.dimensions.end(),
                     [&](double d) { return std::abs(d - l) < 1e-6; })) {
      s.dimensions.push_back(l);
    }
  }
  std::sort(s.dimensions.begin(), s.dimensions.end());
  auto near = [](double a, double b) { return std::abs(a - b) < 1e-6; };
  if (!is_convex(t)) s.kind = "nonconvex";
  else if (n == 3) s.kind = "triangle";
  else if (n == 4 && near(s.sides[0], s.sides[2]) && near(s.sides[1], s.sides[3])) {
    const bool right = near(s.angles[0], kPi / 2);
    const bool equal = near(s.sides[0], s.sides[1]);
    s.kind = right ? (equal ? "square" : "rectangle") : (equal ? "rhombus" : "parallelogram");
  } else {
    s.kind = "convex";
  }
  return s;
}

VerificationReport verify_fold(const FoldSpec& f) { return verify_fold(f, spec_net(f)); }

VerificationReport verify_fold(const FoldSpec& f, const Net& net) {
  if (f.facets.empty()) throw FoldSpecError(f.name + ": no facets");
  if (f.facets.size() != f.isometries.size()) {
    throw FoldSpecError(f.name + ": " + std::to_string(f.facets.size()) + " facets but " +
                        std::to_string(f.isometries.size()) + " isometries");
  }
  if (f.target.size() < 3 || signed_area(f.target) <= 0.0 || !polygon_simple(f.target)) {
    throw FoldSpecError(f.name + ": target must be a simple counter-clockwise polygon");
  }
  VerificationReport r;
  r.name = f.name;
  r.net_area = net.area();
  r.target_area = signed_area(f.target);
  for (std::size_t i = 0; i < f.facets.size(); ++i) {
    const auto& poly = f.facets[i];
    if (poly.size() < 3 || signed_area(poly) <= 0.0 || !polygon_simple(poly)) {
      throw FoldSpecError(f.name + ": facet " + std::to_string(i) +
                          " is not a simple counter-clockwise polygon");
    }
    r.facet_area += signed_area(poly);
  }
  if (std::abs(r.facet_area - r.net_area) > 1e-6 * r.net_area) {
    throw FoldSpecError(f.name + ": facet areas sum to " + fmt(r.facet_area) + ", net area is " +
                        fmt(r.net_area));
  }
  const Context c(f, net);
  r.shape = describe_target(f.target);
  r.checks.push_back(check_tiling(c, r));
  r.checks.push_back(check_isometries(c));
  r.checks.push_back(check_creases(c));
  r.checks.push_back(check_containment(c));
  r.checks.push_back(check_coverage(c, r));
  r.checks.push_back(check_gluing(c, r));
  return r;
}

bool target_area_check(const FoldSpec& f) {
  double facets = 0.0;
  for (const auto& p : f.facets) facets += std::abs(signed_area(p));
  const double net_area = spec_net(f).area();
  return std::abs(facets - 2.0 * std::abs(signed_area(f.target))) <= 1e-6 * net_area;
}

GluingTree derive_gluing_tree(const FoldSpec& f, const Net& net) {
  const Context c(f, net);
  const int k = net.size();
  // Branching can only happen at net corners or where facet corners meet the boundary.
  std::vector<double> candidates;
  for (int i = 0; i < k; ++i) candidates.push_back(i);
  for (const auto& poly : f.facets) {
    for (Vec2 q : poly) {
      const double u = c.loc.arc_of(q);
      if (u >= 0) candidates.push_back(u);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  GluingTree tree;
  std::vector<double> seen;
  for (double u : candidates) {
    if (std::any_of(seen.begin(), seen.end(), [&](double v) { return cyclic_gap(u, v, k) < 1e-6; })) {
      continue;
    }
    const auto group = c.identified(u);
    for (double v : group) seen.push_back(v);
    tree.max_degree = std::max<int>(tree.max_degree, static_cast<int>(group.size()));
    if (group.size() >= 3) {
      GluingNode node;
      node.image = c.map_point(c.loc.at(u)).value_or(Vec2{});
      for (double v : group) node.arcs.push_back(v / k);
      tree.junctions.push_back(std::move(node));
    }
  }
  return tree;
}

FoldSpec foldspec_from_certificate(const Net& net, const Zipping& z, const FlatCertificate& cert) {
  FoldSpec f;
  f.solid = net.solid;
  f.path = net.path;
  f.target = cert.target;
  f.gluing.kind = FoldGluing::Kind::Zip;
  f.gluing.anchor = z.anchor;

  // Rim pieces with their positions along the target's sides.
  struct RimPiece {
    Vec2 a, b;
    Vec2 qa, qb;
  };
  std::vector<RimPiece> rim;
  const int m = static_cast<int>(cert.rim.size());
  for (int i = 0; i < m; ++i) {
    const Vec2 q0 = cert.target[i], q1 = cert.target[(i + 1) % m];
    const Vec2 dir = (q1 - q0) * (1.0 / norm(q1 - q0));
    double s = 0.0;
    for (const auto& piece : cert.rim[i].pieces) {
      const double len = dist(piece.a, piece.b);
      rim.push_back({piece.a, piece.b, q0 + dir * s, q0 + dir * (s + len)});
      s += len;
    }
  }

  // Cut every face by the rim pieces that pass through it.
  std::vector<Polygon2> pieces;
  for (const auto& face : net.faces) {
    std::vector<Polygon2> parts{face};
    for (const auto& rp : rim) {
      std::vector<Polygon2> next;
      for (const auto& poly : parts) {
        const Polygon2 left = clip_half_plane(poly, rp.a, rp.b);
        const Polygon2 right = clip_half_plane(poly, rp.b, rp.a);
        const double al = left.size() >= 3 ? signed_area(left) : 0.0;
        const double ar = right.size() >= 3 ? signed_area(right) : 0.0;
        // Only split when the segment itself (not just its line) crosses the polygon.
        bool crosses = al > 1e-12 && ar > 1e-12;
        if (crosses) {
          crosses = false;
          for (int t = 0; t <= 64 && !crosses; ++t) {
            crosses = strictly_inside(poly, rp.a + (rp.b - rp.a) * (t / 64.0), 1e-9);
          }
        }
        if (crosses) {
          next.push_back(left);
          next.push_back(right);
        } else {
          next.push_back(poly);
        }
      }
      parts = std::move(next);
    }
    for (auto& p : parts) {
      // Drop near-duplicate vertices left by clipping.
      Polygon2 clean;
      for (Vec2 q : p) {
        if (clean.empty() || dist(clean.back(), q) > 1e-12) clean.push_back(q);
      }
      while (clean.size() > 1 && dist(clean.front(), clean.back()) <= 1e-12) clean.pop_back();
      pieces.push_back(std::move(clean));
    }
  }

  const int n = static_cast<int>(pieces.size());
  std::vector<std::optional<Isometry2>> maps(n);
  for (int i = 0; i < n; ++i) {
    const auto& poly = pieces[i];
    Vec2 centroid;
    for (Vec2 q : poly) centroid += q;
    centroid = centroid * (1.0 / static_cast<double>(poly.size()));
    for (const auto& rp : rim) {
      bool touches = false;
      for (std::size_t j = 0; j < poly.size() && !touches; ++j) {
        touches = overlap(rp.a, rp.b, poly[j], poly[(j + 1) % poly.size()]).has_value();
      }
      if (!touches) continue;
      Isometry2 g = Isometry2::rigid_from_segments(rp.a, rp.b, rp.qa, rp.qb);
      if (cross(rp.b - rp.a, centroid - rp.a) < 0.0) {
        g = g.compose(Isometry2::reflection_across(rp.a, rp.b));
      }
      maps[i] = g;
      break;
    }
  }
  // Pieces away from the rim inherit the map of a neighbour across an uncreased side.
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    if (maps[i]) queue.push_back(i);
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (maps[j]) continue;
      bool adjacent = false;
      for (std::size_t a = 0; a < pieces[i].size() && !adjacent; ++a) {
        for (std::size_t b = 0; b < pieces[j].size() && !adjacent; ++b) {
          adjacent = overlap(pieces[i][a], pieces[i][(a + 1) % pieces[i].size()], pieces[j][b],
                             pieces[j][(b + 1) % pieces[j].size()])
                         .has_value();
        }
      }
      if (!adjacent) continue;
      maps[j] = maps[i];
      queue.push_back(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!maps[i]) throw FoldSpecError("piece " + std::to_string(i) + " is not connected to the rim");
    f.facets.push_back(pieces[i]);
    f.isometries.push_back(*maps[i]);
  }
  return f;
}

FoldSpec reflected(const FoldSpec& f) {
  FoldSpec out = f;
  out.mirrored = !f.mirrored;
  auto flip = [](Polygon2 p) {
    for (auto& q : p) q.y = -q.y;
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (auto& p : out.facets) p = flip(p);
  out.target = flip(f.target);
  for (auto& g : out.isometries) {
    g.angle = -g.angle;
    g.t.y = -g.t.y;
  }
  if (f.gluing.kind == FoldGluing::Kind::Zip) {
    out.gluing.anchor = f.gluing.anchor == 0.0 ? 0.0 : 1.0 - f.gluing.anchor;
  }
  return out;
}

}  // namespace zipunfold
