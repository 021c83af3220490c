#include "zipunfold/rectfold.hpp"

#include <cmath>

namespace zipunfold {

namespace {

struct Tiling {
  double w, h;

  // Folding map on the cell (i, j), as an isometry.
  Isometry2 cell_map(int i, int j) const {
    const bool fx = i & 1, fy = j & 1;
    Isometry2 m;
    m.reflect = fx != fy;
    m.angle = fx ? kPi : 0.0;
    m.t = {fx ? (i + 1) * w : -i * w, fy ? (j + 1) * h : -j * h};
    return m;
  }
  int cell(double v, double size) const { return static_cast<int>(std::floor(v / size)); }
};

}  // namespace

std::optional<FoldSpec> fold_onto_rectangle(const Net& net, double w, double h,
                                            const RectFoldOptions& opt) {
  require_simple(net);
  if (std::abs(net.area() - 2.0 * w * h) > 1e-6 * net.area()) return std::nullopt;
  const Tiling tiles{w, h};
  const Polygon2 outline = net.outline();
  const int k = net.size();

  for (int a = 0; a < opt.angle_steps; ++a) {
    const double theta = kPi * a / opt.angle_steps;
    for (int s = 0; s < k * opt.arc_steps; ++s) {
      // Boundary point at arc s / arc_steps goes to the origin.
      const double u = static_cast<double>(s) / opt.arc_steps;
      const int e = static_cast<int>(u);
      const Vec2 p = outline[e] + (outline[(e + 1) % k] - outline[e]) * (u - e);
      Isometry2 g;
      g.angle = theta;
      g.t = Vec2{0, 0} - rotate(p, theta);
      const Isometry2 ginv = g.inverse();

      double x0 = 1e18, y0 = 1e18, x1 = -1e18, y1 = -1e18;
      for (Vec2 q : outline) {
        const Vec2 r = g.apply(q);
        x0 = std::min(x0, r.x), y0 = std::min(y0, r.y);
        x1 = std::max(x1, r.x), y1 = std::max(y1, r.y);
      }
      const int i0 = tiles.cell(x0, w) - 1, i1 = tiles.cell(x1, w) + 1;
      const int j0 = tiles.cell(y0, h) - 1, j1 = tiles.cell(y1, h) + 1;

      bool twice = true;
      for (int sx = 0; sx < opt.samples && twice; ++sx) {
        for (int sy = 0; sy < opt.samples && twice; ++sy) {
          const Vec2 q{(sx + 0.4142) * w / opt.samples, (sy + 0.7321) * h / opt.samples};
          int count = 0;
          for (int i = i0; i <= i1 && count <= 2; ++i) {
            for (int j = j0; j <= j1 && count <= 2; ++j) {
              const Vec2 pre = tiles.cell_map(i, j).inverse().apply(q);
              if (point_in_polygon(outline, ginv.apply(pre), 0.0)) ++count;
            }
          }
          twice = count == 2;
        }
      }
      if (!twice) continue;

      FoldSpec f;
      f.solid = net.solid;
      f.path = net.path;
      f.target = {{0, 0}, {w, 0}, {w, h}, {0, h}};
      f.gluing.kind = FoldGluing::Kind::NonZip;
      for (const auto& face : net.faces) {
        Polygon2 placed;
        for (Vec2 q : face) placed.push_back(g.apply(q));
        for (int i = i0; i <= i1; ++i) {
          for (int j = j0; j <= j1; ++j) {
            Polygon2 piece = placed;
            piece = clip_half_plane(piece, {i * w, 1}, {i * w, 0});
            piece = clip_half_plane(piece, {(i + 1) * w, 0}, {(i + 1) * w, 1});
            piece = clip_half_plane(piece, {0, j * h}, {1, j * h});
            piece = clip_half_plane(piece, {1, (j + 1) * h}, {0, (j + 1) * h});
            if (piece.size() < 3 || signed_area(piece) < 1e-9) continue;
            Polygon2 facet;
            for (Vec2 q : piece) facet.push_back(ginv.apply(q));
            f.facets.push_back(std::move(facet));
            f.isometries.push_back(tiles.cell_map(i, j).compose(g));
          }
        }
      }
      const auto report = verify_fold(f, net);
      if (report.tree.path()) {
        if (opt.require_junction) continue;
        f.gluing.kind = FoldGluing::Kind::Zip;
      } else {
        for (const auto& jn : report.tree.junctions) f.gluing.junction_degrees.push_back(jn.degree());
        std::sort(f.gluing.junction_degrees.begin(), f.gluing.junction_degrees.end());
      }
      if (f.gluing.kind == FoldGluing::Kind::NonZip && verify_fold(f, net).passed()) return f;
    }
  }
  return std::nullopt;
}

}  // namespace zipunfold
