#include "zipunfold/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace zipunfold {

namespace {

struct Frame {
  double x0 = std::numeric_limits<double>::max(), y0 = x0;
  double x1 = std::numeric_limits<double>::lowest(), y1 = x1;

  void add(Vec2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  // SVG y grows downward; flip so the picture reads like the math.
  Vec2 px(Vec2 p) const { return {(p.x - x0) * kSvgScale + 20, (y1 - p.y) * kSvgScale + 20}; }
};

std::string header(const Frame& f) {
  std::ostringstream os;
  const double w = (f.x1 - f.x0) * kSvgScale + 40, h = (f.y1 - f.y0) * kSvgScale + 40;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  return os.str();
}

std::string points(const Frame& f, const Polygon2& poly) {
  std::ostringstream os;
  for (Vec2 p : poly) {
    const Vec2 q = f.px(p);
    os << q.x << ',' << q.y << ' ';
  }
  return os.str();
}

}  // namespace

std::string net_svg(const Net& n) {
  Frame f;
  for (const auto& face : n.faces)
    for (Vec2 p : face) f.add(p);
  std::ostringstream os;
  os << header(f);
  for (const auto& face : n.faces) {
    os << "  <polygon points=\"" << points(f, face)
       << "\" fill=\"#e8eef7\" stroke=\"#8899aa\" stroke-width=\"1\"/>\n";
  }
  os << "  <polygon points=\"" << points(f, n.outline())
     << "\" fill=\"none\" stroke=\"#203040\" stroke-width=\"2.5\"/>\n";
  // Endpoints of the cut path: the first boundary vertex, and the last path
  // vertex (which appears once on the boundary).
  const VertexId last = n.path.back();
  for (const auto& b : n.boundary) {
    const bool start = &b == &n.boundary.front();
    if (!start && b.origin != last) continue;
    const Vec2 q = f.px(b.pos);
    os << "  <circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"6\" fill=\""
       << (start ? "#c0392b" : "#27ae60") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string fold_svg(const FoldSpec& spec) {
  Frame f;
  for (Vec2 p : spec.target) f.add(p);
  std::vector<Polygon2> images;
  for (std::size_t i = 0; i < spec.facets.size(); ++i) {
    Polygon2 img;
    for (Vec2 p : spec.facets[i]) img.push_back(spec.isometries[i].apply(p));
    for (Vec2 p : img) f.add(p);
    images.push_back(std::move(img));
  }
  std::ostringstream os;
  os << header(f);
  os << "  <polygon points=\"" << points(f, spec.target)
     << "\" fill=\"none\" stroke=\"#203040\" stroke-width=\"3\"/>\n";
  for (const auto& img : images) {
    os << "  <polygon points=\"" << points(f, img)
       << "\" fill=\"#3a6ea5\" fill-opacity=\"0.25\" stroke=\"#3a6ea5\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace zipunfold
