#include "zipunfold/unfold.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace zipunfold {

namespace {

// Face vertices in the face's own plane, first edge along +x, CCW.
Polygon2 local_face(const Polyhedron& p, int f) {
  const auto& face = p.faces()[f];
  const auto& v = p.vertices();
  const Vec3 o = v[face[0]];
  Vec3 e1 = v[face[1]] - o;
  e1 = e1 * (1.0 / norm(e1));
  Vec3 n = cross(v[face[1]] - o, v[face[2]] - o);
  n = n * (1.0 / norm(n));
  const Vec3 e2 = cross(n, e1);
  Polygon2 out;
  for (VertexId id : face) {
    const Vec3 d = v[id] - o;
    out.push_back({dot(d, e1), dot(d, e2)});
  }
  return out;
}

int index_in_face(const std::vector<VertexId>& face, VertexId v) {
  const auto it = std::find(face.begin(), face.end(), v);
  return it == face.end() ? -1 : static_cast<int>(it - face.begin());
}

bool convex_polygons_overlap(const Polygon2& a, const Polygon2& b) {
  // Separating axis test; touching along an edge or a point is not overlap.
  auto separated = [](const Polygon2& p, const Polygon2& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vec2 s = p[i], t = p[(i + 1) % p.size()];
      const Vec2 d = t - s;
      const double len = norm(d);
      bool all_outside = true;
      for (const Vec2& r : q) {
        if (cross(d, r - s) / len > -1e-7) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
      // Touching counts as separated: all of q on or right of the line.
      bool none_inside = true;
      for (const Vec2& r : q) {
        if (cross(d, r - s) / len > 1e-7) {
          none_inside = false;
          break;
        }
      }
      if (none_inside) return true;
    }
    return false;
  };
  return !separated(a, b) && !separated(b, a);
}

}  // namespace

Polygon2 Net::outline() const {
  Polygon2 out;
  out.reserve(boundary.size());
  for (const auto& b : boundary) out.push_back(b.pos);
  return out;
}

bool Net::convex() const {
  return std::none_of(boundary.begin(), boundary.end(),
                      [](const BoundaryVertex& b) { return b.reflex(); });
}

double Net::area() const { return signed_area(outline()); }

Net unfold(const Polyhedron& p, const CutPath& c) {
  validate_cut_path(p, c);
  const int nf = p.face_count();

  std::vector<bool> cut(p.edge_count(), false);
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    cut[p.edge_index(c.vertices[i], c.vertices[i + 1])] = true;
  }

  Net net;
  net.solid = p.kind();
  net.path = c;
  net.face_angle = p.face_angle();
  net.faces.assign(nf, {});
  net.face_parent.assign(nf, -1);

  // Place faces breadth-first across uncut edges from face 0.
  std::vector<bool> placed(nf, false);
  net.faces[0] = local_face(p, 0);
  placed[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const auto& face = p.faces()[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const VertexId a = face[i], b = face[(i + 1) % face.size()];
      const int e = p.edge_index(a, b);
      if (cut[e]) continue;
      const auto [f1, f2] = p.edge_faces(e);
      const int g = (f1 == f) ? f2 : f1;
      if (placed[g]) continue;
      const Polygon2 local = local_face(p, g);
      const auto& gface = p.faces()[g];
      const int ia = index_in_face(gface, a), ib = index_in_face(gface, b);
      const Isometry2 m = Isometry2::rigid_from_segments(local[ia], local[ib], net.faces[f][i],
                                                         net.faces[f][(i + 1) % face.size()]);
      Polygon2 img;
      for (const Vec2& q : local) img.push_back(m.apply(q));
      net.faces[g] = std::move(img);
      net.face_parent[g] = f;
      placed[g] = true;
      queue.push_back(g);
    }
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
    throw std::logic_error("uncut edges do not connect the faces");
  }

  // Walk the boundary counter-clockwise. A boundary edge is a face side
  // (face, a->b) whose polyhedron edge is cut.
  const VertexId start = c.vertices[0];
  const int first_edge = p.edge_index(c.vertices[0], c.vertices[1]);
  int face = -1;
  {
    const auto [f1, f2] = p.edge_faces(first_edge);
    face = (p.edges()[first_edge].a == start) ? f1 : f2;
  }
  int side = index_in_face(p.faces()[face], start);
  const int total = 2 * (p.vertex_count() - 1);
  std::vector<double> angles;
  for (int step = 0; step < total; ++step) {
    const auto& fv = p.faces()[face];
    const int k = static_cast<int>(fv.size());
    const VertexId a = fv[side], b = fv[(side + 1) % k];
    BoundaryVertex bv;
    bv.pos = net.faces[face][side];
    bv.origin = a;
    net.boundary.push_back(bv);
    const int e = p.edge_index(a, b);
    net.boundary_edges.push_back({e, face, -1});
    // Rotate around b through uncut edges until the next cut side.
    int f = face;
    int s = (side + 1) % k;
    double angle = 0.0;
    int corners = 0;
    while (true) {
      const auto& gv = p.faces()[f];
      const int gk = static_cast<int>(gv.size());
      angle += p.face_angle();
      ++corners;
      const VertexId nxt = gv[(s + 1) % gk];
      const int ge = p.edge_index(b, nxt);
      if (cut[ge]) break;
      const auto [g1, g2] = p.edge_faces(ge);
      f = (g1 == f) ? g2 : g1;
      s = index_in_face(p.faces()[f], b);
    }
    angles.push_back(angle);
    face = f;
    side = s;
    if (step + 1 < total) continue;
    if (p.faces()[face][side] != start || p.edge_index(start, p.faces()[face][(side + 1) % p.faces()[face].size()]) != first_edge) {
      throw std::logic_error("boundary walk did not close");
    }
    (void)corners;
  }
  const int n = static_cast<int>(net.boundary.size());
  for (int i = 0; i < n; ++i) {
    // angles[i] belongs to the vertex the i-th edge arrives at.
    auto& bv = net.boundary[(i + 1) % n];
    bv.angle = angles[i];
    bv.face_corners = static_cast<int>(std::lround(angles[i] / p.face_angle()));
    net.boundary[i].arc = static_cast<double>(i) / n;
  }
  net.perimeter = static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && net.boundary_edges[i].poly_edge == net.boundary_edges[j].poly_edge) {
        net.boundary_edges[i].mate = j;
      }
    }
  }

  // Simplicity: non-adjacent boundary edges must not meet and faces must not overlap.
  const Polygon2 outline = net.outline();
  for (int i = 0; i < n && net.simple; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(outline[i], outline[(i + 1) % n], outline[j], outline[(j + 1) % n],
                             1e-7)) {
        net.simple = false;
        net.non_simple_reason = "boundary edges " + std::to_string(i) + " and " +
                                std::to_string(j) + " meet";
        break;
      }
    }
  }
  for (int f = 0; f < nf && net.simple; ++f) {
    for (int g = f + 1; g < nf; ++g) {
      if (convex_polygons_overlap(net.faces[f], net.faces[g])) {
        net.simple = false;
        net.non_simple_reason =
            "faces " + std::to_string(f) + " and " + std::to_string(g) + " overlap";
        break;
      }
    }
  }
  return net;
}

std::vector<AngleSample> boundary_angle_profile(const Net& n) {
  require_simple(n);
  std::vector<AngleSample> out;
  out.reserve(n.boundary.size());
  for (const auto& b : n.boundary) out.push_back({b.angle, b.origin});
  return out;
}

void require_simple(const Net& n) {
  if (!n.simple) {
    throw NonSimpleNetError("net of " + std::string(solid_name(n.solid)) +
                            " is not simple: " + n.non_simple_reason);
  }
}

Net transformed(const Net& n, const Isometry2& m) {
  Net out = n;
  for (auto& face : out.faces) {
    for (auto& q : face) q = m.apply(q);
  }
  for (auto& b : out.boundary) b.pos = m.apply(b.pos);
  if (m.reflect) {
    // Restore counter-clockwise order, keeping vertex 0 first.
    const int k = out.size();
    std::vector<BoundaryVertex> verts(k);
    std::vector<BoundaryEdge> edges(k);
    for (int i = 0; i < k; ++i) {
      verts[i] = out.boundary[(k - i) % k];
      verts[i].arc = static_cast<double>(i) / k;
      edges[i] = out.boundary_edges[(2 * k - i - 1) % k];
    }
    for (auto& e : edges) e.mate = (2 * k - e.mate - 1) % k;
    out.boundary = std::move(verts);
    out.boundary_edges = std::move(edges);
  }
  return out;
}

Net mirrored(const Net& n) {
  Isometry2 flip;
  flip.reflect = true;
  return transformed(n, flip);
}

}  // namespace zipunfold
