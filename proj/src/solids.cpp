#include "zipunfold/solids.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace zipunfold {

std::string_view solid_name(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Cube: return "cube";
    case Solid::Octahedron: return "octahedron";
    case Solid::Dodecahedron: return "dodecahedron";
    case Solid::Icosahedron: return "icosahedron";
  }
  return "?";
}

Solid parse_solid(std::string_view name) {
  for (Solid s : kAllSolids) {
    if (solid_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown solid '" + std::string(name) + "'");
}

namespace {

// Faces of the convex hull of a symmetric point set: every plane through three
// points with all other points on one side. Each face is ordered CCW seen
// from outside and rotated so its smallest index comes first.
std::vector<std::vector<VertexId>> hull_faces(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec3 normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        const double len = norm(normal);
        if (len < 1e-9) continue;
        normal = normal * (1.0 / len);
        const double offset = dot(normal, pts[i]);
        int above = 0, below = 0;
        std::vector<VertexId> on;
        for (int m = 0; m < n; ++m) {
          const double d = dot(normal, pts[m]) - offset;
          if (d > 1e-9) ++above;
          else if (d < -1e-9) ++below;
          else on.push_back(m);
        }
        if (above > 0 && below > 0) continue;
        if (above > 0) normal = normal * -1.0;
        // Order the coplanar points counter-clockwise around the outward normal.
        Vec3 centroid;
        for (VertexId v : on) centroid = centroid + pts[v];
        centroid = centroid * (1.0 / static_cast<double>(on.size()));
        const Vec3 ref = pts[on.front()] - centroid;
        const Vec3 ref2 = cross(normal, ref);
        std::sort(on.begin(), on.end(), [&](VertexId a, VertexId b) {
          const Vec3 da = pts[a] - centroid, db = pts[b] - centroid;
          return std::atan2(dot(da, ref2), dot(da, ref)) < std::atan2(dot(db, ref2), dot(db, ref));
        });
        std::rotate(on.begin(), std::min_element(on.begin(), on.end()), on.end());
        if (std::find(faces.begin(), faces.end(), on) == faces.end()) faces.push_back(on);
      }
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::vector<Vec3> raw_vertices(Solid s) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v;
  switch (s) {
    case Solid::Tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Solid::Cube:
      for (int i = 0; i < 8; ++i) {
        v.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
      }
      break;
    case Solid::Octahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case Solid::Icosahedron:
      for (double a : {-1.0, 1.0}) {
        for (double b : {-phi, phi}) {
          v.push_back({0, a, b});
          v.push_back({a, b, 0});
          v.push_back({b, 0, a});
        }
      }
      break;
    case Solid::Dodecahedron:
      for (int i = 0; i < 8; ++i) {
        v.push_back({(i & 1) ? 1.0 : -1.0, (i & 2) ? 1.0 : -1.0, (i & 4) ? 1.0 : -1.0});
      }
      for (double a : {-1.0 / phi, 1.0 / phi}) {
        for (double b : {-phi, phi}) {
          v.push_back({0, a, b});
          v.push_back({a, b, 0});
          v.push_back({b, 0, a});
        }
      }
      break;
  }
  // Sort for a stable labeling independent of construction order.
  std::sort(v.begin(), v.end(), [](const Vec3& a, const Vec3& b) {
    if (std::abs(a.z - b.z) > 1e-9) return a.z > b.z;
    if (std::abs(a.y - b.y) > 1e-9) return a.y > b.y;
    return a.x > b.x + 1e-9;
  });
  // Normalize to unit edge length.
  double min_len = 1e300;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) min_len = std::min(min_len, norm(v[i] - v[j]));
  }
  for (Vec3& p : v) p = p * (1.0 / min_len);
  return v;
}

}  // namespace

Polyhedron::Polyhedron(Solid kind, std::vector<Vec3> vertices,
                       std::vector<std::vector<VertexId>> faces)
    : kind_(kind), vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int n = vertex_count();
  neighbors_.assign(n, {});
  std::map<Edge, std::pair<int, int>> owners;
  for (int f = 0; f < face_count(); ++f) {
    const auto& face = faces_[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const VertexId a = face[i], b = face[(i + 1) % face.size()];
      auto [it, fresh] = owners.try_emplace(make_edge(a, b), -1, -1);
      auto& slot = (a < b) ? it->second.first : it->second.second;
      if (slot != -1) throw std::logic_error("inconsistent face orientation");
      slot = f;
    }
  }
  for (const auto& [e, fs] : owners) {
    if (fs.first < 0 || fs.second < 0) throw std::logic_error("edge not shared by two faces");
    edges_.push_back(e);
    edge_faces_.push_back(fs);
    neighbors_[e.a].push_back(e.b);
    neighbors_[e.b].push_back(e.a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

double Polyhedron::surface_area() const {
  const int k = face_sides();
  // Regular k-gon of unit side.
  return face_count() * k / (4.0 * std::tan(kPi / k));
}

bool Polyhedron::adjacent(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

int Polyhedron::edge_index(VertexId u, VertexId v) const {
  if (u == v) return -1;
  const Edge e = make_edge(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Polyhedron build_solid(Solid s) {
  auto v = raw_vertices(s);
  auto f = hull_faces(v);
  return Polyhedron(s, std::move(v), std::move(f));
}

Polyhedron build_solid(std::string_view name) { return build_solid(parse_solid(name)); }

int graph_distance(const Polyhedron& p, VertexId u, VertexId v) {
  const int n = p.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("vertex index out of range for " + std::string(p.name()));
  }
  std::vector<int> d(n, -1);
  std::deque<VertexId> queue{u};
  d[u] = 0;
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    if (w == v) return d[w];
    for (VertexId x : p.neighbors(w)) {
      if (d[x] < 0) {
        d[x] = d[w] + 1;
        queue.push_back(x);
      }
    }
  }
  return d[v];
}

std::vector<std::vector<int>> distance_matrix(const Polyhedron& p) {
  const int n = p.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) d[u][v] = graph_distance(p, u, v);
  }
  return d;
}

}  // namespace zipunfold
