#include "zipunfold/congruence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zipunfold {

namespace {

long long quantize(double v, double grid) { return std::llround(v / grid); }

// Lexicographically smallest rotation starting on an even (length) token.
std::vector<long long> min_rotation(const std::vector<long long>& t) {
  const std::size_t n = t.size();
  std::vector<long long> best, cur(n);
  for (std::size_t s = 0; s < n; s += 2) {
    for (std::size_t i = 0; i < n; ++i) cur[i] = t[(s + i) % n];
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::string CanonicalSignature::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) os << (i % 2 ? ':' : ',');
    os << tokens[i];
  }
  return os.str();
}

CanonicalSignature polygon_signature(const Polygon2& poly) {
  const std::size_t n = poly.size();
  // tokens: len(e0), turn(v1), len(e1), turn(v2), ..., len(e_{n-1}), turn(v0)
  std::vector<long long> t;
  t.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[(i + 1) % n], c = poly[(i + 2) % n];
    t.push_back(quantize(dist(a, b), kSignatureLengthGrid));
    const Vec2 d0 = b - a, d1 = c - b;
    t.push_back(quantize(std::atan2(cross(d0, d1), dot(d0, d1)), kSignatureAngleGrid));
  }
  // The mirror image walked counter-clockwise reads the tokens backwards.
  std::vector<long long> r(t.rbegin(), t.rend());
  std::rotate(r.begin(), r.begin() + 1, r.end());
  CanonicalSignature s;
  s.tokens = std::min(min_rotation(t), min_rotation(r));
  return s;
}

CanonicalSignature signature(const Net& n) {
  require_simple(n);
  return polygon_signature(n.outline());
}

std::vector<CongruenceClass> dedupe(const std::vector<Net>& nets) {
  std::vector<CongruenceClass> classes;
  std::map<CanonicalSignature, int> index;
  for (int i = 0; i < static_cast<int>(nets.size()); ++i) {
    CanonicalSignature s = signature(nets[i]);
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(classes.size()));
    if (fresh) classes.push_back({std::move(s), {}});
    classes[it->second].members.push_back(i);
  }
  return classes;
}

std::vector<std::vector<VertexId>> symmetry_group(const Polyhedron& p) {
  const auto& v = p.vertices();
  const int n = p.vertex_count();
  // Three linearly independent vertex vectors (the solids are centered).
  int i0 = 0, i1 = -1, i2 = -1;
  for (int j = 1; j < n && i1 < 0; ++j) {
    if (norm(cross(v[i0], v[j])) > 1e-6) i1 = j;
  }
  for (int j = 1; j < n && i2 < 0; ++j) {
    if (std::abs(dot(cross(v[i0], v[i1]), v[j])) > 1e-6) i2 = j;
  }
  const Vec3 a = v[i0], b = v[i1], c = v[i2];
  const double det = dot(a, cross(b, c));
  // Rows of the inverse of the column matrix [a b c].
  const Vec3 r0 = cross(b, c) * (1.0 / det), r1 = cross(c, a) * (1.0 / det),
             r2 = cross(a, b) * (1.0 / det);

  auto find_vertex = [&](Vec3 q) {
    for (int k = 0; k < n; ++k) {
      if (norm(v[k] - q) < 1e-6) return k;
    }
    return -1;
  };

  std::vector<std::vector<VertexId>> group;
  for (int ja = 0; ja < n; ++ja) {
    for (int jb = 0; jb < n; ++jb) {
      for (int jc = 0; jc < n; ++jc) {
        const Vec3 a2 = v[ja], b2 = v[jb], c2 = v[jc];
        if (std::abs(dot(a2, b2) - dot(a, b)) > 1e-6 || std::abs(dot(b2, c2) - dot(b, c)) > 1e-6 ||
            std::abs(dot(a2, c2) - dot(a, c)) > 1e-6) {
          continue;
        }
        // M = [a2 b2 c2] * [a b c]^-1
        std::vector<VertexId> perm(n);
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
          const Vec3 q = a2 * dot(r0, v[k]) + b2 * dot(r1, v[k]) + c2 * dot(r2, v[k]);
          perm[k] = find_vertex(q);
          ok = perm[k] >= 0;
        }
        if (ok) group.push_back(std::move(perm));
      }
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::vector<std::vector<int>> path_orbits(const Polyhedron& p, const std::vector<CutPath>& paths) {
  const auto group = symmetry_group(p);
  std::map<std::vector<VertexId>, int> index;
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    std::vector<VertexId> best;
    for (const auto& g : group) {
      std::vector<VertexId> img;
      for (VertexId u : paths[i].vertices) img.push_back(g[u]);
      if (best.empty() || img < best) best = img;
      std::reverse(img.begin(), img.end());
      if (img < best) best = img;
    }
    auto [it, fresh] = index.try_emplace(best, static_cast<int>(orbits.size()));
    if (fresh) orbits.emplace_back();
    orbits[it->second].push_back(i);
  }
  return orbits;
}

}  // namespace zipunfold
