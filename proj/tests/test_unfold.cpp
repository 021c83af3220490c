#include <doctest.h>

#include <map>

#include "zipunfold/unfold.hpp"

using namespace zipunfold;

namespace {

// Every Hamiltonian net of a solid (the icosahedron only between 0 and 1).
std::vector<Net> nets_of(Solid s) {
  const auto p = build_solid(s);
  std::vector<Net> out;
  const auto paths = s == Solid::Icosahedron ? enumerate_paths_between(p, 0, 1) : enumerate_paths(p);
  for (const auto& c : paths) out.push_back(unfold(p, c));
  return out;
}

}  // namespace

TEST_CASE("net boundary invariants") {
  for (Solid s : kAllSolids) {
    CAPTURE(solid_name(s));
    const auto p = build_solid(s);
    for (const Net& n : nets_of(s)) {
      const int k = n.size();
      REQUIRE(k == 2 * (p.vertex_count() - 1));
      CHECK(n.perimeter == doctest::Approx(k));
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        CHECK(dist(n.boundary[i].pos, n.boundary[(i + 1) % k].pos) == doctest::Approx(1.0));
        CHECK(n.boundary[i].arc == doctest::Approx(static_cast<double>(i) / k));
        sum += n.boundary[i].angle;
      }
      // Polygon angle sum.
      CHECK(sum == doctest::Approx((k - 2) * kPi));
      CHECK(n.area() == doctest::Approx(p.surface_area()));
      CHECK(signed_area(n.outline()) > 0.0);
      // Path endpoints sit at arc 0 and 1/2.
      CHECK(n.boundary[0].origin == n.path.front());
      CHECK(n.boundary[k / 2].origin == n.path.back());
      // Each solid vertex's full angle is split among its boundary copies.
      std::map<VertexId, double> around;
      for (const auto& b : n.boundary) around[b.origin] += b.angle;
      for (const auto& [v, a] : around) CHECK(a == doctest::Approx(p.vertex_degree() * p.face_angle()));
    }
  }
}

TEST_CASE("uncut edges form a dual spanning tree") {
  for (Solid s : kAllSolids) {
    CAPTURE(solid_name(s));
    const auto p = build_solid(s);
    for (const Net& n : nets_of(s)) {
      const int f = p.face_count();
      int roots = 0;
      for (int i = 0; i < f; ++i) {
        if (n.face_parent[i] < 0) {
          ++roots;
          continue;
        }
        // Walking up reaches the root without revisiting a face.
        int steps = 0;
        for (int j = i; n.face_parent[j] >= 0 && steps <= f; j = n.face_parent[j]) ++steps;
        CHECK(steps < f);
      }
      CHECK(roots == 1);
      // f - 1 tree edges; the V - 1 cut edges appear twice on the boundary.
      CHECK(p.edge_count() - (p.vertex_count() - 1) == f - 1);
      std::map<int, int> cut;
      for (const auto& e : n.boundary_edges) ++cut[e.poly_edge];
      CHECK(static_cast<int>(cut.size()) == p.vertex_count() - 1);
      for (const auto& [e, c] : cut) CHECK(c == 2);
      for (int i = 0; i < n.size(); ++i) CHECK(n.boundary_edges[n.boundary_edges[i].mate].mate == i);
      // Faces are congruent regular polygons.
      for (const auto& face : n.faces) {
        CHECK(signed_area(face) > 0.0);
        for (std::size_t i = 0; i < face.size(); ++i) {
          CHECK(dist(face[i], face[(i + 1) % face.size()]) == doctest::Approx(1.0));
        }
      }
    }
  }
}

TEST_CASE("tetrahedron net is the 2x1 parallelogram") {
  const auto p = build_solid(Solid::Tetrahedron);
  for (const auto& c : enumerate_paths(p)) {
    const Net n = unfold(p, c);
    CHECK(n.convex());
    int corners = 0;
    for (const auto& b : n.boundary) corners += !b.straight();
    CHECK(corners == 4);
  }
}

TEST_CASE("mirror and rigid motion keep the boundary profile") {
  const auto p = build_solid(Solid::Cube);
  const Net n = unfold(p, CutPath{Solid::Cube, {0, 1, 3, 7, 5, 4, 6, 2}});
  const Net m = mirrored(n);
  CHECK(m.area() == doctest::Approx(n.area()));
  CHECK(signed_area(m.outline()) > 0.0);
  std::vector<double> a, b;
  for (const auto& s : boundary_angle_profile(n)) a.push_back(s.angle);
  for (const auto& s : boundary_angle_profile(m)) b.push_back(s.angle);
  std::reverse(b.begin(), b.end());
  bool found = false;
  for (std::size_t r = 0; r < b.size() && !found; ++r) {
    std::rotate(b.begin(), b.begin() + 1, b.end());
    found = std::equal(a.begin(), a.end(), b.begin(), [](double x, double y) { return std::abs(x - y) < 1e-9; });
  }
  CHECK(found);
  Isometry2 g;
  g.angle = 0.7;
  g.t = {3, -2};
  const Net t = transformed(n, g);
  for (int i = 0; i < n.size(); ++i) CHECK(dist(t.boundary[i].pos, g.apply(n.boundary[i].pos)) < 1e-12);
}

TEST_CASE("non-simple developments are flagged, not thrown") {
  // Some dodecahedron Hamiltonian unfoldings overlap or not; either way
  // unfold reports it and require_simple enforces it.
  const auto p = build_solid(Solid::Dodecahedron);
  int overlapping = 0;
  for (const auto& c : enumerate_paths(p)) {
    const Net n = unfold(p, c);
    if (!n.simple) {
      ++overlapping;
      CHECK_THROWS_AS(require_simple(n), NonSimpleNetError);
      CHECK_FALSE(n.non_simple_reason.empty());
    } else {
      CHECK_NOTHROW(require_simple(n));
    }
  }
  MESSAGE("overlapping dodecahedron Hamiltonian unfoldings: " << overlapping);
}
