#include <doctest.h>

#include <set>

#include "zipunfold/zipper.hpp"

using namespace zipunfold;

namespace {

std::vector<Net> sample_nets() {
  std::vector<Net> out;
  for (Solid s : {Solid::Cube, Solid::Octahedron}) {
    const auto p = build_solid(s);
    for (const auto& c : enumerate_paths(p)) out.push_back(unfold(p, c));
  }
  const auto ico = build_solid(Solid::Icosahedron);
  const auto some = enumerate_paths_between(ico, 0, 1);
  for (std::size_t i = 0; i < some.size(); i += 8) out.push_back(unfold(ico, some[i]));
  return out;
}

// Anchors, mod half the perimeter, of the non-identity zippings.
std::set<long> anchors(const std::vector<const Zipping*>& zs, int k) {
  std::set<long> out;
  for (const auto* z : zs) out.insert(std::lround(2 * z->anchor * k) % k);
  return out;
}

}  // namespace

TEST_CASE("enumeration finds every half-integer zipping") {
  // A reflex corner can only be an anchor or be glued to a vertex, so every
  // zipping of a nonconvex Hamiltonian net starts at a multiple of 1/2.
  for (const Net& n : sample_nets()) {
    if (n.convex()) continue;
    const int k = n.size();
    std::vector<Zipping> brute;
    for (int h = 0; h < k; ++h) {
      const auto out = zip_at(n, h / (2.0 * k));
      if (const auto* z = std::get_if<Zipping>(&out); z && !z->identity_refold) brute.push_back(*z);
    }
    std::vector<const Zipping*> bp;
    for (const auto& z : brute) bp.push_back(&z);
    const auto rep = enumerate_zippings(n);
    CHECK(anchors(rep.non_identity(), k) == anchors(bp, k));
    CHECK(static_cast<int>(rep.candidates.size()) <= k + 1);
  }
}

TEST_CASE("zipping properties") {
  for (const Net& n : sample_nets()) {
    const auto rep = enumerate_zippings(n);
    std::vector<Zipping> zs = rep.zippings;
    if (rep.convex_continuum) zs.push_back(std::get<Zipping>(zip_at(n, 0.123)));
    for (const auto& z : zs) {
      // Gauss-Bonnet, from the clusters and independently from all events.
      CHECK(z.total_curvature() == doctest::Approx(2 * kTwoPi).epsilon(1e-9));
      double events = 0.0;
      for (const auto& e : z.events) events += e.curvature();
      CHECK(events == doctest::Approx(2 * kTwoPi).epsilon(1e-9));
      for (const auto& e : z.events) CHECK(e.total_angle <= kTwoPi + 1e-9);
      for (double u : {0.0, 0.1, 0.37, 0.5, 0.99}) {
        CHECK(wrap_unit(z.partner(z.partner(u)) - u + 0.5) == doctest::Approx(0.5));
      }
      CHECK(z.co_anchor == doctest::Approx(wrap_unit(z.anchor + 0.5)));
    }
  }
}

TEST_CASE("identity refold is always valid and rebuilds the solid") {
  for (Solid s : kAllSolids) {
    CAPTURE(solid_name(s));
    const auto p = build_solid(s);
    const double kappa = kTwoPi - p.vertex_degree() * p.face_angle();
    const auto paths = s == Solid::Icosahedron ? enumerate_paths_between(p, 0, 11) : enumerate_paths(p);
    for (std::size_t i = 0; i < paths.size(); i += (s == Solid::Dodecahedron ? 7 : 1)) {
      const Net n = unfold(p, paths[i]);
      const auto out = zip_at(n, 0.0);
      REQUIRE(std::holds_alternative<Zipping>(out));
      const auto& z = std::get<Zipping>(out);
      CHECK(z.identity_refold);
      REQUIRE(z.vertex_count() == p.vertex_count());
      for (double c : z.curvature_profile()) CHECK(c == doctest::Approx(kappa));
    }
  }
}

TEST_CASE("convex nets zip from everywhere") {
  const auto p = build_solid(Solid::Tetrahedron);
  const Net n = unfold(p, enumerate_paths(p).front());
  const auto rep = enumerate_zippings(n);
  CHECK(rep.convex_continuum);
  CHECK_FALSE(is_zip_rigid(rep));
  for (int i = 0; i < 60; ++i) CHECK(std::holds_alternative<Zipping>(zip_at(n, i / 60.0)));
}

TEST_CASE("dodecahedron rejections pair the 324 degree corner with a 108 degree one") {
  const auto p = build_solid(Solid::Dodecahedron);
  const auto paths = enumerate_paths(p);
  for (std::size_t i = 0; i < paths.size(); i += 13) {
    const Net n = unfold(p, paths[i]);
    const auto rep = enumerate_zippings(n);
    CHECK(is_zip_rigid(rep));
    CHECK(n.boundary[rep.reflex_vertex].angle == doctest::Approx(1.8 * kPi));
    CHECK(rep.rejected_count() > 0);
    for (const auto& c : rep.candidates) {
      if (const auto* r = std::get_if<ZipRejection>(&c.outcome)) {
        CHECK(r->total_angle == doctest::Approx(2.4 * kPi));
        REQUIRE(r->vertices.size() == 2);
        CHECK(n.boundary[r->vertices[1]].angle == doctest::Approx(0.6 * kPi));
      }
    }
  }
}

TEST_CASE("cube nets") {
  const auto p = build_solid(Solid::Cube);
  CHECK(is_zip_rigid(unfold(p, CutPath{Solid::Cube, {0, 1, 3, 2, 6, 7, 5, 4}})));
  CHECK_FALSE(is_zip_rigid(unfold(p, CutPath{Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}})));
  CHECK_FALSE(is_zip_rigid(unfold(p, CutPath{Solid::Cube, {0, 1, 3, 7, 5, 4, 6, 2}})));
}

TEST_CASE("same_gluing ignores which anchor is called x") {
  Zipping a, b;
  a.anchor = 0.1;
  b.anchor = 0.6;
  CHECK(same_gluing(a, b));
  b.anchor = 0.35;
  CHECK_FALSE(same_gluing(a, b));
}
