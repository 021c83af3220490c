#include <doctest.h>

#include <filesystem>

#include "zipunfold/json_io.hpp"
#include "zipunfold/rectfold.hpp"
#include "zipunfold/report.hpp"

using namespace zipunfold;

namespace {

std::string data_file(const std::string& name) { return std::string(ZIPUNFOLD_DATA_DIR) + "/foldspecs/" + name; }

bool check_passed(const VerificationReport& r, const char* name) {
  const auto* c = r.check(name);
  REQUIRE(c);
  return c->passed;
}

FoldSpec cube_s() { return load_foldspec(data_file("cube-s-parallelogram.json")); }

}  // namespace

TEST_CASE("shipped folds verify with the claimed shapes") {
  for (const auto& sf : shipped_folds()) {
    CAPTURE(sf.file);
    const FoldSpec f = load_foldspec(data_file(sf.file));
    const auto r = verify_fold(f);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(shape_matches(r.shape, sf.kind, sf.dimensions));
    CHECK((f.gluing.kind == FoldGluing::Kind::NonZip) == sf.non_zip);
    CHECK(target_area_check(f));
    CHECK(r.coverage_failures == 0);
    CHECK(r.coverage_samples >= 10000);
    if (!sf.non_zip) {
      // A verified zip fold passes the angle screen and the rim search.
      const Net n = spec_net(f);
      const auto z = std::get<Zipping>(zip_at(n, f.gluing.anchor));
      CHECK(flat_compatible(z));
      CHECK(is_flat(n, z));
      CHECK(r.tree.path());
    } else {
      CHECK_FALSE(r.tree.path());
    }
  }
}

TEST_CASE("reflected specs pass exactly when the original does") {
  for (const auto& sf : shipped_folds()) {
    CAPTURE(sf.file);
    const FoldSpec f = load_foldspec(data_file(sf.file));
    CHECK(verify_fold(reflected(f)).passed());
    CHECK(verify_fold(reflected(reflected(f))).passed());
  }
  FoldSpec bad = cube_s();
  bad.isometries[3].t.x += 0.05;
  CHECK_FALSE(verify_fold(bad).passed());
  CHECK_FALSE(verify_fold(reflected(bad)).passed());
}

TEST_CASE("single layer fails double coverage") {
  const auto p = build_solid(Solid::Cube);
  const Net n = unfold(p, CutPath{Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}});
  FoldSpec f;
  f.name = "identity";
  f.solid = Solid::Cube;
  f.path = n.path;
  f.facets = n.faces;
  f.isometries.assign(n.faces.size(), Isometry2{});
  f.target = n.outline();
  f.gluing.anchor = 0.0;
  const auto r = verify_fold(f);
  CHECK_FALSE(r.passed());
  CHECK(check_passed(r, "tiling"));
  CHECK(check_passed(r, "containment"));
  CHECK_FALSE(check_passed(r, "double-coverage"));
  CHECK(r.coverage_failures == r.coverage_samples);
  CHECK_FALSE(target_area_check(f));
}

TEST_CASE("tampering is caught by the matching check") {
  SUBCASE("wrong zip anchor") {
    FoldSpec f = cube_s();
    f.gluing.anchor = wrap_unit(f.gluing.anchor + 1.0 / 14);
    const auto r = verify_fold(f);
    CHECK_FALSE(check_passed(r, "gluing"));
    CHECK(check_passed(r, "double-coverage"));
  }
  SUBCASE("zip fold claimed as non-zip") {
    FoldSpec f = cube_s();
    f.gluing.kind = FoldGluing::Kind::NonZip;
    CHECK_FALSE(check_passed(verify_fold(f), "gluing-tree"));
  }
  SUBCASE("wrong junction degrees") {
    FoldSpec f = load_foldspec(data_file("octahedron-nonzip-rectangle.json"));
    f.gluing.junction_degrees = {3};
    CHECK_FALSE(check_passed(verify_fold(f), "gluing-tree"));
  }
  SUBCASE("facet moved off the target") {
    FoldSpec f = cube_s();
    f.isometries[0].t.y += 0.5;
    const auto r = verify_fold(f);
    CHECK_FALSE(check_passed(r, "containment"));
    CHECK_FALSE(check_passed(r, "creases"));
  }
  SUBCASE("facets that no longer tile the net") {
    FoldSpec f = cube_s();
    f.facets[0][0] = f.facets[0][0] + Vec2{0.01, 0.013};
    CHECK_THROWS_AS(verify_fold(f), FoldSpecError);
  }
}

TEST_CASE("malformed specs raise") {
  FoldSpec f = cube_s();
  f.isometries.pop_back();
  CHECK_THROWS_AS(verify_fold(f), FoldSpecError);
  f = cube_s();
  f.facets.clear();
  f.isometries.clear();
  CHECK_THROWS_AS(verify_fold(f), FoldSpecError);
  f = cube_s();
  std::reverse(f.target.begin(), f.target.end());
  CHECK_THROWS_AS(verify_fold(f), FoldSpecError);
  f = cube_s();
  f.facets.pop_back();
  f.isometries.pop_back();
  CHECK_THROWS_AS(verify_fold(f), FoldSpecError);

  Json j = to_json(cube_s());
  j.erase("target");
  CHECK_THROWS_AS(foldspec_from_json(j), FoldSpecError);
  j = to_json(cube_s());
  j["gluing"]["type"] = "spiral";
  CHECK_THROWS_AS(foldspec_from_json(j), FoldSpecError);
  j = to_json(cube_s());
  j["net"]["path"] = Json::array({0, 1, 2});
  CHECK_THROWS_AS(foldspec_from_json(j), FoldSpecError);
}

TEST_CASE("target classification") {
  CHECK(describe_target({{0, 0}, {2, 0}, {2, 1}, {0, 1}}).kind == "rectangle");
  CHECK(describe_target({{0, 0}, {1, 0}, {1, 1}, {0, 1}}).kind == "square");
  CHECK(describe_target({{0, 0}, {1, 0}, {1.5, 0.8}, {0.5, 0.8}}).kind == "parallelogram");
  CHECK(describe_target({{0, 0}, {2, 0}, {1, 1}}).kind == "triangle");
  const auto l = describe_target({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(l.kind == "nonconvex");
  CHECK(l.angles[3] == doctest::Approx(1.5 * kPi));
}

TEST_CASE("rectangle reflection search") {
  const auto p = build_solid(Solid::Octahedron);
  const Net n = unfold(p, CutPath{Solid::Octahedron, {0, 1, 5, 2, 4, 3}});
  const auto f = fold_onto_rectangle(n, std::sqrt(3.0) / 2, 2.0);
  REQUIRE(f);
  CHECK(f->gluing.kind == FoldGluing::Kind::NonZip);
  const auto r = verify_fold(*f, n);
  CHECK(r.passed());
  CHECK(r.tree.max_degree >= 3);
  // Wrong area: nothing to find.
  CHECK_FALSE(fold_onto_rectangle(n, 1.0, 1.0));
}

TEST_CASE("FoldSpec JSON round trip is byte-stable") {
  for (const auto& sf : shipped_folds()) {
    const FoldSpec f = load_foldspec(data_file(sf.file));
    const std::string once = dump(to_json(f));
    CHECK(dump(to_json(foldspec_from_json(Json::parse(once)))) == once);
  }
}
