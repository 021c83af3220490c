#include <doctest.h>

#include "oracles.hpp"
#include "zipunfold/congruence.hpp"
#include "zipunfold/zipper.hpp"

using namespace zipunfold;

namespace {

// Partition by pairwise brute-force congruence, as sorted member lists.
std::vector<std::vector<int>> brute_classes(const std::vector<Net>& nets) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(nets.size()); ++i) {
    bool placed = false;
    for (auto& c : out) {
      if (oracle::congruent(nets[c.front()].outline(), nets[i].outline())) {
        c.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({i});
  }
  return out;
}

std::vector<std::vector<int>> members(const std::vector<CongruenceClass>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.members);
  return out;
}

}  // namespace

TEST_CASE("dedupe matches brute-force congruence") {
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron}) {
    CAPTURE(solid_name(s));
    const auto p = build_solid(s);
    std::vector<Net> nets;
    for (const auto& c : enumerate_paths(p)) nets.push_back(unfold(p, c));
    CHECK(members(dedupe(nets)) == brute_classes(nets));
  }
  const auto ico = build_solid(Solid::Icosahedron);
  std::vector<Net> zippable;
  for (const auto& c : enumerate_paths_between(ico, 0, 1)) {
    Net n = unfold(ico, c);
    if (!is_zip_rigid(n)) zippable.push_back(std::move(n));
  }
  CHECK(members(dedupe(zippable)) == brute_classes(zippable));
}

TEST_CASE("signature is invariant under motion, mirror and start vertex") {
  const auto p = build_solid(Solid::Octahedron);
  const Net n = unfold(p, CutPath{Solid::Octahedron, {0, 1, 5, 2, 4, 3}});
  const auto sig = signature(n);
  Isometry2 g;
  g.angle = 2.1;
  g.t = {-4, 9};
  CHECK(signature(transformed(n, g)) == sig);
  CHECK(signature(mirrored(n)) == sig);
  Polygon2 poly = n.outline();
  std::rotate(poly.begin(), poly.begin() + 3, poly.end());
  CHECK(polygon_signature(poly) == sig);
  // A different unfolding gets a different signature.
  const auto other = signature(unfold(p, CutPath{Solid::Octahedron, {0, 1, 2, 4, 5, 3}}));
  CHECK(other != sig);
}

TEST_CASE("dedupe is idempotent") {
  const auto p = build_solid(Solid::Cube);
  std::vector<Net> nets;
  for (const auto& c : enumerate_paths(p)) nets.push_back(unfold(p, c));
  const auto once = dedupe(nets);
  std::vector<Net> reps;
  for (const auto& c : once) reps.push_back(nets[c.representative()]);
  const auto twice = dedupe(reps);
  CHECK(twice.size() == once.size());
  for (const auto& c : twice) CHECK(c.size() == 1);
}

TEST_CASE("distinct unfoldings and path orbits") {
  auto classes = [](Solid s) {
    const auto p = build_solid(s);
    std::vector<Net> nets;
    for (const auto& c : enumerate_paths(p)) nets.push_back(unfold(p, c));
    return dedupe(nets).size();
  };
  CHECK(classes(Solid::Tetrahedron) == 1);
  CHECK(classes(Solid::Cube) == 3);
  // Path orbits under symmetry can only split congruence classes, never merge.
  for (Solid s : {Solid::Cube, Solid::Octahedron}) {
    const auto p = build_solid(s);
    const auto paths = enumerate_paths(p);
    CHECK(path_orbits(p, paths).size() >= classes(s));
  }
}
