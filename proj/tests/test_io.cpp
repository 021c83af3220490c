#include <doctest.h>

#include <regex>

#include "zipunfold/json_io.hpp"
#include "zipunfold/svg.hpp"

using namespace zipunfold;

namespace {

int count(const std::string& text, const std::string& what) {
  int n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("net JSON carries provenance and boundary") {
  const auto p = build_solid(Solid::Cube);
  const Net n = unfold(p, CutPath{Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}});
  const Json j = to_json(n);
  CHECK(j["provenance"]["solid"] == "cube");
  CHECK(j["provenance"]["path"].size() == 8);
  CHECK(j["faces"].size() == 6);
  CHECK(j["boundary"].size() == 14);
  CHECK(j["boundary"][0]["origin"] == 0);
  CHECK(cut_path_from_json(j["provenance"]) == n.path);
  // Deterministic output.
  CHECK(dump(to_json(unfold(p, n.path))) == dump(j));
}

TEST_CASE("zip report JSON lists rejected candidates on request") {
  const auto p = build_solid(Solid::Dodecahedron);
  const Net n = unfold(p, enumerate_paths(p).front());
  const auto rep = enumerate_zippings(n);
  const Json plain = to_json(rep);
  CHECK_FALSE(plain.contains("rejected_candidates"));
  const Json full = to_json(rep, true);
  REQUIRE(full["rejected_candidates"].size() == static_cast<std::size_t>(rep.rejected_count()));
  for (const auto& r : full["rejected_candidates"]) CHECK(r["angle_deg"].get<double>() == doctest::Approx(432.0));
  CHECK(full["zip_rigid"] == true);
}

TEST_CASE("net SVG at 100 px per unit") {
  const auto p = build_solid(Solid::Cube);
  const Net n = unfold(p, CutPath{Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}});
  const std::string svg = net_svg(n);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polygon") == 7);  // six squares and the outline
  CHECK(count(svg, "<circle") == 2);   // the path endpoints
  double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
  for (const auto& b : n.boundary) {
    x0 = std::min(x0, b.pos.x), x1 = std::max(x1, b.pos.x);
    y0 = std::min(y0, b.pos.y), y1 = std::max(y1, b.pos.y);
  }
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("width=\"([0-9.]+)\" height=\"([0-9.]+)\"")));
  CHECK(std::stod(m[1]) == doctest::Approx((x1 - x0) * 100 + 40));
  CHECK(std::stod(m[2]) == doctest::Approx((y1 - y0) * 100 + 40));
  CHECK(net_svg(n) == svg);
}

TEST_CASE("fold SVG draws every facet image") {
  const FoldSpec f = load_foldspec(std::string(ZIPUNFOLD_DATA_DIR) + "/foldspecs/tetrahedron-rhombus.json");
  const std::string svg = fold_svg(f);
  CHECK(count(svg, "<polygon") == static_cast<int>(f.facets.size()) + 1);
}

TEST_CASE("loading a missing or broken file fails cleanly") {
  CHECK_THROWS_AS(load_foldspec("/nonexistent/spec.json"), std::runtime_error);
  CHECK_THROWS_AS(foldspec_from_json(Json::parse("{\"name\": 3}")), FoldSpecError);
}
