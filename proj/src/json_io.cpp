#include "zipunfold/json_io.hpp"

#include <fstream>
#include <sstream>

namespace zipunfold {

namespace {

constexpr double kRad = 180.0 / kPi;

Json point(Vec2 p) { return Json::array({p.x, p.y}); }

Json polygon(const Polygon2& poly) {
  Json out = Json::array();
  for (Vec2 p : poly) out.push_back(point(p));
  return out;
}

Polygon2 polygon_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + ": expected an array of [x, y] points");
  Polygon2 out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument(what + ": malformed point " + p.dump());
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Polyhedron& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(Json::array({v.x, v.y, v.z}));
  Json faces = Json::array();
  for (const auto& f : p.faces()) faces.push_back(f);
  Json edges = Json::array();
  for (const auto& e : p.edges()) edges.push_back(Json::array({e.a, e.b}));
  return Json{{"name", std::string(p.name())},
              {"V", p.vertex_count()},
              {"E", p.edge_count()},
              {"F", p.face_count()},
              {"face_angle_deg", p.face_angle() * kRad},
              {"vertices", verts},
              {"faces", faces},
              {"edges", edges}};
}

Json to_json(const CutPath& c) {
  return Json{{"solid", std::string(solid_name(c.solid))}, {"path", c.vertices}};
}

Json to_json(const Net& n) {
  Json faces = Json::array();
  for (const auto& f : n.faces) faces.push_back(polygon(f));
  Json boundary = Json::array();
  for (const auto& b : n.boundary) {
    boundary.push_back(Json{{"x", b.pos.x},
                            {"y", b.pos.y},
                            {"angle_deg", b.angle * kRad},
                            {"arc", b.arc},
                            {"origin", b.origin}});
  }
  Json out{{"provenance", to_json(n.path)},
           {"simple", n.simple},
           {"perimeter", n.perimeter},
           {"area", n.area()},
           {"convex", n.convex()},
           {"faces", faces},
           {"boundary", boundary}};
  if (!n.simple) out["non_simple_reason"] = n.non_simple_reason;
  return out;
}

Json to_json(const Zipping& z) {
  Json events = Json::array();
  for (const auto& e : z.events) {
    events.push_back(Json{{"offset", e.offset},
                          {"arcs", e.arcs},
                          {"vertices", e.vertices},
                          {"angle_deg", e.total_angle * kRad}});
  }
  Json clusters = Json::array();
  for (const auto& c : z.clusters) {
    clusters.push_back(Json{{"event", c.event},
                            {"angle_deg", c.total_angle * kRad},
                            {"curvature_deg", c.curvature * kRad}});
  }
  return Json{{"anchor", z.anchor},
              {"co_anchor", z.co_anchor},
              {"vertex_count", z.vertex_count()},
              {"identity_refold", z.identity_refold},
              {"flat_compatible", flat_compatible(z)},
              {"total_curvature_deg", z.total_curvature() * kRad},
              {"clusters", clusters},
              {"events", events}};
}

Json to_json(const ZipRejection& r) {
  return Json{{"anchor", r.anchor},
              {"arc", r.arc},
              {"vertices", r.vertices},
              {"angle_deg", r.total_angle * kRad}};
}

Json to_json(const ZipReport& r, bool with_rejected) {
  Json out{{"convex_continuum", r.convex_continuum},
           {"reflex_vertex", r.reflex_vertex},
           {"candidates", r.candidates.size()},
           {"rejected", r.rejected_count()},
           {"zip_rigid", is_zip_rigid(r)}};
  Json zs = Json::array();
  for (const auto& z : r.zippings) zs.push_back(to_json(z));
  out["zippings"] = zs;
  if (with_rejected) {
    Json rej = Json::array();
    for (const auto& c : r.candidates) {
      if (const auto* bad = std::get_if<ZipRejection>(&c.outcome)) {
        Json e = to_json(*bad);
        e["x"] = c.x;
        e["glued_vertex"] = c.partner;
        rej.push_back(e);
      }
    }
    out["rejected_candidates"] = rej;
  }
  return out;
}

Json to_json(const Isometry2& g) {
  return Json{{"reflect", g.reflect}, {"angle", g.angle}, {"tx", g.t.x}, {"ty", g.t.y}};
}

Json to_json(const FoldSpec& f) {
  Json net = to_json(f.path);
  if (f.mirrored) net["mirrored"] = true;
  Json facets = Json::array();
  for (const auto& p : f.facets) facets.push_back(polygon(p));
  Json isos = Json::array();
  for (const auto& g : f.isometries) isos.push_back(to_json(g));
  Json gluing;
  if (f.gluing.kind == FoldGluing::Kind::Zip) {
    gluing = Json{{"type", "zip"}, {"anchor", f.gluing.anchor}};
  } else {
    gluing = Json{{"type", "non-zip"}, {"junction_degrees", f.gluing.junction_degrees}};
  }
  Json out{{"name", f.name}};
  if (!f.description.empty()) out["description"] = f.description;
  out["net"] = net;
  out["gluing"] = gluing;
  out["target"] = polygon(f.target);
  out["facets"] = facets;
  out["isometries"] = isos;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                          {"detail", c.detail}});
  }
  Json angles = Json::array();
  for (double a : r.shape.angles) angles.push_back(a * kRad);
  Json junctions = Json::array();
  for (const auto& j : r.tree.junctions) {
    junctions.push_back(Json{{"degree", j.degree()}, {"image", point(j.image)}, {"arcs", j.arcs}});
  }
  return Json{{"name", r.name},
              {"passed", r.passed()},
              {"target",
               Json{{"kind", r.shape.kind},
                    {"dimensions", r.shape.dimensions},
                    {"sides", r.shape.sides},
                    {"angles_deg", angles}}},
              {"areas", Json{{"net", r.net_area}, {"facets", r.facet_area}, {"target", r.target_area}}},
              {"coverage", Json{{"samples", r.coverage_samples}, {"failures", r.coverage_failures}}},
              {"gluing_tree", Json{{"max_degree", r.tree.max_degree}, {"junctions", junctions}}},
              {"checks", checks}};
}

CutPath cut_path_from_json(const Json& j) {
  CutPath c;
  c.solid = parse_solid(field(j, "solid").get<std::string>());
  for (const auto& v : field(j, "path")) c.vertices.push_back(v.get<int>());
  validate_cut_path(build_solid(c.solid), c);
  return c;
}

FoldSpec foldspec_from_json(const Json& j) {
  try {
    FoldSpec f;
    f.name = j.value("name", std::string("unnamed"));
    f.description = j.value("description", std::string());
    const Json& net = field(j, "net");
    f.path = cut_path_from_json(net);
    f.solid = f.path.solid;
    f.mirrored = net.value("mirrored", false);
    for (const auto& p : field(j, "facets")) f.facets.push_back(polygon_from(p, "facet"));
    for (const auto& g : field(j, "isometries")) {
      Isometry2 m;
      m.reflect = field(g, "reflect").get<bool>();
      m.angle = field(g, "angle").get<double>();
      m.t = {field(g, "tx").get<double>(), field(g, "ty").get<double>()};
      f.isometries.push_back(m);
    }
    f.target = polygon_from(field(j, "target"), "target");
    const Json& gl = field(j, "gluing");
    const std::string type = field(gl, "type").get<std::string>();
    if (type == "zip") {
      f.gluing.kind = FoldGluing::Kind::Zip;
      f.gluing.anchor = field(gl, "anchor").get<double>();
    } else if (type == "non-zip") {
      f.gluing.kind = FoldGluing::Kind::NonZip;
      f.gluing.junction_degrees = gl.value("junction_degrees", std::vector<int>{});
    } else {
      throw std::invalid_argument("unknown gluing type '" + type + "'");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FoldSpecError(std::string("malformed FoldSpec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FoldSpecError(std::string("malformed FoldSpec: ") + e.what());
  }
}

FoldSpec load_foldspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FoldSpecError(path + ": " + e.what());
  }
  return foldspec_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace zipunfold
