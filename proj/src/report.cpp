#include "zipunfold/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <thread>

namespace zipunfold {

namespace {

std::string num(double v, int digits = 6) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string path_str(const CutPath& c) {
  std::vector<int> v(c.vertices.begin(), c.vertices.end());
  return join(v);
}

std::string shape_str(const TargetShape& s) {
  std::string out = s.kind;
  for (std::size_t i = 0; i < s.dimensions.size(); ++i) out += (i ? " x " : " ") + num(s.dimensions[i]);
  if (s.kind == "parallelogram" || s.kind == "rhombus") {
    const double a = *std::min_element(s.angles.begin(), s.angles.end());
    out += " @" + num(a * 180.0 / kPi, 1) + "deg";
  }
  return out;
}

// Polygon with straight (180°) corners removed.
Polygon2 corners_only(const Polygon2& poly) {
  Polygon2 out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (std::abs(interior_angle(poly, i) - kPi) > 1e-9) out.push_back(poly[i]);
  }
  return out;
}

ReportRow row(std::string solid, std::string metric, std::string expected, std::string computed,
              bool soft = false) {
  const bool pass = expected.empty() || expected == computed;
  return {std::move(solid), std::move(metric), std::move(expected), std::move(computed), pass, soft};
}

const double kRoot3 = std::sqrt(3.0);

void tetrahedron_rows(ReproductionReport& r) {
  const auto p = build_solid(Solid::Tetrahedron);
  const auto u = distinct_unfoldings(p);
  r.rows.push_back(row("tetrahedron", "labeled Hamiltonian paths", "", std::to_string(u.paths.size())));
  r.rows.push_back(row("tetrahedron", "distinct Hamiltonian unfoldings", "1", std::to_string(u.classes.size())));
  const Net& n = u.nets[u.classes.front().representative()];
  const auto shape = describe_target(corners_only(n.outline()));
  r.rows.push_back(row("tetrahedron", "net shape", "convex parallelogram 2x1",
                       std::string(n.convex() ? "convex " : "nonconvex ") + shape.kind +
                           (shape_matches(shape, "parallelogram", {1, 2}) ? " 2x1" : " " + shape_str(shape))));
  const auto z = enumerate_zippings(n);
  r.rows.push_back(row("tetrahedron", "zipper case", "convex continuum",
                       z.convex_continuum ? "convex continuum" : "discrete"));
}

void cube_rows(ReproductionReport& r) {
  const auto p = build_solid(Solid::Cube);
  const auto u = distinct_unfoldings(p);
  r.rows.push_back(row("cube", "labeled Hamiltonian paths", "", std::to_string(u.paths.size())));
  r.rows.push_back(row("cube", "distinct Hamiltonian unfoldings", "3", std::to_string(u.classes.size())));
  const auto named = cube_nets();
  const std::pair<const char*, const CutPath*> nets[] = {{"S", &named.s}, {"T", &named.t}, {"Z", &named.z}};
  for (auto [label, path] : nets) {
    const Net n = unfold(p, *path);
    r.rows.push_back(row("cube", std::string(label) + "-net zip-rigid", *label == 'T' ? "yes" : "no",
                         is_zip_rigid(n) ? "yes" : "no"));
  }
  {
    const Net n = unfold(p, named.z);
    const auto rep = enumerate_zippings(n);
    const auto zs = rep.non_identity();
    std::vector<int> counts;
    for (const auto* z : zs) counts.push_back(z->vertex_count());
    std::sort(counts.begin(), counts.end());
    r.rows.push_back(row("cube", "Z-net valid zippings", "6", std::to_string(zs.size())));
    r.rows.push_back(row("cube", "Z-net cluster counts", "4 4 4 4 5 6", join(counts)));
    const auto flats = flat_foldings(n, rep);
    std::string shapes;
    for (const auto& f : flats) shapes += (shapes.empty() ? "" : "; ") + shape_str(f.shape);
    r.rows.push_back(row("cube", "Z-net flat zippings", "2", std::to_string(flats.size())));
    r.rows.push_back(row("cube", "Z-net flat shapes", "", shapes.empty() ? "none" : shapes));
  }
  {
    const Net n = unfold(p, named.s);
    const auto flats = flat_foldings(n, enumerate_zippings(n));
    const bool hit = std::any_of(flats.begin(), flats.end(), [](const FlatFolding& f) {
      return shape_matches(f.shape, "parallelogram", {1, 3 * std::sqrt(2.0)});
    });
    r.rows.push_back(row("cube", "S-net folds flat to 1 x 3sqrt2 parallelogram", "yes", hit ? "yes" : "no"));
  }
}

void octahedron_rows(ReproductionReport& r) {
  const auto p = build_solid(Solid::Octahedron);
  const auto u = distinct_unfoldings(p);
  r.rows.push_back(row("octahedron", "labeled Hamiltonian paths", "", std::to_string(u.paths.size())));
  r.rows.push_back(row("octahedron", "distinct Hamiltonian unfoldings", "3", std::to_string(u.classes.size())));
  int special = 0;
  for (const auto& c : u.classes) {
    const Net& n = u.nets[c.representative()];
    const auto rep = enumerate_zippings(n);
    const auto flats = flat_foldings(n, rep);
    bool pi4 = false;
    for (const auto* z : rep.non_identity()) {
      const auto prof = z->curvature_profile();
      pi4 |= prof.size() == 4 &&
             std::all_of(prof.begin(), prof.end(), [](double k) { return std::abs(k - kPi) < 1e-6; });
    }
    if (flats.empty() && pi4) ++special;
    std::string shapes;
    for (const auto& f : flats) shapes += (shapes.empty() ? "" : "; ") + shape_str(f.shape);
    r.rows.push_back(row("octahedron",
                         "unfolding " + path_str(u.paths[c.representative()]) + " (d=" +
                             std::to_string(graph_distance(p, n.path.front(), n.path.back())) + ")",
                         "",
                         std::to_string(rep.non_identity().size()) + " zippings; flat: " +
                             (shapes.empty() ? "none" : shapes) + (pi4 ? "; has curvature-pi tetrahedron" : "")));
  }
  r.rows.push_back(row("octahedron", "unfoldings with no flat zipping but a curvature-pi tetrahedron", "1",
                       std::to_string(special)));
}

void dodecahedron_rows(ReproductionReport& r, int jobs) {
  const auto p = build_solid(Solid::Dodecahedron);
  const auto paths = enumerate_paths(p);
  const int n = static_cast<int>(paths.size());
  std::vector<char> rigid(n);
  std::vector<int> rejected(n), well_formed(n);
  std::vector<double> min_convex(n, 4 * kPi);
  parallel_for(n, jobs, [&](int i) {
    const Net net = unfold(p, paths[i]);
    const auto rep = enumerate_zippings(net);
    rigid[i] = is_zip_rigid(rep);
    for (const auto& c : rep.candidates) {
      const auto* bad = std::get_if<ZipRejection>(&c.outcome);
      if (!bad) continue;
      ++rejected[i];
      bool endpoint = false;
      double other = 4 * kPi;
      for (int v : bad->vertices) {
        const double a = net.boundary[v].angle;
        if (std::abs(a - 1.8 * kPi) < 1e-9) endpoint = true;
        else other = std::min(other, a);
      }
      min_convex[i] = std::min(min_convex[i], other);
      if (endpoint && other >= 0.6 * kPi - 1e-9) ++well_formed[i];
    }
  });
  const long long all_rejected = std::accumulate(rejected.begin(), rejected.end(), 0LL);
  const long long ok = std::accumulate(well_formed.begin(), well_formed.end(), 0LL);
  const int rigid_count = static_cast<int>(std::count(rigid.begin(), rigid.end(), 1));
  r.rows.push_back(row("dodecahedron", "labeled Hamiltonian paths", "", std::to_string(n)));
  r.rows.push_back(row("dodecahedron", "zip-rigid", "ALL", rigid_count == n ? "ALL" : std::to_string(rigid_count) + "/" + std::to_string(n)));
  r.rows.push_back(row("dodecahedron", "rejected candidates showing 324deg endpoint + >=108deg corner", "ALL",
                       ok == all_rejected && all_rejected > 0 ? "ALL" : std::to_string(ok) + "/" + std::to_string(all_rejected)));
  const double m = *std::min_element(min_convex.begin(), min_convex.end());
  r.rows.push_back(row("dodecahedron", "minimum convex angle in rejections (deg)", "108", num(m * 180 / kPi, 0)));
  r.rows.push_back(row("dodecahedron", "rejected candidates", "", std::to_string(all_rejected)));
}

void icosahedron_rows(ReproductionReport& r, int jobs) {
  const auto s = study_icosahedron(jobs);
  std::vector<int> paths, zippable;
  for (const auto& pr : s.pairs) {
    paths.push_back(pr.paths);
    zippable.push_back(pr.zippable);
  }
  r.rows.push_back(row("icosahedron", "labeled Hamiltonian paths at endpoint distance 1 2 3", "512 608 720", join(paths)));
  const bool uniform = std::all_of(s.cycles_per_edge.begin(), s.cycles_per_edge.end(),
                                   [&](long long c) { return c == s.cycles_per_edge.front(); });
  r.rows.push_back(row("icosahedron", "Hamiltonian cycles through each edge", "512 on all 30 edges",
                       uniform ? std::to_string(s.cycles_per_edge.front()) + " on all " +
                                     std::to_string(s.cycles_per_edge.size()) + " edges"
                               : "non-uniform"));
  r.rows.push_back(row("icosahedron", "zippable nets", "82", std::to_string(s.zippable.size())));
  r.rows.push_back(row("icosahedron", "zippable nets by endpoint distance", "12 20 50", join(zippable)));
  r.rows.push_back(row("icosahedron", "distinct zippable unfoldings", "18", std::to_string(s.classes.size()), true));
  int flat_nets = 0;
  for (const auto& f : s.flats) flat_nets += !f.empty();
  r.rows.push_back(row("icosahedron", "zippable nets with a flat zipping", "", std::to_string(flat_nets)));
  r.rows.push_back(row("icosahedron", "classes with a sqrt3 x 5 parallelogram folding", "1",
                       std::to_string(s.root3_by_5_classes.size())));
}

void foldspec_rows(ReproductionReport& r, const ReportOptions& opt) {
  namespace fs = std::filesystem;
  for (const auto& sf : shipped_folds()) {
    const fs::path file = fs::path(opt.foldspec_dir) / sf.file;
    std::string computed;
    try {
      const FoldSpec f = load_foldspec(file.string());
      const auto rep = verify_fold(f);
      const bool kind_ok = (f.gluing.kind == FoldGluing::Kind::NonZip) == sf.non_zip;
      computed = rep.passed() && kind_ok ? "pass " : "FAIL ";
      computed += shape_matches(rep.shape, sf.kind, sf.dimensions, opt.tolerance)
                      ? sf.kind + " " + num(sf.dimensions[0]) + " x " + num(sf.dimensions.back())
                      : shape_str(rep.shape);
      if (sf.non_zip) computed += kind_ok ? " non-zip" : " zip";
      const double a = *std::min_element(rep.shape.angles.begin(), rep.shape.angles.end());
      r.rows.push_back(row("foldspec", sf.file + " corner angle (deg)", "", num(a * 180 / kPi, 3)));
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    std::string expected = "pass " + sf.kind + " " + num(sf.dimensions[0]) + " x " + num(sf.dimensions.back());
    if (sf.non_zip) expected += " non-zip";
    r.rows.push_back(row("foldspec", sf.file, expected, computed));
  }
}

}  // namespace

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, std::max(n, 1));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<FlatFolding> flat_foldings(const Net& n, const ZipReport& r) {
  std::vector<FlatFolding> out;
  for (const auto* z : r.non_identity()) {
    if (const auto cert = flat_certificate(n, *z)) out.push_back({z->anchor, describe_target(cert->target)});
  }
  return out;
}

bool shape_matches(const TargetShape& s, const std::string& kind, std::vector<double> dims, double tol) {
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end(), [&](double a, double b) { return std::abs(a - b) < tol; }),
             dims.end());
  if (s.kind != kind || s.dimensions.size() != dims.size()) return false;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (std::abs(s.dimensions[i] - dims[i]) > tol) return false;
  }
  return true;
}

UnfoldingClasses distinct_unfoldings(const Polyhedron& p) {
  UnfoldingClasses u;
  u.paths = enumerate_paths(p);
  for (const auto& c : u.paths) u.nets.push_back(unfold(p, c));
  u.classes = dedupe(u.nets);
  return u;
}

CubeNets cube_nets() {
  // Labels follow the solids module's vertex order.
  return {{Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}},
          {Solid::Cube, {0, 1, 3, 2, 6, 7, 5, 4}},
          {Solid::Cube, {0, 1, 3, 7, 5, 4, 6, 2}}};
}

IcosahedronStudy study_icosahedron(int jobs) {
  const auto p = build_solid(Solid::Icosahedron);
  IcosahedronStudy s;
  for (int d = 1; d <= 3; ++d) {
    for (VertexId v = 1; v < p.vertex_count(); ++v) {
      if (graph_distance(p, 0, v) == d) {
        s.pairs.push_back({d, 0, v, 0, 0});
        break;
      }
    }
  }
  for (const auto& e : p.edges()) s.cycles_per_edge.push_back(count_cycles_through_edge(p, e.a, e.b));

  std::vector<CutPath> paths;
  std::vector<int> pair_of;
  for (int i = 0; i < static_cast<int>(s.pairs.size()); ++i) {
    auto between = enumerate_paths_between(p, s.pairs[i].u, s.pairs[i].v);
    s.pairs[i].paths = static_cast<int>(between.size());
    for (auto& c : between) {
      paths.push_back(std::move(c));
      pair_of.push_back(i);
    }
  }
  const int n = static_cast<int>(paths.size());
  std::vector<Net> nets(n);
  std::vector<char> zippable(n);
  std::vector<std::vector<FlatFolding>> flats(n);
  parallel_for(n, jobs, [&](int i) {
    nets[i] = unfold(p, paths[i]);
    if (!nets[i].simple) return;
    const auto rep = enumerate_zippings(nets[i]);
    zippable[i] = !is_zip_rigid(rep);
    if (zippable[i]) flats[i] = flat_foldings(nets[i], rep);
  });
  for (int i = 0; i < n; ++i) {
    if (!zippable[i]) continue;
    ++s.pairs[pair_of[i]].zippable;
    s.zippable.push_back(std::move(nets[i]));
    s.zippable_distance.push_back(s.pairs[pair_of[i]].distance);
    s.flats.push_back(std::move(flats[i]));
  }
  s.classes = dedupe(s.zippable);
  for (int c = 0; c < static_cast<int>(s.classes.size()); ++c) {
    const bool hit = std::any_of(s.classes[c].members.begin(), s.classes[c].members.end(), [&](int m) {
      return std::any_of(s.flats[m].begin(), s.flats[m].end(), [](const FlatFolding& f) {
        return shape_matches(f.shape, "parallelogram", {kRoot3, 5.0});
      });
    });
    if (hit) s.root3_by_5_classes.push_back(c);
  }
  return s;
}

const std::vector<ShippedFold>& shipped_folds() {
  static const std::vector<ShippedFold> folds = {
      {"tetrahedron-rhombus.json", "rhombus", {1.0}, false},
      {"cube-s-parallelogram.json", "parallelogram", {1.0, 3 * std::sqrt(2.0)}, false},
      {"cube-z-parallelogram.json", "parallelogram", {1.0, 3 * std::sqrt(2.0)}, false},
      {"octahedron-thin-rectangle.json", "rectangle", {0.5, 2 * kRoot3}, false},
      {"octahedron-rectangle.json", "rectangle", {1.0, kRoot3}, false},
      {"octahedron-parallelogram.json", "parallelogram", {1.0, 2 * kRoot3}, false},
      {"octahedron-nonzip-rectangle.json", "rectangle", {kRoot3 / 2, 2.0}, true},
      {"icosahedron-parallelogram.json", "parallelogram", {kRoot3, 5.0}, false},
  };
  return folds;
}

bool ReproductionReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass || r.soft; });
}

ReproductionReport build_report(const std::string& scope, const ReportOptions& opt) {
  ReproductionReport r;
  const bool all = scope == "all";
  if (!all && scope != "foldspecs") parse_solid(scope);  // throws on unknown names
  if (all || scope == "tetrahedron") tetrahedron_rows(r);
  if (all || scope == "cube") cube_rows(r);
  if (all || scope == "octahedron") octahedron_rows(r);
  if (all || scope == "dodecahedron") dodecahedron_rows(r, opt.jobs);
  if (all || scope == "icosahedron") icosahedron_rows(r, opt.jobs);
  if (all || scope == "foldspecs") foldspec_rows(r, opt);
  return r;
}

Json to_json(const ReproductionReport& r) {
  Json rows = Json::array();
  for (const auto& x : r.rows) {
    Json j{{"solid", x.solid}, {"metric", x.metric}};
    if (!x.expected.empty()) j["expected"] = x.expected;
    j["computed"] = x.computed;
    j["pass"] = x.pass;
    if (x.soft) j["soft"] = true;
    rows.push_back(j);
  }
  return Json{{"passed", r.passed()}, {"rows", rows}};
}

std::string to_csv(const ReproductionReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::string out = "solid,metric,expected,computed,pass\n";
  for (const auto& x : r.rows) {
    out += quote(x.solid) + "," + quote(x.metric) + "," + quote(x.expected) + "," + quote(x.computed) + "," +
           (x.expected.empty() ? "info" : x.pass ? "pass" : x.soft ? "soft-fail" : "fail") + "\n";
  }
  return out;
}

}  // namespace zipunfold
