#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zipunfold/json_io.hpp"
#include "zipunfold/report.hpp"
#include "zipunfold/svg.hpp"

#ifndef ZIPUNFOLD_DATA_DIR
#define ZIPUNFOLD_DATA_DIR "data"
#endif

using namespace zipunfold;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kData = 3 };

struct Globals {
  std::string out;
  std::string format = "json";
  double tolerance = 1e-6;
  int jobs = 0;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw DataError("cannot write " + g.out);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

// A net from --solid/--path, or from a JSON file holding either a net
// reference {solid, path} or a full net (its provenance is re-unfolded).
struct NetSource {
  std::string solid;
  std::vector<int> path;
  std::string file;
  bool mirrored = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--solid", solid, "solid name");
    cmd->add_option("--path", path, "Hamiltonian path, e.g. 0,1,3,2")->delimiter(',');
    cmd->add_option("--net", file, "JSON net or net reference");
    cmd->add_flag("--mirrored", mirrored, "use the mirror image of the net");
  }

  Net load() const {
    CutPath c;
    bool mirror = mirrored;
    try {
      if (!file.empty()) {
        Json j = read_json(file);
        if (j.contains("provenance")) j = j["provenance"];
        if (j.contains("net")) j = j["net"];
        mirror = mirror || j.value("mirrored", false);
        c = cut_path_from_json(j);
      } else {
        if (solid.empty() || path.empty()) throw CLI::ValidationError("need --net or --solid with --path");
        c.solid = parse_solid(solid);
        c.vertices.assign(path.begin(), path.end());
        validate_cut_path(build_solid(c.solid), c);
      }
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(e.what());
    }
    const Net n = unfold(build_solid(c.solid), c);
    return mirror ? zipunfold::mirrored(n) : n;
  }
};

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
  return out + "\n";
}

std::string path_cell(const CutPath& c) {
  std::string s;
  for (VertexId v : c.vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

int cmd_solids(const Globals& g) {
  if (g.format == "csv") {
    std::string out = csv_line({"solid", "V", "E", "F", "face_angle_deg"});
    for (Solid s : kAllSolids) {
      const auto p = build_solid(s);
      out += csv_line({std::string(p.name()), std::to_string(p.vertex_count()), std::to_string(p.edge_count()),
                       std::to_string(p.face_count()), std::to_string(p.face_angle() * 180 / kPi)});
    }
    emit(g, out);
    return kOk;
  }
  Json all = Json::array();
  for (Solid s : kAllSolids) all.push_back(to_json(build_solid(s)));
  emit(g, dump(all));
  return kOk;
}

std::vector<CutPath> select_paths(const Polyhedron& p, int from, int to) {
  if (from < 0 && to < 0) return enumerate_paths(p);
  if (from < 0 || to < 0 || from >= p.vertex_count() || to >= p.vertex_count() || from == to) {
    throw CLI::ValidationError("--from and --to must name two distinct vertices");
  }
  return enumerate_paths_between(p, from, to);
}

int cmd_paths(const Globals& g, const std::string& solid, int from, int to) {
  const auto p = build_solid(solid);
  const auto paths = select_paths(p, from, to);
  if (g.format == "csv") {
    std::string out = csv_line({"path", "endpoint_distance"});
    for (const auto& c : paths) out += csv_line({path_cell(c), std::to_string(graph_distance(p, c.front(), c.back()))});
    emit(g, out);
    return kOk;
  }
  Json list = Json::array();
  for (const auto& c : paths) {
    Json j = to_json(c);
    j["endpoint_distance"] = graph_distance(p, c.front(), c.back());
    list.push_back(j);
  }
  emit(g, dump(Json{{"solid", std::string(p.name())}, {"count", paths.size()}, {"paths", list}}));
  return kOk;
}

int cmd_zip(const Globals& g, const Net& n, bool rejected, bool flat) {
  require_simple(n);
  const auto rep = enumerate_zippings(n);
  Json j = to_json(rep, rejected);
  j["net"] = to_json(n.path);
  if (rejected) {
    // Spell out why each candidate failed in terms of the angles involved.
    for (auto& r : j["rejected_candidates"]) {
      std::string why;
      double excess = r["angle_deg"].get<double>();
      for (int v : r["vertices"]) {
        const double a = n.boundary[v].angle * 180 / kPi;
        why += (why.empty() ? "" : " + ") + std::to_string(static_cast<int>(std::lround(a))) + "deg";
      }
      r["reason"] = why + " = " + std::to_string(static_cast<int>(std::lround(excess))) + "deg > 360deg";
    }
    if (rep.reflex_vertex >= 0) {
      const double beta = n.boundary[rep.reflex_vertex].angle * 180 / kPi;
      double min_convex = 360;
      for (const auto& b : n.boundary) {
        if (b.strictly_convex()) min_convex = std::min(min_convex, b.angle * 180 / kPi);
      }
      auto tidy = [](double deg) { return std::round(deg * 1e9) / 1e9; };
      j["reflex_angle_deg"] = tidy(beta);
      j["external_angle_deg"] = tidy(360 - beta);
      j["min_convex_angle_deg"] = tidy(min_convex);
    }
  }
  if (flat) {
    Json flats = Json::array();
    for (const auto& f : flat_foldings(n, rep)) {
      flats.push_back(Json{{"anchor", f.anchor}, {"kind", f.shape.kind}, {"dimensions", f.shape.dimensions}});
    }
    j["flat"] = flats;
  }
  emit(g, dump(j));
  return kOk;
}

int cmd_dedupe(const Globals& g, const std::string& solid, int from, int to, bool zippable_only) {
  const auto p = build_solid(solid);
  std::vector<CutPath> kept;
  std::vector<Net> nets;
  for (const auto& c : select_paths(p, from, to)) {
    Net n = unfold(p, c);
    if (!n.simple) continue;
    if (zippable_only && is_zip_rigid(n)) continue;
    kept.push_back(c);
    nets.push_back(std::move(n));
  }
  const auto classes = dedupe(nets);
  if (g.format == "csv") {
    std::string out = csv_line({"class", "size", "representative", "signature"});
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out += csv_line({std::to_string(i), std::to_string(classes[i].size()),
                       path_cell(kept[classes[i].representative()]), classes[i].signature.str()});
    }
    emit(g, out);
    return kOk;
  }
  Json list = Json::array();
  for (const auto& c : classes) {
    Json members = Json::array();
    for (int m : c.members) members.push_back(kept[m].vertices);
    list.push_back(Json{{"size", c.size()}, {"signature", c.signature.str()}, {"members", members}});
  }
  emit(g, dump(Json{{"solid", std::string(p.name())}, {"nets", nets.size()}, {"classes", classes.size()},
                    {"congruence_classes", list}}));
  return kOk;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& files) {
  Json out = Json::array();
  std::string csv = csv_line({"file", "check", "status", "detail"});
  bool all = true;
  for (const auto& file : files) {
    VerificationReport r;
    try {
      r = verify_fold(load_foldspec(file));
    } catch (const FoldSpecError& e) {
      throw DataError(e.what());
    } catch (const std::invalid_argument& e) {
      throw DataError(file + ": " + e.what());
    }
    all &= r.passed();
    Json j = to_json(r);
    j["file"] = file;
    out.push_back(j);
    for (const auto& c : r.checks) {
      csv += csv_line({file, c.name, c.skipped ? "skipped" : c.passed ? "pass" : "fail", "\"" + c.detail + "\""});
    }
    std::fprintf(stderr, "%s: %s (%s", file.c_str(), r.passed() ? "pass" : "FAIL", r.shape.kind.c_str());
    for (double d : r.shape.dimensions) std::fprintf(stderr, " %.6f", d);
    std::fprintf(stderr, ")\n");
  }
  emit(g, g.format == "csv" ? csv : dump(files.size() == 1 ? out[0] : out));
  return all ? kOk : kMismatch;
}

int cmd_report(const Globals& g, const std::string& scope, const std::string& dir) {
  ReportOptions opt;
  opt.jobs = g.jobs;
  opt.tolerance = g.tolerance;
  opt.foldspec_dir = dir;
  const auto r = build_report(scope, opt);
  emit(g, g.format == "csv" ? to_csv(r) : dump(to_json(r)));
  return r.passed() ? kOk : kMismatch;
}

int cmd_svg(const Globals& g, const NetSource& src, const std::string& fold) {
  if (!fold.empty()) {
    try {
      emit(g, fold_svg(load_foldspec(fold)));
    } catch (const FoldSpecError& e) {
      throw DataError(e.what());
    }
    return kOk;
  }
  emit(g, net_svg(src.load()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian unfoldings of the Platonic solids: zipping, dedup and flat-fold verification"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance-override", g.tolerance, "dimension tolerance (testing only)");
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.fallthrough();

  std::string solid;
  int from = -1, to = -1;
  bool rejected = false, flat = false, zippable = false;
  std::vector<std::string> files;
  std::string scope = "all", dir = ZIPUNFOLD_DATA_DIR "/foldspecs", fold;
  NetSource net;

  app.add_subcommand("solids", "list the five solids");

  auto* paths = app.add_subcommand("paths", "enumerate labeled Hamiltonian paths");
  paths->add_option("solid", solid, "solid name")->required();
  paths->add_option("--from", from, "first endpoint");
  paths->add_option("--to", to, "second endpoint");

  auto* unfold_cmd = app.add_subcommand("unfold", "unfold a solid along a Hamiltonian path");
  net.add(unfold_cmd);

  auto* zip = app.add_subcommand("zip", "enumerate zippings of a net");
  net.add(zip);
  zip->add_flag("--dump-rejected", rejected, "include rejected candidates with their angle sums");
  zip->add_flag("--flat", flat, "also decide which zippings fold flat");

  auto* dd = app.add_subcommand("dedupe", "group Hamiltonian unfoldings by congruence");
  dd->add_option("solid", solid, "solid name")->required();
  dd->add_option("--from", from, "first endpoint");
  dd->add_option("--to", to, "second endpoint");
  dd->add_flag("--zippable", zippable, "keep only nets with a non-identity zipping");

  auto* verify = app.add_subcommand("verify", "verify FoldSpec files");
  verify->add_option("files", files, "FoldSpec JSON files")->required()->check(CLI::ExistingFile);

  auto* report = app.add_subcommand("report", "reproduce the published counts and shapes");
  report->add_option("scope", scope, "solid name, foldspecs, or all");
  report->add_option("--foldspecs", dir, "directory of shipped FoldSpecs");

  auto* svg = app.add_subcommand("svg", "draw a net, or a fold over its target");
  net.add(svg);
  svg->add_option("--fold", fold, "FoldSpec file to draw instead of a net");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("solids")) return cmd_solids(g);
    if (*paths) return cmd_paths(g, solid, from, to);
    if (*unfold_cmd) {
      emit(g, dump(to_json(net.load())));
      return kOk;
    }
    if (*zip) return cmd_zip(g, net.load(), rejected, flat);
    if (*dd) return cmd_dedupe(g, solid, from, to, zippable);
    if (*verify) return cmd_verify(g, files);
    if (*report) return cmd_report(g, scope, dir);
    if (*svg) return cmd_svg(g, net, fold);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const NonSimpleNetError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
