// Regenerates data/foldspecs/*.json. Zip folds come from rim certificates,
// the non-zip octahedron fold from the rectangle reflection search.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "zipunfold/json_io.hpp"
#include "zipunfold/rectfold.hpp"

using namespace zipunfold;

namespace {

struct ZipFold {
  const char* file;
  const char* name;
  Solid solid;
  std::vector<VertexId> path;
  double x_units;  // anchor, in edge lengths from the first path vertex
  const char* description;
};

bool write(const std::string& dir, const std::string& file, const FoldSpec& f) {
  const auto rep = verify_fold(f);
  if (!rep.passed()) {
    std::fprintf(stderr, "%s: generated spec does not verify\n", file.c_str());
    return false;
  }
  std::ofstream(dir + "/" + file) << dump(to_json(f));
  std::printf("%-36s %zu facets, %s\n", file.c_str(), f.facets.size(), rep.shape.kind.c_str());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data/foldspecs";
  const ZipFold zips[] = {
      {"tetrahedron-rhombus.json", "tetrahedron rhombus", Solid::Tetrahedron, {0, 1, 2, 3}, 1.0,
       "Zipping the 2x1 parallelogram net from a corner gives a doubly covered rhombus of side 1."},
      {"cube-s-parallelogram.json", "cube S-net parallelogram", Solid::Cube, {0, 1, 3, 2, 6, 4, 5, 7}, 2.0,
       "The staircase net zips to a doubly covered parallelogram with sides 1 and 3*sqrt(2)."},
      {"cube-z-parallelogram.json", "cube Z-net parallelogram", Solid::Cube, {0, 1, 3, 7, 5, 4, 6, 2}, 4.0,
       "The Z net zips to a doubly covered parallelogram with sides 1 and 3*sqrt(2)."},
      {"octahedron-thin-rectangle.json", "octahedron 1/2 x 2sqrt3 rectangle", Solid::Octahedron,
       {0, 1, 2, 4, 3, 5}, 3.5, "Anchored mid-edge; folds to a doubly covered 1/2 x 2*sqrt(3) rectangle."},
      {"octahedron-rectangle.json", "octahedron 1 x sqrt3 rectangle", Solid::Octahedron, {0, 1, 2, 4, 3, 5}, 1.0,
       "Same net, anchored at a vertex; every corner of the flat polygon is a right angle."},
      {"octahedron-parallelogram.json", "octahedron 1 x 2sqrt3 parallelogram", Solid::Octahedron,
       {0, 1, 5, 2, 4, 3}, 3.0, "Folds to a doubly covered parallelogram with sides 1 and 2*sqrt(3)."},
      {"icosahedron-parallelogram.json", "icosahedron sqrt3 x 5 parallelogram", Solid::Icosahedron,
       {6, 2, 1, 7, 9, 5, 3, 0, 4, 10, 11, 8}, 6.0,
       "Folds to a doubly covered parallelogram with sides sqrt(3) and 5 (angles 30 and 150 degrees)."},
  };
  bool ok = true;
  for (const auto& z : zips) {
    const auto p = build_solid(z.solid);
    const Net n = unfold(p, CutPath{z.solid, z.path});
    const auto outcome = zip_at(n, z.x_units / n.size());
    const auto* zipping = std::get_if<Zipping>(&outcome);
    const auto cert = zipping ? flat_certificate(n, *zipping) : std::nullopt;
    if (!cert) {
      std::fprintf(stderr, "%s: zipping is not flat\n", z.file);
      ok = false;
      continue;
    }
    FoldSpec f = foldspec_from_certificate(n, *zipping, *cert);
    f.name = z.name;
    f.description = z.description;
    ok &= write(dir, z.file, f);
  }

  const auto p = build_solid(Solid::Octahedron);
  const Net n = unfold(p, CutPath{Solid::Octahedron, {0, 1, 5, 2, 4, 3}});
  if (auto f = fold_onto_rectangle(n, std::sqrt(3.0) / 2, 2.0)) {
    f->name = "octahedron non-zip rectangle";
    f->description =
        "Same net as the 1 x 2*sqrt(3) parallelogram, folded onto a sqrt(3)/2 x 2 rectangle; "
        "four boundary points meet at one corner, so the gluing is not a zipping.";
    ok &= write(dir, "octahedron-nonzip-rectangle.json", *f);
  } else {
    std::fprintf(stderr, "octahedron-nonzip-rectangle.json: no fold found\n");
    ok = false;
  }
  return ok ? 0 : 1;
}
