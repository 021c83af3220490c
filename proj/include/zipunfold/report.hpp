#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zipunfold/congruence.hpp"
#include "zipunfold/foldverify.hpp"
#include "zipunfold/json_io.hpp"

namespace zipunfold {

/// Runs fn(0..n-1) on `jobs` threads (0 = hardware concurrency). Each index
/// is processed exactly once; callers write into pre-sized slots, so output
/// order never depends on scheduling.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

/// A flat zipping of a net with the shape it folds to.
struct FlatFolding {
  double anchor = 0.0;
  TargetShape shape;
};

/// Non-identity zippings of a net that fold to a doubly covered polygon.
std::vector<FlatFolding> flat_foldings(const Net& n, const ZipReport& r);

/// True when the shape has the given kind and dimensions (ascending) within tol.
bool shape_matches(const TargetShape& s, const std::string& kind, std::vector<double> dims,
                   double tol = 1e-6);

/// Congruence classes of all Hamiltonian unfoldings of a solid, with one
/// representative net (and its path) per class.
struct UnfoldingClasses {
  std::vector<CutPath> paths;
  std::vector<Net> nets;  ///< one per path
  std::vector<CongruenceClass> classes;
};
UnfoldingClasses distinct_unfoldings(const Polyhedron& p);

/// The three named Hamiltonian unfoldings of the cube.
struct CubeNets {
  CutPath s, t, z;
};
CubeNets cube_nets();

/// Zippable icosahedron unfoldings between vertex 0 and the first vertex at
/// distance 1, 2 and 3.
struct IcosahedronStudy {
  struct Pair {
    int distance = 0;
    VertexId u = 0, v = 0;
    int paths = 0;
    int zippable = 0;
  };
  std::vector<Pair> pairs;
  std::vector<long long> cycles_per_edge;  ///< Hamiltonian cycles through each edge
  std::vector<Net> zippable;              ///< in pair order, then path order
  std::vector<int> zippable_distance;
  std::vector<std::vector<FlatFolding>> flats;  ///< per zippable net
  std::vector<CongruenceClass> classes;         ///< of the zippable nets
  /// Classes with a member that folds flat to a √3 x 5 parallelogram.
  std::vector<int> root3_by_5_classes;
};
IcosahedronStudy study_icosahedron(int jobs = 0);

/// One row of the reproduction report.
struct ReportRow {
  std::string solid;
  std::string metric;
  std::string expected;  ///< empty for informational rows
  std::string computed;
  bool pass = true;
  /// Mismatch is reported but does not affect the exit status.
  bool soft = false;
};

struct ReproductionReport {
  std::vector<ReportRow> rows;
  /// No hard row failed.
  bool passed() const;
};

struct ReportOptions {
  int jobs = 0;
  /// Directory of shipped FoldSpec files (the "foldspecs" scope).
  std::string foldspec_dir;
  /// Dimension matching tolerance.
  double tolerance = 1e-6;
};

/// A FoldSpec file shipped with the repository and the shape it must fold to.
struct ShippedFold {
  std::string file;
  std::string kind;
  std::vector<double> dimensions;
  bool non_zip = false;
};
const std::vector<ShippedFold>& shipped_folds();

/// scope: a solid name, "foldspecs", or "all".
ReproductionReport build_report(const std::string& scope, const ReportOptions& opt = {});

Json to_json(const ReproductionReport& r);
std::string to_csv(const ReproductionReport& r);

}  // namespace zipunfold
