#include "zipunfold/hampath.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace zipunfold {

CutPath CutPath::reversed() const {
  CutPath r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

namespace {

std::string describe(const CutPath& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.vertices[i]);
  }
  return s + "]";
}

// Depth-first extension over a bitmask of visited vertices. `target` < 0 means
// any endpoint is accepted as long as it is larger than the start label.
class PathSearch {
 public:
  PathSearch(const Polyhedron& p, VertexId target) : poly_(p), target_(target) {
    full_ = (std::uint32_t{1} << p.vertex_count()) - 1;
  }

  void run_from(VertexId start, std::vector<CutPath>& out) {
    stack_.assign(1, start);
    extend(std::uint32_t{1} << start, out);
  }

 private:
  void extend(std::uint32_t visited, std::vector<CutPath>& out) {
    const VertexId last = stack_.back();
    if (visited == full_) {
      const bool ok = target_ >= 0 ? last == target_ : last > stack_.front();
      if (ok) out.push_back(CutPath{poly_.kind(), stack_});
      return;
    }
    for (VertexId next : poly_.neighbors(last)) {
      const std::uint32_t bit = std::uint32_t{1} << next;
      if (visited & bit) continue;
      // The fixed endpoint may only close the path.
      if (next == target_ && (visited | bit) != full_) continue;
      stack_.push_back(next);
      extend(visited | bit, out);
      stack_.pop_back();
    }
  }

  const Polyhedron& poly_;
  VertexId target_;
  std::uint32_t full_ = 0;
  std::vector<VertexId> stack_;
};

void check_index(const Polyhedron& p, VertexId v) {
  if (v < 0 || v >= p.vertex_count()) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for " +
                            std::string(p.name()));
  }
}

}  // namespace

bool is_valid_cut_path(const Polyhedron& p, const CutPath& c) {
  try {
    validate_cut_path(p, c);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void validate_cut_path(const Polyhedron& p, const CutPath& c) {
  if (c.solid != p.kind()) {
    throw std::invalid_argument("cut path belongs to " + std::string(solid_name(c.solid)) +
                                ", not " + std::string(p.name()));
  }
  if (static_cast<int>(c.vertices.size()) != p.vertex_count()) {
    throw std::invalid_argument("cut path " + describe(c) + " does not visit every vertex");
  }
  std::vector<bool> seen(p.vertex_count(), false);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const VertexId v = c.vertices[i];
    if (v < 0 || v >= p.vertex_count() || seen[v]) {
      throw std::invalid_argument("cut path " + describe(c) + " repeats or leaves the solid");
    }
    seen[v] = true;
    if (i > 0 && !p.adjacent(c.vertices[i - 1], v)) {
      throw std::invalid_argument("cut path " + describe(c) + " uses a non-edge");
    }
  }
}

std::vector<CutPath> enumerate_paths(const Polyhedron& p) {
  std::vector<CutPath> out;
  PathSearch search(p, -1);
  for (VertexId s = 0; s < p.vertex_count(); ++s) search.run_from(s, out);
  return out;
}

std::vector<CutPath> enumerate_paths_between(const Polyhedron& p, VertexId u, VertexId v) {
  check_index(p, u);
  check_index(p, v);
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  std::vector<CutPath> out;
  PathSearch search(p, std::max(u, v));
  search.run_from(std::min(u, v), out);
  return out;
}

long long count_cycles_through_edge(const Polyhedron& p, VertexId u, VertexId v) {
  check_index(p, u);
  check_index(p, v);
  if (!p.adjacent(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge of " + std::string(p.name()));
  }
  // Each cycle through uv is a Hamiltonian u-v path closed by the edge uv.
  return static_cast<long long>(enumerate_paths_between(p, u, v).size());
}

}  // namespace zipunfold
