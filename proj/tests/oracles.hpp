#pragma once

// Deliberately naive re-derivations used to cross-check the library. None of
// these share code with the routines they check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "zipunfold/solids.hpp"

namespace oracle {

using zipunfold::Polyhedron;
using zipunfold::Vec2;

inline std::vector<std::vector<char>> adjacency(const Polyhedron& p) {
  const int n = p.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : p.edges()) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  return adj;
}

/// Undirected Hamiltonian paths by trying every vertex permutation.
/// Only for V <= 8.
inline long long paths_by_permutation(const Polyhedron& p, int u = -1, int v = -1) {
  const auto adj = adjacency(p);
  std::vector<int> perm(p.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  long long directed = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = adj[perm[i]][perm[i + 1]];
    if (!ok) continue;
    if (u >= 0 && !(perm.front() == u && perm.back() == v) && !(perm.front() == v && perm.back() == u)) continue;
    ++directed;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return directed / 2;
}

/// Directed Hamiltonian paths from u ending at each vertex, by subset DP.
/// Returns counts indexed by end vertex. Fine up to 12 vertices.
inline std::vector<long long> paths_by_subset_dp(const Polyhedron& p, int u) {
  const int n = p.vertex_count();
  const auto adj = adjacency(p);
  std::vector<std::vector<long long>> dp(1u << n, std::vector<long long>(n, 0));
  dp[1u << u][u] = 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int a = 0; a < n; ++a) {
      if (!dp[mask][a]) continue;
      for (int b = 0; b < n; ++b) {
        if (adj[a][b] && !(mask & (1u << b))) dp[mask | (1u << b)][b] += dp[mask][a];
      }
    }
  }
  return dp[(1u << n) - 1];
}

/// Hamiltonian cycles through edge {u, v}: Hamiltonian paths from u to v
/// that do not use that edge directly.
inline long long cycles_through_edge(const Polyhedron& p, int u, int v) {
  return paths_by_subset_dp(p, u)[v];
}

/// Graph automorphisms by trying every permutation (V <= 8).
inline int automorphisms(const Polyhedron& p) {
  const auto adj = adjacency(p);
  const int n = p.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (const auto& e : p.edges()) ok = ok && adj[perm[e.a]][perm[e.b]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Polygons congruent by some rigid motion or reflection: try every vertex
/// correspondence (cyclic shift, both orientations), align one edge and
/// compare all points.
inline bool congruent(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol = 1e-6) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  auto frame = [](Vec2 o, Vec2 x) {
    const double len = std::hypot(x.x - o.x, x.y - o.y);
    return std::pair<Vec2, Vec2>{{(x.x - o.x) / len, (x.y - o.y) / len}, o};
  };
  auto local = [](Vec2 q, std::pair<Vec2, Vec2> f, bool flip) {
    const Vec2 d{q.x - f.second.x, q.y - f.second.y};
    const double s = d.x * f.first.x + d.y * f.first.y;
    const double t = -d.x * f.first.y + d.y * f.first.x;
    return Vec2{s, flip ? -t : t};
  };
  const auto fa = frame(a[0], a[1]);
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < n; ++s) {
      auto at = [&](std::size_t i) { return b[(s + dir * static_cast<long>(i) + 2 * n) % n]; };
      const auto fb = frame(at(0), at(1));
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Vec2 p = local(a[i], fa, false), q = local(at(i), fb, dir < 0);
        ok = std::hypot(p.x - q.x, p.y - q.y) < tol;
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace oracle
