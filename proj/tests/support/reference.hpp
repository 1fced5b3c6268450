#pragma once

// Slow reference computations for tests. Everything here works straight from
// the definitions by enumerating vertex or edge subsets, and shares no code
// with the library's algorithms beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "rigpack/graph.hpp"

namespace ref {

using rigpack::Edge;
using rigpack::EdgeId;
using rigpack::EdgeSet;
using rigpack::Graph;
using rigpack::VertexId;

/// Every vertex set X with |X| >= 2 spans at most 2|X| - 3 edges of f.
inline bool laman_sparse(const Graph& g, const std::vector<EdgeId>& f) {
  const int n = g.vertex_count();
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    const int size = __builtin_popcount(x);
    if (size < 2) continue;
    int inside = 0;
    for (EdgeId e : f) {
      const Edge& ed = g.edge(e);
      if ((x >> ed.u & 1U) && (x >> ed.v & 1U)) ++inside;
    }
    if (inside > 2 * size - 3) return false;
  }
  return true;
}

/// Largest Laman-sparse subset of f, by trying subsets from largest down.
inline int laman_rank(const Graph& g, const EdgeSet& f) {
  const auto ids = f.ids();
  const int m = static_cast<int>(ids.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    std::vector<EdgeId> sub;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1U) sub.push_back(ids[static_cast<std::size_t>(i)]);
    if (laman_sparse(g, sub)) best = size;
  }
  return best;
}

/// Number of f-edges (undirected) between y and alive - y.
inline int cut(const Graph& g, const std::vector<char>& in_f, std::uint32_t y, std::uint32_t alive) {
  int c = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_f[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = g.edge(e);
    if (!(alive >> ed.u & 1U) || !(alive >> ed.v & 1U)) continue;
    if ((y >> ed.u & 1U) != (y >> ed.v & 1U)) ++c;
  }
  return c;
}

/// Minimum cut of G_f restricted to `alive` over every bipartition;
/// INT_MAX when fewer than two vertices are alive.
inline int min_cut(const Graph& g, const EdgeSet& f, std::uint32_t alive) {
  const auto in_f = f.mask(static_cast<std::size_t>(g.edge_count()));
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t y = alive; y; y = (y - 1) & alive) {
    if (y == alive) continue;
    best = std::min(best, cut(g, in_f, y, alive));
  }
  return best;
}

inline std::uint32_t all_vertices(const Graph& g) { return (1U << g.vertex_count()) - 1; }

/// (p,q)-connectivity by enumerating every X with |V - X| >= 2.
inline bool pq_connected(const Graph& g, int p, int q) {
  const std::uint32_t full = all_vertices(g);
  const EdgeSet all = g.all_edges();
  for (std::uint32_t x = 0; x <= full; ++x) {
    const std::uint32_t alive = full & ~x;
    if (__builtin_popcount(alive) < 2) continue;
    if (min_cut(g, all, alive) < p - q * __builtin_popcount(x)) return false;
  }
  return true;
}

/// Arcs given as (tail, head) pairs; true iff every nonempty proper subset of
/// `alive` has at least k arcs leaving it inside `alive`.
inline bool arc_connected(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs, int k, std::uint32_t alive) {
  (void)n;
  for (std::uint32_t y = alive; y; y = (y - 1) & alive) {
    if (y == alive) continue;
    int out = 0;
    for (auto [t, h] : arcs)
      if ((alive >> t & 1U) && (alive >> h & 1U) && (y >> t & 1U) && !(y >> h & 1U)) ++out;
    if (out < k) return false;
  }
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0, 1);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline EdgeSet random_subset(const Graph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (rng() & 1U) ids.push_back(e);
  return EdgeSet(std::move(ids));
}

}  // namespace ref
