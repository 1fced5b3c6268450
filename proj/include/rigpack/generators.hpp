#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rigpack/connectivity.hpp"
#include "rigpack/graph.hpp"

namespace rigpack::gen {

namespace detail {

/// Uniform integer in [0, bound) by rejection; unlike the standard
/// distributions its output is the same on every standard library.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(rng, i)]);
}

inline Graph from_pairs(int n, std::set<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline void need(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

}  // namespace detail

inline Graph complete(int n) {
  detail::need(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph path(int n) {
  detail::need(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle(int n) {
  detail::need(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

/// Centre 0 joined to 1..n-1.
inline Graph star(int n) {
  detail::need(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

/// Hub 0 plus the rim cycle 1..n-1.
inline Graph wheel(int n) {
  detail::need(n >= 4, "wheel needs n >= 4");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
  for (VertexId v = 1; v < n; ++v) edges.push_back({v, v + 1 < n ? v + 1 : 1});
  return Graph(n, std::move(edges));
}

/// Two triangles sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

/// Vertex i joined to i + o (mod n) for each offset o. Offsets that name the
/// same edge orbit (o and n - o) are merged.
inline Graph circulant(int n, const std::vector<int>& offsets) {
  detail::need(n >= 2, "circulant needs n >= 2");
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (int o : offsets) {
    const int r = ((o % n) + n) % n;
    detail::need(r != 0, "circulant offsets must be nonzero mod n");
    for (VertexId v = 0; v < n; ++v) {
      const VertexId w = (v + r) % n;
      pairs.insert({std::min(v, w), std::max(v, w)});
    }
  }
  return detail::from_pairs(n, std::move(pairs));
}

/// Erdős–Rényi G(n, p), pairs visited in lexicographic order.
inline Graph gnp(int n, double p, std::uint64_t seed) {
  detail::need(n >= 1, "gnp needs n >= 1");
  detail::need(p >= 0 && p <= 1, "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (detail::unit(rng) < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Configuration-model graph of degree about d: stubs paired at random, loops
/// and repeats dropped, then short vertices topped up with random new
/// neighbours (preferring other short vertices).
inline Graph near_regular(int n, int d, std::mt19937_64& rng) {
  detail::need(n >= 2 && d >= 1 && d <= n - 1, "near_regular needs 1 <= d <= n - 1");
  if ((static_cast<long long>(n) * d) % 2) d = d + 1 <= n - 1 ? d + 1 : d - 1;
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  detail::shuffle(stubs, rng);
  std::set<std::pair<VertexId, VertexId>> pairs;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  auto link = [&](VertexId u, VertexId v) {
    pairs.insert({std::min(u, v), std::max(u, v)});
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  };
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const VertexId u = stubs[i], v = stubs[i + 1];
    if (u != v && !adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) link(u, v);
  }
  for (VertexId v = 0; v < n; ++v) {
    while (deg[static_cast<std::size_t>(v)] < d) {
      std::vector<VertexId> short_side, any;
      for (VertexId u = 0; u < n; ++u) {
        if (u == v || adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) continue;
        any.push_back(u);
        if (deg[static_cast<std::size_t>(u)] < d) short_side.push_back(u);
      }
      const auto& pool = short_side.empty() ? any : short_side;
      if (pool.empty()) break;
      link(v, pool[detail::below(rng, pool.size())]);
    }
  }
  return detail::from_pairs(n, std::move(pairs));
}

/// A simple graph certified (p,q)-connected by the checker, drawn as a
/// near-regular graph of degree min(p + 2, n - 1) and resampled until it
/// passes. nullopt when max_attempts draws all fail, or at once when n <= p
/// (minimum degree p is then impossible).
inline std::optional<Graph> random_pq_connected(int n, const ConnectivitySpec& spec, std::uint64_t seed,
                                                int max_attempts = 200) {
  spec.validate();
  detail::need(max_attempts >= 1, "max_attempts must be positive");
  if (n < 2 || n <= spec.p) return std::nullopt;
  std::mt19937_64 rng(seed);
  const int d = std::min(spec.p + 2, n - 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = near_regular(n, d, rng);
    if (g.is_simple() && is_pq_connected(g, spec)) return g;
  }
  return std::nullopt;
}

}  // namespace rigpack::gen
