#pragma once

// Ground-truth engines used to check the fast algorithms. None of them shares
// code with the pebble game or the matroid-union engine.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rigpack/graph.hpp"

namespace rigpack::oracle {

namespace detail {

struct LocalVertices {
  std::vector<int> index;  // graph vertex -> bit, -1 if untouched
  int count = 0;
};

inline LocalVertices touched_vertices(const Graph& g, const EdgeSet& f) {
  LocalVertices lv{std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1), 0};
  for (EdgeId e : f)
    for (VertexId w : {g.edge(e).u, g.edge(e).v})
      if (lv.index[static_cast<std::size_t>(w)] < 0) lv.index[static_cast<std::size_t>(w)] = lv.count++;
  return lv;
}

/// Induced-edge counts for every subset of a small vertex set; an edge fits
/// iff every superset X of its endpoints still has count <= 2|X| - 3.
class SparsityCounter {
 public:
  explicit SparsityCounter(int vertices) : full_((1U << vertices) - 1), count_(std::size_t{1} << vertices, 0) {}

  bool fits(std::uint32_t ends) const {
    const std::uint32_t rest = full_ & ~ends;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t x = sub | ends;
      if (count_[x] + 1 > 2 * std::popcount(x) - 3) return false;
      if (sub == 0) break;
    }
    return true;
  }

  void add(std::uint32_t ends, int delta) {
    const std::uint32_t rest = full_ & ~ends;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      count_[sub | ends] += delta;
      if (sub == 0) break;
    }
  }

 private:
  std::uint32_t full_;
  std::vector<int> count_;
};

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  __extension__ using u128 = unsigned __int128;
  const u128 p = static_cast<u128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

/// Rank over GF(kPrime); the matrix is consumed.
inline int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const std::uint64_t inv = inv_mod(prow[c]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::uint64_t factor = mul_mod(rows[r][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) rows[r][j] = sub_mod(rows[r][j], mul_mod(factor, prow[j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Literal check of the Laman counts: every vertex set X with |X| >= 2
/// induces at most 2|X| - 3 edges of f. Needs |V(f)| <= 20.
inline bool is_laman_sparse(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  const auto lv = detail::touched_vertices(g, f);
  if (lv.count > 20) throw Error(Errc::too_large, "Laman count check supports at most 20 touched vertices");
  detail::SparsityCounter counter(lv.count);
  for (EdgeId e : f) {
    const std::uint32_t ends = (1U << lv.index[static_cast<std::size_t>(g.edge(e).u)]) |
                               (1U << lv.index[static_cast<std::size_t>(g.edge(e).v)]);
    if (!counter.fits(ends)) return false;
    counter.add(ends, 1);
  }
  return true;
}

/// Size of the largest Laman-sparse subset of f. Each edge is admitted in
/// id order iff the admitted set stays sparse under the full subset count
/// check; because the sparse sets form a matroid this greedy pass attains the
/// maximum. Needs |V(f)| <= 16.
inline int laman_rank_bruteforce(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  const auto lv = detail::touched_vertices(g, f);
  if (lv.count > 16) throw Error(Errc::too_large, "Laman oracle supports at most 16 touched vertices");
  detail::SparsityCounter counter(lv.count);
  int rank = 0;
  for (EdgeId e : f) {
    const std::uint32_t ends = (1U << lv.index[static_cast<std::size_t>(g.edge(e).u)]) |
                               (1U << lv.index[static_cast<std::size_t>(g.edge(e).v)]);
    if (!counter.fits(ends)) continue;
    counter.add(ends, 1);
    ++rank;
  }
  return rank;
}

/// Random planar coordinates over GF(2^61 - 1), a deterministic function of seed.
struct GenericConfiguration {
  std::uint64_t prime = detail::kPrime;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> coords;
  std::uint64_t seed = 0;

  static GenericConfiguration make(VertexId n, std::uint64_t seed) {
    GenericConfiguration c;
    c.seed = seed;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto draw = [&] {
      std::uint64_t x;
      do x = rng() & detail::kPrime;
      while (x == 0 || x >= detail::kPrime);
      return x;
    };
    c.coords.resize(static_cast<std::size_t>(n));
    for (auto& xy : c.coords) {
      xy.first = draw();
      xy.second = draw();
    }
    return c;
  }
};

/// Rank of the rigidity matrix of G_F at one configuration.
inline int rigidity_matrix_rank(const Graph& g, const EdgeSet& f, const GenericConfiguration& conf) {
  g.check_edges(f);
  const auto cols = 2 * static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(f.size());
  for (EdgeId e : f) {
    const auto u = static_cast<std::size_t>(g.edge(e).u), v = static_cast<std::size_t>(g.edge(e).v);
    std::vector<std::uint64_t> row(cols, 0);
    const std::uint64_t dx = detail::sub_mod(conf.coords[u].first, conf.coords[v].first);
    const std::uint64_t dy = detail::sub_mod(conf.coords[u].second, conf.coords[v].second);
    row[2 * u] = dx;
    row[2 * u + 1] = dy;
    row[2 * v] = detail::sub_mod(0, dx);
    row[2 * v + 1] = detail::sub_mod(0, dy);
    rows.push_back(std::move(row));
  }
  return detail::rank_mod_p(std::move(rows));
}

/// Generic rigidity-matrix rank: the maximum over `trials` random
/// configurations derived from seed. A specialization can only lose rank.
inline int matrix_rank_rigidity(const Graph& g, const EdgeSet& f, std::uint64_t seed = 1, int trials = 3) {
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed * std::uint64_t{1000003} + static_cast<std::uint64_t>(t);
    best = std::max(best, rigidity_matrix_rank(g, f, GenericConfiguration::make(g.vertex_count(), trial_seed)));
  }
  return best;
}

/// Largest S ⊆ E splittable into k Laman-sparse sets and l forests, by
/// exhaustive assignment with branch-and-bound. Needs |E| <= 12 and n <= 6.
inline int union_rank_bruteforce(const Graph& g, int k, int l) {
  if (k < 0 || l < 0 || k + l < 1) throw Error(Errc::invalid_argument, "need k, l >= 0 and k + l >= 1");
  if (g.edge_count() > 12 || g.vertex_count() > 6)
    throw Error(Errc::too_large, "union oracle supports at most 12 edges and 6 vertices");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<detail::SparsityCounter> rigid(static_cast<std::size_t>(k), detail::SparsityCounter(n));
  std::vector<std::vector<std::uint32_t>> forest_adj(static_cast<std::size_t>(l),
                                                     std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  std::vector<int> part_size(static_cast<std::size_t>(k + l), 0);

  auto reachable = [&](const std::vector<std::uint32_t>& adj, int from, int to) {
    std::uint32_t seen = 1U << from, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int x = 0; x < n; ++x)
        if (frontier & (1U << x)) next |= adj[static_cast<std::size_t>(x)];
      frontier = next & ~seen;
      seen |= next;
    }
    return (seen >> to) & 1U;
  };

  const long long cap_rigid = n >= 2 ? 2LL * n - 3 : 0;
  const long long cap = std::min<long long>(m, k * cap_rigid + static_cast<long long>(l) * std::max(0, n - 1));
  int best = 0;
  auto search = [&](auto&& self, int e, int selected) -> void {
    if (best >= cap) return;
    if (selected + (m - e) <= best) return;
    if (e == m) {
      best = std::max(best, selected);
      return;
    }
    const int u = g.edge(e).u, v = g.edge(e).v;
    const std::uint32_t ends = (1U << u) | (1U << v);
    for (int p = 0; p < k; ++p) {
      if (p > 0 && part_size[static_cast<std::size_t>(p - 1)] == 0) break;  // empty copies are interchangeable
      auto& c = rigid[static_cast<std::size_t>(p)];
      if (!c.fits(ends)) continue;
      c.add(ends, 1);
      ++part_size[static_cast<std::size_t>(p)];
      self(self, e + 1, selected + 1);
      --part_size[static_cast<std::size_t>(p)];
      c.add(ends, -1);
    }
    for (int q = 0; q < l; ++q) {
      if (q > 0 && part_size[static_cast<std::size_t>(k + q - 1)] == 0) break;
      auto& adj = forest_adj[static_cast<std::size_t>(q)];
      if (reachable(adj, u, v)) continue;
      adj[static_cast<std::size_t>(u)] |= 1U << v;
      adj[static_cast<std::size_t>(v)] |= 1U << u;
      ++part_size[static_cast<std::size_t>(k + q)];
      self(self, e + 1, selected + 1);
      --part_size[static_cast<std::size_t>(k + q)];
      adj[static_cast<std::size_t>(u)] &= ~(1U << v);
      adj[static_cast<std::size_t>(v)] &= ~(1U << u);
    }
    self(self, e + 1, selected);
  };
  search(search, 0, 0);
  return best;
}

}  // namespace rigpack::oracle
