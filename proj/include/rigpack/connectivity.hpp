#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "rigpack/flow.hpp"
#include "rigpack/graph.hpp"

namespace rigpack {

struct ConnectivitySpec {
  int p = 1;
  int q = 1;

  void validate() const {
    if (p < 1 || q < 1) throw Error(Errc::invalid_argument, "(p,q)-connectivity needs p >= 1 and q >= 1");
  }
};

/// A violated instance of d_{G-X}(Y) >= p - q|X|.
struct ConnectivityWitness {
  VertexSet deleted_vertices;  // X
  VertexSet cut_side;          // Y
  int cut_value = 0;           // d_{G-X}(Y)
  int required = 0;            // p - q|X|
};

struct VertexConnectivity {
  bool ok = false;
  bool too_few_vertices = false;  // |V| <= k
  VertexSet separator;            // set of < k vertices whose removal disconnects G
};

/// A vertex set with directed out-degree below the requested k.
struct DirectedCut {
  VertexSet side;
  int out_degree = 0;
};

/// D - vertex is not k-arc-connected; `cut` lives in D - vertex.
struct RobustnessViolation {
  VertexId vertex = 0;
  DirectedCut cut;
};

namespace detail {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Calls fn on every s-subset of [0, n) in lexicographic order; stops when fn
/// returns true. Returns whether fn stopped the walk.
inline bool for_each_subset(int n, int s, const std::function<bool(const VertexSet&)>& fn) {
  if (s < 0 || s > n) return false;
  VertexSet x(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) x[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(x)) return true;
    int i = s - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) return false;
    ++x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) x[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline double binomial(int n, int s) {
  double r = 1;
  for (int i = 1; i <= s; ++i) r = r * (n - s + i) / i;
  return r;
}

inline std::vector<char> complement_mask(const Graph& g, std::span<const VertexId> removed) {
  auto alive = vertex_mask(g, removed);
  for (auto& a : alive) a = static_cast<char>(!a);
  return alive;
}

inline VertexSet mask_to_set(const std::vector<char>& m) {
  VertexSet s;
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v]) s.push_back(static_cast<VertexId>(v));
  return s;
}

inline bool connected_among(const Graph& g, const std::vector<char>& alive) {
  const auto n = alive.size();
  std::size_t start = n, count = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) {
      if (start == n) start = v;
      ++count;
    }
  if (count <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{static_cast<VertexId>(start)};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const auto y = static_cast<std::size_t>(g.edge(e).other(x));
      if (alive[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(static_cast<VertexId>(y));
      }
    }
  }
  return reached == count;
}

inline FlowNetwork directed_network(const Orientation& d, const std::vector<char>& alive) {
  FlowNetwork net(static_cast<std::size_t>(d.base.vertex_count()));
  for (EdgeId e = 0; e < d.base.edge_count(); ++e) {
    const auto t = static_cast<std::size_t>(d.tail(e)), h = static_cast<std::size_t>(d.head(e));
    if (alive[t] && alive[h]) net.add_arc(t, h);
  }
  return net;
}

/// First set (in a fixed probe order) of alive vertices with out-degree < k.
inline std::optional<DirectedCut> arc_cut_below(FlowNetwork& net, const std::vector<char>& alive, int k) {
  std::size_t root = alive.size();
  for (std::size_t v = 0; v < alive.size(); ++v)
    if (alive[v]) {
      root = v;
      break;
    }
  if (root == alive.size()) return std::nullopt;
  auto make_cut = [&](std::size_t source, int value) {
    auto side = net.residual_reach(source);
    for (std::size_t v = 0; v < side.size(); ++v) side[v] = static_cast<char>(side[v] && alive[v]);
    return DirectedCut{mask_to_set(side), value};
  };
  for (std::size_t t = 0; t < alive.size(); ++t) {
    if (!alive[t] || t == root) continue;
    if (const int f = net.max_flow(root, t, k); f < k) return make_cut(root, f);
    if (const int f = net.max_flow(t, root, k); f < k) return make_cut(t, f);
  }
  return std::nullopt;
}

/// Sum over alive t of the missing flow (capped at k) root->t and t->root.
/// Zero iff the alive part is k-arc-connected.
inline int arc_deficit(FlowNetwork& net, const std::vector<char>& alive, int k) {
  std::size_t root = alive.size();
  for (std::size_t v = 0; v < alive.size(); ++v)
    if (alive[v]) {
      root = v;
      break;
    }
  int deficit = 0;
  for (std::size_t t = root + 1; t < alive.size(); ++t) {
    if (!alive[t]) continue;
    deficit += k - net.max_flow(root, t, k);
    deficit += k - net.max_flow(t, root, k);
  }
  return deficit;
}

}  // namespace detail

/// lambda(G_F - deleted). Returns INT_MAX when fewer than two vertices remain.
/// With `limit`, flows stop early and any value >= limit may be reported as limit.
inline int edge_connectivity(const Graph& g, const EdgeSet& f, std::span<const VertexId> deleted,
                             int limit = detail::kUnbounded) {
  g.check_edges(f);
  const auto alive = detail::complement_mask(g, deleted);
  auto net = detail::undirected_network(g, f.mask(static_cast<std::size_t>(g.edge_count())), alive);
  return detail::global_min_cut(net, alive, limit).value;
}

/// Global minimum edge cut of g; 0 iff disconnected.
inline int edge_connectivity(const Graph& g) {
  if (g.vertex_count() < 2) throw Error(Errc::too_few_vertices, "edge connectivity needs at least 2 vertices");
  return edge_connectivity(g, g.all_edges(), {});
}

/// k-connectivity in the strict sense: |V| > k and G - X connected for all
/// |X| <= k - 1. On failure the first separator in lexicographic order is given.
inline VertexConnectivity vertex_connectivity_at_least(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  VertexConnectivity r;
  if (g.vertex_count() <= k) {
    r.too_few_vertices = true;
    return r;
  }
  for (int s = 0; s < k; ++s) {
    const bool found = detail::for_each_subset(g.vertex_count(), s, [&](const VertexSet& x) {
      if (detail::connected_among(g, detail::complement_mask(g, x))) return false;
      r.separator = x;
      return true;
    });
    if (found) return r;
  }
  r.ok = true;
  return r;
}

struct PqOptions {
  /// Refuse to enumerate more deleted sets than this.
  double max_subsets = 2e7;
  unsigned threads = 1;
};

/// Searches for X with G - X not (p - q|X|)-edge-connected. Candidate sets are
/// visited by size and then lexicographically; the first violation in that
/// order is returned regardless of thread count. Only |X| <= ceil(p/q) - 1 and
/// |V - X| >= 2 constrain anything, so that is all that gets enumerated; the
/// count is binomial in n and checked against `opts.max_subsets`.
inline std::optional<ConnectivityWitness> pq_violation(const Graph& g, const ConnectivitySpec& spec,
                                                       const PqOptions& opts = {}) {
  spec.validate();
  const int n = g.vertex_count();
  const int max_deleted = std::min((spec.p - 1) / spec.q, n - 2);
  double total = 0;
  for (int s = 0; s <= max_deleted; ++s) total += detail::binomial(n, s);
  if (total > opts.max_subsets)
    throw Error(Errc::too_large, "(p,q) check would enumerate " + std::to_string(static_cast<long long>(total)) +
                                     " vertex subsets");

  const auto all = g.all_edges().mask(static_cast<std::size_t>(g.edge_count()));
  auto check = [&](const VertexSet& x) -> std::optional<ConnectivityWitness> {
    const int need = spec.p - spec.q * static_cast<int>(x.size());
    const auto alive = detail::complement_mask(g, x);
    auto net = detail::undirected_network(g, all, alive);
    auto cut = detail::global_min_cut(net, alive, need);
    if (cut.value >= need) return std::nullopt;
    return ConnectivityWitness{x, detail::mask_to_set(cut.side), cut.value, need};
  };

  const unsigned threads = std::max(1U, opts.threads);
  constexpr std::size_t kChunk = 2048;
  std::vector<VertexSet> chunk;
  std::optional<ConnectivityWitness> found;

  auto flush = [&]() {
    if (chunk.empty() || found) return;
    std::vector<std::optional<ConnectivityWitness>> results(chunk.size());
    if (threads == 1 || chunk.size() < 2 * threads) {
      for (std::size_t i = 0; i < chunk.size() && !found; ++i)
        if (auto w = check(chunk[i])) found = std::move(w);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < chunk.size(); i += threads) results[i] = check(chunk[i]);
        });
      for (auto& th : pool) th.join();
      for (auto& r : results)
        if (r) {
          found = std::move(r);
          break;
        }
    }
    chunk.clear();
  };

  for (int s = 0; s <= max_deleted && !found; ++s) {
    detail::for_each_subset(n, s, [&](const VertexSet& x) {
      chunk.push_back(x);
      if (chunk.size() >= kChunk) flush();
      return found.has_value();
    });
    flush();
  }
  return found;
}

inline bool is_pq_connected(const Graph& g, const ConnectivitySpec& spec, const PqOptions& opts = {}) {
  return !pq_violation(g, spec, opts).has_value();
}

/// First directed cut of D - deleted with out-degree < k, if any.
inline std::optional<DirectedCut> arc_connectivity_violation(const Orientation& d, int k,
                                                             std::span<const VertexId> deleted = {}) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  const auto alive = detail::complement_mask(d.base, deleted);
  auto net = detail::directed_network(d, alive);
  return detail::arc_cut_below(net, alive, k);
}

inline bool is_k_arc_connected(const Orientation& d, int k) {
  if (d.base.vertex_count() < 2) throw Error(Errc::too_few_vertices, "arc connectivity needs at least 2 vertices");
  return !arc_connectivity_violation(d, k).has_value();
}

/// First vertex v (ascending) for which D - v is not k-arc-connected.
inline std::optional<RobustnessViolation> robustness_violation(const Orientation& d, int k) {
  if (d.base.vertex_count() < 3) throw Error(Errc::too_few_vertices, "vertex-robust check needs at least 3 vertices");
  for (VertexId v = 0; v < d.base.vertex_count(); ++v) {
    const VertexId del[] = {v};
    if (auto cut = arc_connectivity_violation(d, k, del)) return RobustnessViolation{v, std::move(*cut)};
  }
  return std::nullopt;
}

inline bool is_vertex_robust_arc_connected(const Orientation& d, int k) {
  return !robustness_violation(d, k).has_value();
}

}  // namespace rigpack
