#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rigpack/connectivity.hpp"
#include "rigpack/graph.hpp"
#include "rigpack/packing.hpp"

namespace rigpack {

/// Vertices of odd degree in G_F.
inline VertexSet odd_vertices(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : f) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  VertexSet odd;
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] % 2) odd.push_back(static_cast<VertexId>(v));
  return odd;
}

struct TJoinSpec {
  EdgeSet tree;       // spanning tree of the graph
  VertexSet targets;  // T, even size
};

/// The unique T-join inside a spanning tree: a tree edge is used iff the
/// subtree below it holds an odd number of targets.
inline EdgeSet tree_t_join(const Graph& g, const TJoinSpec& spec) {
  g.check_edges(spec.tree);
  const int n = g.vertex_count();
  if (static_cast<int>(spec.tree.size()) != std::max(0, n - 1) || component_count(g, spec.tree) > 1)
    throw Error(Errc::invalid_argument, "T-join needs a spanning tree");
  const auto is_target = vertex_mask(g, spec.targets);
  if (std::count(is_target.begin(), is_target.end(), 1) % 2)
    throw Error(Errc::invalid_argument, "T-join target set has odd size");
  if (n == 0) return {};

  std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
  for (EdgeId e : spec.tree) {
    adj[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    adj[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::vector<EdgeId> up(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> order{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId x = order[i];
    for (EdgeId e : adj[static_cast<std::size_t>(x)]) {
      const VertexId y = g.edge(e).other(x);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      up[static_cast<std::size_t>(y)] = e;
      order.push_back(y);
    }
  }
  std::vector<char> parity(is_target.begin(), is_target.end());
  std::vector<EdgeId> join;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId y = *it;
    const EdgeId e = up[static_cast<std::size_t>(y)];
    if (e < 0 || !parity[static_cast<std::size_t>(y)]) continue;
    join.push_back(e);
    parity[static_cast<std::size_t>(g.edge(e).other(y))] ^= 1;
  }
  return EdgeSet(std::move(join));
}

using RobustEulerianResult = std::variant<EdgeSet, DeficiencyWitness>;

/// Eulerian spanning subgraph H with H - v 2k-edge-connected for every v:
/// the union of 2k rigidity bases plus the T-join (inside the packed tree) of
/// that union's odd vertices. Both properties are re-checked before return.
inline RobustEulerianResult build_robust_eulerian(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (!g.is_simple()) throw Error(Errc::not_simple, "expects a simple graph");
  TwoConnectedPacking packing;
  try {
    packing = two_connected_packing(g, 2 * k, 1);
  } catch (const PackingFailed& failure) {
    return failure.witness();
  }
  EdgeSet base;
  for (const auto& f : packing.two_connected) base = set_union(base, f);
  const EdgeSet join = tree_t_join(g, {packing.connected.front(), odd_vertices(g, base)});
  EdgeSet h = set_union(base, join);

  if (!odd_vertices(g, h).empty()) throw std::logic_error("eulerian subgraph has odd-degree vertices");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId del[] = {v};
    if (edge_connectivity(g, h, del, 2 * k) < 2 * k)
      throw std::logic_error("H - " + std::to_string(v) + " is not " + std::to_string(2 * k) + "-edge-connected");
  }
  return h;
}

namespace detail {

/// Orients G_H (as its own graph) along closed trails, taking unused edges in
/// an order shuffled by rng when one is given.
inline Orientation trail_orientation(const Graph& sub, std::mt19937_64* rng) {
  Orientation d(sub);
  const auto n = static_cast<std::size_t>(sub.vertex_count());
  std::vector<std::vector<EdgeId>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto inc = sub.incident(static_cast<VertexId>(v));
    adj[v].assign(inc.begin(), inc.end());
    if (rng) std::shuffle(adj[v].begin(), adj[v].end(), *rng);
  }
  std::vector<char> used(static_cast<std::size_t>(sub.edge_count()), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<VertexId> starts(n);
  for (std::size_t v = 0; v < n; ++v) starts[v] = static_cast<VertexId>(v);
  if (rng) std::shuffle(starts.begin(), starts.end(), *rng);
  for (VertexId s : starts) {
    while (true) {
      VertexId x = s;
      bool moved = false;
      while (true) {
        auto& c = cursor[static_cast<std::size_t>(x)];
        auto& list = adj[static_cast<std::size_t>(x)];
        while (c < list.size() && used[static_cast<std::size_t>(list[c])]) ++c;
        if (c == list.size()) break;
        const EdgeId e = list[c];
        used[static_cast<std::size_t>(e)] = 1;
        d.set_tail(e, x);
        x = sub.edge(e).other(x);
        moved = true;
      }
      if (!moved) break;
      if (x != s) throw std::logic_error("closed trail did not close");
    }
  }
  return d;
}

inline int robustness_score(const Orientation& d, int k) {
  int score = 0;
  for (VertexId v = 0; v < d.base.vertex_count(); ++v) {
    const VertexId del[] = {v};
    auto alive = complement_mask(d.base, del);
    auto net = directed_network(d, alive);
    score += arc_deficit(net, alive, k);
  }
  return score;
}

/// Arcs of a directed path from any of `from` to any of `to`, avoiding
/// `banned`; neighbours are scanned in rng-shuffled order.
inline std::optional<std::vector<EdgeId>> directed_path(const Orientation& d, const std::vector<char>& from,
                                                        const std::vector<char>& to, VertexId banned,
                                                        std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(d.base.vertex_count());
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (from[v] && static_cast<VertexId>(v) != banned) {
      seen[v] = 1;
      queue.push_back(static_cast<VertexId>(v));
    }
  std::shuffle(queue.begin(), queue.end(), rng);
  std::vector<EdgeId> scratch;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId x = queue[qi];
    if (to[static_cast<std::size_t>(x)]) {
      std::vector<EdgeId> path;
      for (VertexId y = x; via[static_cast<std::size_t>(y)] >= 0;) {
        const EdgeId e = via[static_cast<std::size_t>(y)];
        path.push_back(e);
        y = d.tail(e);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    auto inc = d.base.incident(x);
    scratch.assign(inc.begin(), inc.end());
    std::shuffle(scratch.begin(), scratch.end(), rng);
    for (EdgeId e : scratch) {
      if (d.tail(e) != x) continue;
      const VertexId y = d.head(e);
      if (y == banned || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      via[static_cast<std::size_t>(y)] = e;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

/// A directed cycle whose reversal raises the out-degree of `cut` in D - v by
/// one: y -> v -> w followed by a path w ~> y inside D - v, y in the cut and
/// w outside it.
inline std::optional<std::vector<EdgeId>> repair_cycle(const Orientation& d, const RobustnessViolation& bad,
                                                       std::mt19937_64& rng) {
  const VertexId v = bad.vertex;
  const auto in_cut = vertex_mask(d.base, bad.cut.side);
  std::vector<EdgeId> into_v, out_of_v;
  for (EdgeId e : d.base.incident(v)) {
    if (d.head(e) == v && in_cut[static_cast<std::size_t>(d.tail(e))]) into_v.push_back(e);
    if (d.tail(e) == v && !in_cut[static_cast<std::size_t>(d.head(e))]) out_of_v.push_back(e);
  }
  if (into_v.empty() || out_of_v.empty()) return std::nullopt;
  std::shuffle(into_v.begin(), into_v.end(), rng);
  std::shuffle(out_of_v.begin(), out_of_v.end(), rng);
  const EdgeId enter = into_v.front();
  const EdgeId leave = out_of_v.front();
  std::vector<char> from(in_cut.size(), 0), to(in_cut.size(), 0);
  from[static_cast<std::size_t>(d.head(leave))] = 1;
  to[static_cast<std::size_t>(d.tail(enter))] = 1;
  auto path = directed_path(d, from, to, v, rng);
  if (!path) return std::nullopt;
  path->push_back(enter);
  path->push_back(leave);
  return path;
}

/// A directed cycle through a random arc.
inline std::optional<std::vector<EdgeId>> random_cycle(const Orientation& d, std::mt19937_64& rng) {
  if (d.base.edge_count() == 0) return std::nullopt;
  const auto e = static_cast<EdgeId>(rng() % static_cast<std::uint64_t>(d.base.edge_count()));
  const auto n = static_cast<std::size_t>(d.base.vertex_count());
  std::vector<char> from(n, 0), to(n, 0);
  from[static_cast<std::size_t>(d.head(e))] = 1;
  to[static_cast<std::size_t>(d.tail(e))] = 1;
  auto path = directed_path(d, from, to, -1, rng);
  if (!path) return std::nullopt;
  path->push_back(e);
  return path;
}

/// Depth-first walk over the balanced orientations of `sub`, returning the
/// first that passes the robustness check.
inline std::optional<Orientation> exhaustive_robust(const Graph& sub, int k) {
  Orientation d(sub);
  const auto n = static_cast<std::size_t>(sub.vertex_count());
  std::vector<int> out(n, 0), in(n, 0), half(n);
  for (std::size_t v = 0; v < n; ++v) half[v] = sub.degree(static_cast<VertexId>(v)) / 2;
  std::optional<Orientation> found;
  auto walk = [&](auto&& self, EdgeId e) -> void {
    if (found) return;
    if (e == sub.edge_count()) {
      if (is_vertex_robust_arc_connected(d, k)) found = d;
      return;
    }
    const Edge& ed = sub.edge(e);
    const auto u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
    for (int dir = 0; dir < 2 && !found; ++dir) {
      const std::size_t t = dir ? v : u, h = dir ? u : v;
      if (out[t] == half[t] || in[h] == half[h]) continue;
      ++out[t];
      ++in[h];
      d.set_tail(e, static_cast<VertexId>(t));
      self(self, e + 1);
      --out[t];
      --in[h];
    }
  };
  walk(walk, 0);
  return found;
}

}  // namespace detail

/// Orients the edges of G_H (returned as an orientation of
/// spanning_subgraph(g, h).graph, whose edge i is h[i]) so that in-degree
/// equals out-degree everywhere.
inline Orientation eulerian_orientation(const Graph& g, const EdgeSet& h) {
  if (const auto odd = odd_vertices(g, h); !odd.empty())
    throw Error(Errc::odd_degree, "vertex " + std::to_string(odd.front()) + " has odd degree");
  auto sub = spanning_subgraph(g, h);
  int nontrivial = 0;
  for (const auto& part : components(sub.graph, sub.graph.all_edges()))
    if (part.size() > 1) ++nontrivial;
  if (nontrivial > 1) throw Error(Errc::disconnected, "edges of H do not form a connected graph");
  return detail::trail_orientation(sub.graph, nullptr);
}

struct SearchBudget {
  long long max_flips = 1'000'000;
  double max_seconds = 120;
  std::uint64_t seed = 1;
  /// Balanced orientations are enumerated outright up to this many edges.
  int exhaustive_edges = 20;
};

struct SearchStats {
  long long flips = 0;
  int restarts = 0;
  double seconds = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

struct RobustOrientation {
  Orientation orientation;  // over spanning_subgraph(g, h).graph
  SearchStats stats;
};

struct SearchTimeout {
  SearchStats stats;
};

using RobustOrientResult = std::variant<RobustOrientation, SearchTimeout>;

/// Searches for an Eulerian orientation D of G_H with D - v k-arc-connected
/// for all v. Requires H Eulerian with H - v 2k-edge-connected for all v,
/// which guarantees existence; Errc::precondition otherwise.
///
/// Small H is enumerated outright. Otherwise the search starts from a random
/// trail orientation and, at the first violated (v, cut), reverses a directed
/// cycle that adds one arc leaving the cut in D - v. Moves that worsen the
/// total flow deficit are undone; long stalls trigger a restart. Every
/// returned orientation has passed the robustness check.
inline RobustOrientResult robust_orient(const Graph& g, const EdgeSet& h, int k, const SearchBudget& budget = {}) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (g.vertex_count() < 3) throw Error(Errc::too_few_vertices, "vertex-robust orientation needs at least 3 vertices");
  if (const auto odd = odd_vertices(g, h); !odd.empty())
    throw Error(Errc::precondition, "H has odd-degree vertex " + std::to_string(odd.front()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId del[] = {v};
    if (edge_connectivity(g, h, del, 2 * k) < 2 * k)
      throw Error(Errc::precondition, "H - " + std::to_string(v) + " is not " + std::to_string(2 * k) +
                                          "-edge-connected");
  }

  const auto clock_start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count(); };
  SearchStats stats;
  stats.seed = budget.seed;
  const Graph sub = spanning_subgraph(g, h).graph;

  if (sub.edge_count() <= budget.exhaustive_edges) {
    stats.exhaustive = true;
    auto d = detail::exhaustive_robust(sub, k);
    stats.seconds = elapsed();
    if (d) return RobustOrientation{std::move(*d), stats};
    return SearchTimeout{stats};
  }

  std::mt19937_64 rng(budget.seed);
  Orientation d = detail::trail_orientation(sub, &rng);
  int score = detail::robustness_score(d, k);
  int stall = 0;
  constexpr int kStallLimit = 400;
  while (stats.flips < budget.max_flips && elapsed() < budget.max_seconds) {
    if (score == 0) {
      if (!is_vertex_robust_arc_connected(d, k)) throw std::logic_error("zero deficit but robustness check failed");
      stats.seconds = elapsed();
      return RobustOrientation{std::move(d), stats};
    }
    const auto bad = robustness_violation(d, k);
    if (!bad) throw std::logic_error("positive deficit but no violation found");
    auto cycle = detail::repair_cycle(d, *bad, rng);
    if (!cycle || rng() % 8 == 0) cycle = detail::random_cycle(d, rng);
    if (!cycle) continue;
    for (EdgeId e : *cycle) d.flip(e);
    ++stats.flips;
    const int next = detail::robustness_score(d, k);
    if (next < score) {
      score = next;
      stall = 0;
    } else if (next == score || rng() % 16 == 0) {
      score = next;
      ++stall;
    } else {
      for (EdgeId e : *cycle) d.flip(e);
      ++stall;
    }
    if (stall > kStallLimit) {
      d = detail::trail_orientation(sub, &rng);
      score = detail::robustness_score(d, k);
      stall = 0;
      ++stats.restarts;
    }
  }
  stats.seconds = elapsed();
  return SearchTimeout{stats};
}

struct PipelineFailure {
  enum class Stage { packing, eulerianization, orientation_timeout };
  Stage stage = Stage::packing;
  std::optional<DeficiencyWitness> witness;
  std::optional<SearchStats> search;
  std::string detail;
};

inline const char* to_string(PipelineFailure::Stage s) {
  switch (s) {
    case PipelineFailure::Stage::packing: return "packing";
    case PipelineFailure::Stage::eulerianization: return "eulerianization";
    case PipelineFailure::Stage::orientation_timeout: return "orientation-timeout";
  }
  return "?";
}

struct PipelineSuccess {
  Orientation orientation;  // over g itself
  EdgeSet eulerian;         // H; edges outside it are oriented from the smaller endpoint
  SearchStats stats;
};

using PipelineResult = std::variant<PipelineSuccess, PipelineFailure>;

/// Orientation of all of g with D - v k-arc-connected for every v, built as
/// robust Eulerian subgraph -> verified orientation search -> inert edges.
inline PipelineResult orient_pipeline(const Graph& g, int k, const SearchBudget& budget = {}) {
  if (!g.is_simple()) throw Error(Errc::not_simple, "expects a simple graph");
  if (g.vertex_count() < 3) {
    PipelineFailure f;
    f.stage = PipelineFailure::Stage::packing;
    f.detail = "fewer than 3 vertices";
    return f;
  }
  RobustEulerianResult built;
  try {
    built = build_robust_eulerian(g, k);
  } catch (const std::logic_error& e) {
    PipelineFailure f;
    f.stage = PipelineFailure::Stage::eulerianization;
    f.detail = e.what();
    return f;
  }
  if (auto* w = std::get_if<DeficiencyWitness>(&built)) {
    PipelineFailure f;
    f.stage = PipelineFailure::Stage::packing;
    f.detail = "union rank " + std::to_string(w->achieved_rank) + " < " + std::to_string(w->full_rank);
    f.witness = std::move(*w);
    return f;
  }
  const EdgeSet h = std::get<EdgeSet>(built);
  auto found = robust_orient(g, h, k, budget);
  if (auto* t = std::get_if<SearchTimeout>(&found)) {
    PipelineFailure f;
    f.stage = PipelineFailure::Stage::orientation_timeout;
    f.search = t->stats;
    f.detail = "no robust orientation within budget";
    return f;
  }
  auto& ro = std::get<RobustOrientation>(found);
  Orientation full(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) full.set_tail(e, std::min(g.edge(e).u, g.edge(e).v));
  for (std::size_t i = 0; i < h.size(); ++i) full.set_tail(h[i], ro.orientation.tail(static_cast<EdgeId>(i)));
  if (!is_vertex_robust_arc_connected(full, k)) throw std::logic_error("adding inert arcs broke robustness");
  return PipelineSuccess{std::move(full), h, ro.stats};
}

}  // namespace rigpack
