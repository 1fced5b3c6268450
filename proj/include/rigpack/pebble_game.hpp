#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rigpack/graph.hpp"

namespace rigpack {

/// (2,3)-pebble game over a subset of a graph's edges.
///
/// Every vertex owns two pebbles. An accepted edge is oriented away from the
/// vertex whose pebble covers it, so out-degree + free pebbles = 2 at every
/// vertex. An edge uv is accepted iff four pebbles can be brought onto u and
/// v by reversing paths; the accepted set is then independent in the 2D
/// rigidity matroid and the number of accepted edges is the rank of the
/// edges offered so far.
///
/// Probing moves pebbles but never changes the accepted set, so a game may be
/// probed freely between insertions. Not thread-safe.
class PebbleGame {
 public:
  explicit PebbleGame(const Graph& g)
      : g_(&g),
        pebbles_(static_cast<std::size_t>(g.vertex_count()), 2),
        out_(static_cast<std::size_t>(g.vertex_count())),
        tail_(static_cast<std::size_t>(g.edge_count()), -1),
        seen_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  const Graph& graph() const noexcept { return *g_; }
  std::size_t accepted_count() const noexcept { return accepted_; }
  bool contains(EdgeId e) const { return tail_.at(static_cast<std::size_t>(e)) >= 0; }
  int pebbles(VertexId v) const { return pebbles_.at(static_cast<std::size_t>(v)); }
  int out_degree(VertexId v) const { return static_cast<int>(out_.at(static_cast<std::size_t>(v)).size()); }
  VertexId tail(EdgeId e) const { return tail_.at(static_cast<std::size_t>(e)); }

  EdgeSet accepted() const {
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < tail_.size(); ++e)
      if (tail_[e] >= 0) ids.push_back(static_cast<EdgeId>(e));
    return EdgeSet(std::move(ids));
  }

  /// True iff accepted + {e} is independent. Moves pebbles.
  bool can_insert(EdgeId e) {
    const Edge& ed = g_->edge(e);
    return gather(ed.u, ed.v) == 4;
  }

  bool try_insert(EdgeId e) {
    if (contains(e)) return true;
    if (!can_insert(e)) return false;
    const VertexId u = g_->edge(e).u;
    --pebbles_[static_cast<std::size_t>(u)];
    out_[static_cast<std::size_t>(u)].push_back(e);
    tail_[static_cast<std::size_t>(e)] = u;
    ++accepted_;
    return true;
  }

  void remove(EdgeId e) {
    const VertexId t = tail(e);
    if (t < 0) return;
    auto& list = out_[static_cast<std::size_t>(t)];
    list.erase(std::find(list.begin(), list.end(), e));
    ++pebbles_[static_cast<std::size_t>(t)];
    tail_[static_cast<std::size_t>(e)] = -1;
    --accepted_;
  }

  /// Smallest vertex set X containing u and v whose accepted induced edges
  /// number 2|X| - 3. nullopt when the pair is not spanned (uv insertable).
  std::optional<VertexSet> tight_closure(VertexId u, VertexId v) {
    if (gather(u, v) == 4) return std::nullopt;
    std::vector<char> in(pebbles_.size(), 0);
    std::vector<VertexId> stack{u, v};
    in[static_cast<std::size_t>(u)] = in[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : out_[static_cast<std::size_t>(x)]) {
        const VertexId y = g_->edge(e).other(x);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    return to_set(in);
  }

  /// Largest vertex set X containing u and v whose accepted induced edges
  /// number 2|X| - 3 (the rigid component spanned by uv). nullopt when the
  /// pair is not spanned.
  std::optional<VertexSet> rigid_component(VertexId u, VertexId v) {
    if (gather(u, v) == 4) return std::nullopt;
    // With three pebbles pinned on {u, v}, a vertex belongs to the component
    // iff it cannot reach any other free pebble.
    const auto n = pebbles_.size();
    std::vector<std::vector<VertexId>> in_arcs(n);
    for (std::size_t x = 0; x < n; ++x)
      for (EdgeId e : out_[x]) in_arcs[static_cast<std::size_t>(g_->edge(e).other(static_cast<VertexId>(x)))].push_back(static_cast<VertexId>(x));
    std::vector<char> escapes(n, 0);
    std::vector<VertexId> stack;
    for (std::size_t w = 0; w < n; ++w)
      if (pebbles_[w] > 0 && static_cast<VertexId>(w) != u && static_cast<VertexId>(w) != v) {
        escapes[w] = 1;
        stack.push_back(static_cast<VertexId>(w));
      }
    while (!stack.empty()) {
      const VertexId y = stack.back();
      stack.pop_back();
      for (VertexId x : in_arcs[static_cast<std::size_t>(y)])
        if (!escapes[static_cast<std::size_t>(x)]) {
          escapes[static_cast<std::size_t>(x)] = 1;
          stack.push_back(x);
        }
    }
    for (auto& c : escapes) c = static_cast<char>(!c);
    return to_set(escapes);
  }

  /// Out-degree + pebbles = 2 everywhere and the totals add up to 2n.
  bool invariants_hold() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < pebbles_.size(); ++v) {
      if (pebbles_[v] < 0 || pebbles_[v] > 2) return false;
      if (pebbles_[v] + static_cast<int>(out_[v].size()) != 2) return false;
      total += static_cast<std::size_t>(pebbles_[v]);
    }
    return total + accepted_ == 2 * pebbles_.size();
  }

 private:
  static VertexSet to_set(const std::vector<char>& m) {
    VertexSet s;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v]) s.push_back(static_cast<VertexId>(v));
    return s;
  }

  /// Collects up to two pebbles on each of u and v; returns the total held.
  int gather(VertexId u, VertexId v) {
    const auto iu = static_cast<std::size_t>(u), iv = static_cast<std::size_t>(v);
    bool progress = true;
    while (progress && pebbles_[iu] + pebbles_[iv] < 4) {
      progress = false;
      if (pebbles_[iu] < 2 && fetch_pebble(u, v)) progress = true;
      if (pebbles_[iv] < 2 && fetch_pebble(v, u)) progress = true;
    }
    return pebbles_[iu] + pebbles_[iv];
  }

  /// Finds a free pebble reachable from `start` (not at start or `keep`) and
  /// moves it to start by reversing the path.
  bool fetch_pebble(VertexId start, VertexId keep) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    path_edge_.resize(pebbles_.size());
    std::vector<VertexId> stack{start};
    seen_[static_cast<std::size_t>(start)] = stamp_;
    VertexId found = -1;
    while (!stack.empty() && found < 0) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : out_[static_cast<std::size_t>(x)]) {
        const VertexId y = g_->edge(e).other(x);
        const auto iy = static_cast<std::size_t>(y);
        if (seen_[iy] == stamp_) continue;
        seen_[iy] = stamp_;
        path_edge_[iy] = e;
        if (y != keep && pebbles_[iy] > 0) {
          found = y;
          break;
        }
        stack.push_back(y);
      }
    }
    if (found < 0) return false;
    --pebbles_[static_cast<std::size_t>(found)];
    for (VertexId y = found; y != start;) {
      const EdgeId e = path_edge_[static_cast<std::size_t>(y)];
      const VertexId x = tail_[static_cast<std::size_t>(e)];
      auto& list = out_[static_cast<std::size_t>(x)];
      list.erase(std::find(list.begin(), list.end(), e));
      out_[static_cast<std::size_t>(y)].push_back(e);
      tail_[static_cast<std::size_t>(e)] = y;
      y = x;
    }
    ++pebbles_[static_cast<std::size_t>(start)];
    return true;
  }

  const Graph* g_;
  std::vector<int> pebbles_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<VertexId> tail_;
  std::size_t accepted_ = 0;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<EdgeId> path_edge_;
};

}  // namespace rigpack
