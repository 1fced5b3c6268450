#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rigpack/graph.hpp"

namespace rigpack::detail {

/// Small-capacity max-flow network (augmenting BFS paths). Arcs are stored in
/// pairs: arc i and arc i^1 are mutual residuals. An undirected edge becomes
/// one pair with capacity 1 in both directions; a directed arc has capacity 1
/// forward and 0 backward.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }

  void add_undirected(std::size_t u, std::size_t v) { add_pair(u, v, 1, 1); }
  void add_arc(std::size_t tail, std::size_t head) { add_pair(tail, head, 1, 0); }

  void reset() { cap_ = base_cap_; }

  /// Pushes flow from s to t until `limit` units or no augmenting path.
  int max_flow(std::size_t s, std::size_t t, int limit = std::numeric_limits<int>::max()) {
    reset();
    int flow = 0;
    std::vector<int> via(adj_.size());
    std::vector<std::size_t> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[s] = -2;
      queue.assign(1, s);
      for (std::size_t qi = 0; qi < queue.size() && via[t] == -1; ++qi) {
        const std::size_t x = queue[qi];
        for (int a : adj_[x]) {
          const std::size_t y = head_[static_cast<std::size_t>(a)];
          if (cap_[static_cast<std::size_t>(a)] > 0 && via[y] == -1) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[t] == -1) break;
      for (std::size_t y = t; y != s;) {
        const auto a = static_cast<std::size_t>(via[y]);
        --cap_[a];
        ++cap_[a ^ 1U];
        y = head_[a ^ 1U];
      }
      ++flow;
    }
    return flow;
  }

  /// Vertices reachable from s in the residual network of the last flow.
  std::vector<char> residual_reach(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (int a : adj_[x]) {
        const std::size_t y = head_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  void add_pair(std::size_t u, std::size_t v, int cap_uv, int cap_vu) {
    const auto id = static_cast<int>(head_.size());
    head_.push_back(v);
    base_cap_.push_back(cap_uv);
    head_.push_back(u);
    base_cap_.push_back(cap_vu);
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    cap_ = base_cap_;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::size_t> head_;
  std::vector<int> base_cap_;
  std::vector<int> cap_;
};

/// Undirected network of G_F restricted to alive vertices.
inline FlowNetwork undirected_network(const Graph& g, const std::vector<char>& edge_in,
                                      const std::vector<char>& alive) {
  FlowNetwork net(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!edge_in[static_cast<std::size_t>(e)]) continue;
    const auto u = static_cast<std::size_t>(g.edge(e).u), v = static_cast<std::size_t>(g.edge(e).v);
    if (alive[u] && alive[v]) net.add_undirected(u, v);
  }
  return net;
}

struct MinCut {
  int value = std::numeric_limits<int>::max();  // max() when < 2 vertices are alive
  std::vector<char> side;                        // source side; empty when value is max()
};

/// Global minimum edge cut among alive vertices via n-1 rooted max flows.
/// Flows are capped at `limit`: a returned value >= limit only certifies
/// that the true value is >= limit.
inline MinCut global_min_cut(FlowNetwork& net, const std::vector<char>& alive,
                             int limit = std::numeric_limits<int>::max()) {
  MinCut best;
  std::size_t root = alive.size();
  for (std::size_t v = 0; v < alive.size(); ++v)
    if (alive[v]) {
      root = v;
      break;
    }
  if (root == alive.size()) return best;
  for (std::size_t t = root + 1; t < alive.size(); ++t) {
    if (!alive[t]) continue;
    const int cap = std::min(limit, best.value);
    const int f = net.max_flow(root, t, cap);
    if (f >= best.value) continue;
    best.value = f;
    best.side.clear();
    if (f < limit) {
      best.side = net.residual_reach(root);
      for (std::size_t v = 0; v < alive.size(); ++v) best.side[v] = static_cast<char>(best.side[v] && alive[v]);
    }
  }
  return best;
}

}  // namespace rigpack::detail
