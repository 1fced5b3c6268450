#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigpack/graph.hpp"
#include "rigpack/pebble_game.hpp"
#include "rigpack/rigidity.hpp"

namespace rigpack {

// ---------------------------------------------------------------------------
// Matroid parts
// ---------------------------------------------------------------------------

/// One independent set of a matroid on a graph's edges, grown and shrunk by
/// the union engine. `circuit(y)` is nullopt when members + y is independent
/// and otherwise the members z for which members - z + y is independent.
template <class P>
concept MatroidPart = requires(P p, const P cp, EdgeId e) {
  { p.circuit(e) } -> std::same_as<std::optional<std::vector<EdgeId>>>;
  p.add(e);
  p.remove(e);
  { cp.contains(e) } -> std::convertible_to<bool>;
  { cp.size() } -> std::convertible_to<std::size_t>;
  { cp.members() } -> std::same_as<EdgeSet>;
};

/// A forest of the circuit (graphic) matroid.
class ForestPart {
 public:
  explicit ForestPart(const Graph& g)
      : g_(&g), adj_(static_cast<std::size_t>(g.vertex_count())), in_(static_cast<std::size_t>(g.edge_count()), 0) {}

  bool contains(EdgeId e) const { return in_.at(static_cast<std::size_t>(e)) != 0; }
  std::size_t size() const noexcept { return size_; }

  EdgeSet members() const {
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < in_.size(); ++e)
      if (in_[e]) ids.push_back(static_cast<EdgeId>(e));
    return EdgeSet(std::move(ids));
  }

  /// The forest path joining y's endpoints, if there is one.
  std::optional<std::vector<EdgeId>> circuit(EdgeId y) const {
    const VertexId s = g_->edge(y).u, t = g_->edge(y).v;
    std::vector<EdgeId> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::vector<VertexId> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t qi = 0; qi < queue.size() && !seen[static_cast<std::size_t>(t)]; ++qi) {
      const VertexId x = queue[qi];
      for (EdgeId e : adj_[static_cast<std::size_t>(x)]) {
        const VertexId w = g_->edge(e).other(x);
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        via[static_cast<std::size_t>(w)] = e;
        queue.push_back(w);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) return std::nullopt;
    std::vector<EdgeId> path;
    for (VertexId w = t; w != s;) {
      const EdgeId e = via[static_cast<std::size_t>(w)];
      path.push_back(e);
      w = g_->edge(e).other(w);
    }
    std::sort(path.begin(), path.end());
    return path;
  }

  void add(EdgeId e) {
    if (contains(e)) return;
    in_[static_cast<std::size_t>(e)] = 1;
    adj_[static_cast<std::size_t>(g_->edge(e).u)].push_back(e);
    adj_[static_cast<std::size_t>(g_->edge(e).v)].push_back(e);
    ++size_;
  }

  void remove(EdgeId e) {
    if (!contains(e)) return;
    in_[static_cast<std::size_t>(e)] = 0;
    for (VertexId w : {g_->edge(e).u, g_->edge(e).v}) {
      auto& list = adj_[static_cast<std::size_t>(w)];
      list.erase(std::find(list.begin(), list.end(), e));
    }
    --size_;
  }

 private:
  const Graph* g_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<char> in_;
  std::size_t size_ = 0;
};

/// An independent set of the 2D rigidity matroid, backed by a pebble game.
class RigidityPart {
 public:
  explicit RigidityPart(const Graph& g) : g_(&g), game_(g) {}

  bool contains(EdgeId e) const { return game_.contains(e); }
  std::size_t size() const noexcept { return game_.accepted_count(); }
  EdgeSet members() const { return game_.accepted(); }

  /// Members induced by the smallest tight set spanning y.
  std::optional<std::vector<EdgeId>> circuit(EdgeId y) {
    if (game_.can_insert(y)) return std::nullopt;
    const auto closure = game_.tight_closure(g_->edge(y).u, g_->edge(y).v);
    if (!closure) throw std::logic_error("pebble game disagrees with itself on edge " + std::to_string(y));
    std::vector<char> in(static_cast<std::size_t>(g_->vertex_count()), 0);
    for (VertexId v : *closure) in[static_cast<std::size_t>(v)] = 1;
    std::vector<EdgeId> out;
    for (EdgeId e : game_.accepted()) {
      const Edge& ed = g_->edge(e);
      if (in[static_cast<std::size_t>(ed.u)] && in[static_cast<std::size_t>(ed.v)]) out.push_back(e);
    }
    return out;
  }

  void add(EdgeId e) {
    if (!game_.try_insert(e)) throw std::logic_error("edge " + std::to_string(e) + " is dependent in a rigidity part");
  }
  void remove(EdgeId e) { game_.remove(e); }

 private:
  const Graph* g_;
  PebbleGame game_;
};

static_assert(MatroidPart<ForestPart>);
static_assert(MatroidPart<RigidityPart>);

/// Independence of f in the matroid modelled by part type P.
template <MatroidPart P>
bool independent_in(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  P part(g);
  for (EdgeId e : f) {
    if (part.circuit(e)) return false;
    part.add(e);
  }
  return true;
}

/// G_F is a forest.
inline bool circuit_independent(const Graph& g, const EdgeSet& f) { return independent_in<ForestPart>(g, f); }

/// n - c(G_F).
inline int circuit_rank(const Graph& g, const EdgeSet& f) { return g.vertex_count() - component_count(g, f); }

// ---------------------------------------------------------------------------
// Union engine
// ---------------------------------------------------------------------------

/// Disjoint independent sets of k rigidity copies and l graphic copies.
struct UnionPartition {
  std::vector<EdgeSet> rigidity_parts;
  std::vector<EdgeSet> forest_parts;
  EdgeSet unselected;  // ground edges in no part

  std::size_t selected_count() const {
    std::size_t total = 0;
    for (const auto& p : rigidity_parts) total += p.size();
    for (const auto& p : forest_parts) total += p.size();
    return total;
  }
};

/// A set F at which k r_R(F) + l r_C(F) + |ground - F| attains the union
/// rank, which is below the full value k(2n-3) + l(n-1).
struct DeficiencyWitness {
  int k = 0;
  int l = 0;
  EdgeSet f;
  int rigidity_rank_f = 0;
  int circuit_rank_f = 0;
  int outside = 0;
  int achieved_rank = 0;
  int full_rank = 0;
  Cover cover;  // rigid components of f; empty when f is
};

/// Full union rank k(2n-3) + l(n-1), i.e. k rigidity bases plus l spanning trees.
inline int full_union_rank(const Graph& g, int k, int l) {
  const int n = g.vertex_count();
  return k * std::max(0, 2 * n - 3) + l * std::max(0, n - 1);
}

/// Matroid partition by shortest augmenting paths.
///
/// Ground edges are inserted in id order. For each new element a BFS runs in
/// the exchange digraph: from element y, every part i not holding y is
/// probed; if part i absorbs y the path is applied, otherwise the BFS moves to
/// the members of the circuit of y in part i (each of which y could replace).
/// Forest parts are probed before rigidity parts.
class MatroidUnion {
 public:
  MatroidUnion(const Graph& g, int k, int l, const EdgeSet& ground)
      : g_(&g), k_(k), l_(l), ground_(ground), part_of_(static_cast<std::size_t>(g.edge_count()), kOutside) {
    if (k < 0 || l < 0 || k + l < 1) throw Error(Errc::invalid_argument, "need k, l >= 0 and k + l >= 1");
    g.check_edges(ground);
    for (int i = 0; i < l; ++i) forests_.emplace_back(g);
    for (int i = 0; i < k; ++i) rigid_.emplace_back(g);
    for (EdgeId e : ground_) part_of_[static_cast<std::size_t>(e)] = kUnselected;
    for (EdgeId e : ground_) insert(e);
  }

  int rank() const { return static_cast<int>(selected_); }

  UnionPartition partition() const {
    UnionPartition p;
    for (const auto& r : rigid_) p.rigidity_parts.push_back(r.members());
    for (const auto& f : forests_) p.forest_parts.push_back(f.members());
    std::vector<EdgeId> rest;
    for (EdgeId e : ground_)
      if (part_of_[static_cast<std::size_t>(e)] == kUnselected) rest.push_back(e);
    p.unselected = EdgeSet(std::move(rest));
    return p;
  }

  /// Elements reachable in the exchange digraph from all unselected elements.
  /// In every copy the reached members span the reached set, which makes it a
  /// minimizer of the union rank formula.
  EdgeSet blocked_set() {
    std::vector<EdgeId> sources;
    for (EdgeId e : ground_)
      if (part_of_[static_cast<std::size_t>(e)] == kUnselected) sources.push_back(e);
    const auto search = bfs(sources);
    if (search.found) throw std::logic_error("union is not maximum: augmenting path from an unselected edge");
    return EdgeSet(search.reached);
  }

 private:
  static constexpr int kOutside = -2;
  static constexpr int kUnselected = -1;

  struct Search {
    bool found = false;
    EdgeId end = -1;
    int end_part = -1;
    std::vector<EdgeId> reached;
    std::vector<EdgeId> parent;
  };

  int part_count() const { return k_ + l_; }

  std::optional<std::vector<EdgeId>> probe(int part, EdgeId y) {
    if (part < l_) return forests_[static_cast<std::size_t>(part)].circuit(y);
    return rigid_[static_cast<std::size_t>(part - l_)].circuit(y);
  }
  void part_add(int part, EdgeId e) {
    if (part < l_)
      forests_[static_cast<std::size_t>(part)].add(e);
    else
      rigid_[static_cast<std::size_t>(part - l_)].add(e);
  }
  void part_remove(int part, EdgeId e) {
    if (part < l_)
      forests_[static_cast<std::size_t>(part)].remove(e);
    else
      rigid_[static_cast<std::size_t>(part - l_)].remove(e);
  }

  Search bfs(const std::vector<EdgeId>& sources) {
    Search s;
    s.parent.assign(part_of_.size(), -1);
    std::vector<char> seen(part_of_.size(), 0);
    for (EdgeId x : sources) {
      seen[static_cast<std::size_t>(x)] = 1;
      s.reached.push_back(x);
    }
    for (std::size_t qi = 0; qi < s.reached.size(); ++qi) {
      const EdgeId y = s.reached[qi];
      for (int part = 0; part < part_count(); ++part) {
        if (part == part_of_[static_cast<std::size_t>(y)]) continue;
        auto circuit = probe(part, y);
        if (!circuit) {
          s.found = true;
          s.end = y;
          s.end_part = part;
          return s;
        }
        for (EdgeId z : *circuit) {
          if (seen[static_cast<std::size_t>(z)]) continue;
          seen[static_cast<std::size_t>(z)] = 1;
          s.parent[static_cast<std::size_t>(z)] = y;
          s.reached.push_back(z);
        }
      }
    }
    return s;
  }

  void insert(EdgeId x) {
    const auto s = bfs({x});
    if (!s.found) return;
    // Path x = y0 -> y1 -> ... -> yt: each y_{i} takes y_{i+1}'s place and yt
    // joins end_part. Removals first so every intermediate set is a subset of
    // a final (independent) part.
    struct Move {
      EdgeId element;
      int from;
      int to;
    };
    std::vector<Move> moves;
    int to = s.end_part;
    for (EdgeId y = s.end; y >= 0; y = s.parent[static_cast<std::size_t>(y)]) {
      moves.push_back({y, part_of_[static_cast<std::size_t>(y)], to});
      to = part_of_[static_cast<std::size_t>(y)];
    }
    for (const Move& m : moves)
      if (m.from >= 0) part_remove(m.from, m.element);
    for (const Move& m : moves) {
      part_add(m.to, m.element);
      part_of_[static_cast<std::size_t>(m.element)] = m.to;
    }
    ++selected_;
  }

  const Graph* g_;
  int k_;
  int l_;
  EdgeSet ground_;
  std::vector<int> part_of_;
  std::vector<ForestPart> forests_;
  std::vector<RigidityPart> rigid_;
  std::size_t selected_ = 0;
};

inline UnionPartition union_max_partition(const Graph& g, int k, int l, const EdgeSet& ground) {
  return MatroidUnion(g, k, l, ground).partition();
}
inline UnionPartition union_max_partition(const Graph& g, int k, int l) {
  return union_max_partition(g, k, l, g.all_edges());
}

inline int union_rank(const Graph& g, int k, int l, const EdgeSet& ground) { return MatroidUnion(g, k, l, ground).rank(); }
inline int union_rank(const Graph& g, int k, int l) { return union_rank(g, k, l, g.all_edges()); }

/// k r_R(F) + l r_C(F) + |ground - F|, evaluated from scratch.
inline int union_rank_bound(const Graph& g, int k, int l, const EdgeSet& f, const EdgeSet& ground) {
  return k * rigidity_rank(g, f) + l * circuit_rank(g, f) + static_cast<int>(set_difference(ground, f).size());
}

/// Recomputes every field of w against g; returns the first mismatch or an
/// empty string when the witness is sound.
inline std::string check_witness(const Graph& g, const DeficiencyWitness& w, const EdgeSet& ground) {
  try {
    g.check_edges(w.f);
  } catch (const Error& e) {
    return e.what();
  }
  if (!std::includes(ground.begin(), ground.end(), w.f.begin(), w.f.end())) return "F is not inside the ground set";
  if (w.rigidity_rank_f != rigidity_rank(g, w.f)) return "rigidity rank of F";
  if (w.circuit_rank_f != circuit_rank(g, w.f)) return "circuit rank of F";
  if (w.outside != static_cast<int>(set_difference(ground, w.f).size())) return "|E - F|";
  if (w.achieved_rank != w.k * w.rigidity_rank_f + w.l * w.circuit_rank_f + w.outside) return "rank identity";
  if (w.full_rank != full_union_rank(g, w.k, w.l)) return "full rank";
  if (w.achieved_rank >= w.full_rank) return "not deficient";
  if (!(w.cover.target == w.f)) return "cover target differs from F";
  if (!w.f.empty()) {
    try {
      if (cover_value(g, w.cover) != w.rigidity_rank_f) return "cover is not tight";
    } catch (const Error& e) {
      return std::string("cover: ") + e.what();
    }
  } else if (!w.cover.sets.empty()) {
    return "cover of empty F must be empty";
  }
  return {};
}

/// Witness for rank deficiency of the union restricted to `ground`, or
/// nullopt when k rigidity bases and l spanning trees fit disjointly.
inline std::optional<DeficiencyWitness> deficiency_witness(const Graph& g, int k, int l, const EdgeSet& ground) {
  MatroidUnion engine(g, k, l, ground);
  const int full = full_union_rank(g, k, l);
  if (engine.rank() >= full) return std::nullopt;

  // The whole ground set is preferred when it also attains the minimum.
  const EdgeSet blocked = engine.blocked_set();
  std::optional<EdgeSet> chosen;
  for (const EdgeSet* candidate : {&ground, &blocked})
    if (union_rank_bound(g, k, l, *candidate, ground) == engine.rank()) {
      chosen = *candidate;
      break;
    }
  if (!chosen) throw std::logic_error("no candidate set attains the union rank");

  DeficiencyWitness w;
  w.k = k;
  w.l = l;
  w.f = *chosen;
  w.rigidity_rank_f = rigidity_rank(g, w.f);
  w.circuit_rank_f = circuit_rank(g, w.f);
  w.outside = static_cast<int>(set_difference(ground, w.f).size());
  w.achieved_rank = k * w.rigidity_rank_f + l * w.circuit_rank_f + w.outside;
  w.full_rank = full;
  w.cover = w.f.empty() ? Cover{{}, {}} : rigid_components(g, w.f);
  if (w.achieved_rank != engine.rank()) throw std::logic_error("witness does not reproduce the union rank");
  if (const auto bad = check_witness(g, w, ground); !bad.empty())
    throw std::logic_error("witness failed recomputation: " + bad);
  return w;
}

inline std::optional<DeficiencyWitness> deficiency_witness(const Graph& g, int k, int l) {
  return deficiency_witness(g, k, l, g.all_edges());
}

}  // namespace rigpack
