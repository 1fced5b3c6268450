#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rigpack/connectivity.hpp"
#include "rigpack/graph.hpp"
#include "rigpack/matroid_union.hpp"
#include "rigpack/rigidity.hpp"

namespace rigpack {

/// k rigidity bases and l spanning trees, pairwise edge-disjoint.
struct Packing {
  std::vector<EdgeSet> rigid_subgraphs;
  std::vector<EdgeSet> trees;
};

using PackResult = std::variant<Packing, DeficiencyWitness>;

/// Thrown by the derived constructions when the packing they start from
/// does not exist.
class PackingFailed : public Error {
 public:
  explicit PackingFailed(DeficiencyWitness w)
      : Error(Errc::packing_failed, "packing impossible: union rank " + std::to_string(w.achieved_rank) + " < " +
                                        std::to_string(w.full_rank)),
        witness_(std::move(w)) {}

  const DeficiencyWitness& witness() const noexcept { return witness_; }

 private:
  DeficiencyWitness witness_;
};

enum class PackingClause { ok, edge_id, part_count, disjointness, rigid_size, rigid_rank, spanning, acyclic };

inline const char* to_string(PackingClause c) {
  switch (c) {
    case PackingClause::ok: return "ok";
    case PackingClause::edge_id: return "edge-id";
    case PackingClause::part_count: return "part-count";
    case PackingClause::disjointness: return "disjointness";
    case PackingClause::rigid_size: return "rigid-size";
    case PackingClause::rigid_rank: return "rigid-rank";
    case PackingClause::spanning: return "spanning";
    case PackingClause::acyclic: return "acyclic";
  }
  return "?";
}

struct PackingCheck {
  PackingClause clause = PackingClause::ok;
  std::string detail;

  bool ok() const noexcept { return clause == PackingClause::ok; }
};

/// Re-derives every packing property from scratch and reports the first
/// clause that fails. Parts may only use edges of `ground`.
inline PackingCheck verify_packing(const Graph& g, const Packing& p, int k, int l, const EdgeSet& ground) {
  auto fail = [](PackingClause c, std::string d) { return PackingCheck{c, std::move(d)}; };
  if (static_cast<int>(p.rigid_subgraphs.size()) != k || static_cast<int>(p.trees.size()) != l)
    return fail(PackingClause::part_count, "expected " + std::to_string(k) + " rigid parts and " + std::to_string(l) +
                                               " trees");
  std::vector<const EdgeSet*> parts;
  for (const auto& s : p.rigid_subgraphs) parts.push_back(&s);
  for (const auto& s : p.trees) parts.push_back(&s);
  std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (EdgeId e : *parts[i]) {
      if (e < 0 || e >= g.edge_count() || !ground.contains(e))
        return fail(PackingClause::edge_id, "part " + std::to_string(i) + " uses edge " + std::to_string(e));
      if (owner[static_cast<std::size_t>(e)] >= 0)
        return fail(PackingClause::disjointness, "edge " + std::to_string(e) + " in parts " +
                                                     std::to_string(owner[static_cast<std::size_t>(e)]) + " and " +
                                                     std::to_string(i));
      owner[static_cast<std::size_t>(e)] = static_cast<int>(i);
    }
  const int n = g.vertex_count();
  for (std::size_t i = 0; i < p.rigid_subgraphs.size(); ++i) {
    const auto& f = p.rigid_subgraphs[i];
    if (static_cast<int>(f.size()) != 2 * n - 3)
      return fail(PackingClause::rigid_size, "rigid part " + std::to_string(i) + " has " + std::to_string(f.size()) +
                                                 " edges, expected " + std::to_string(2 * n - 3));
    if (const int r = rigidity_rank(g, f); r != 2 * n - 3)
      return fail(PackingClause::rigid_rank, "rigid part " + std::to_string(i) + " has rank " + std::to_string(r));
  }
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    const auto& f = p.trees[i];
    if (component_count(g, f) != 1)
      return fail(PackingClause::spanning, "tree " + std::to_string(i) + " does not connect all vertices");
    if (static_cast<int>(f.size()) != n - 1)
      return fail(PackingClause::acyclic, "tree " + std::to_string(i) + " has " + std::to_string(f.size()) + " edges");
  }
  return {};
}

inline PackingCheck verify_packing(const Graph& g, const Packing& p, int k, int l) {
  return verify_packing(g, p, k, l, g.all_edges());
}

/// k rigid spanning subgraphs plus l spanning trees, edge-disjoint, using only
/// edges of `ground`; or the witness that no such packing exists.
inline PackResult pack_within(const Graph& g, int k, int l, const EdgeSet& ground) {
  if (!g.is_simple()) throw Error(Errc::not_simple, "packing expects a simple graph");
  if (k < 0 || l < 0 || k + l < 1) throw Error(Errc::invalid_argument, "need k, l >= 0 and k + l >= 1");
  if (g.vertex_count() < 2) throw Error(Errc::too_few_vertices, "packing needs at least 2 vertices");
  MatroidUnion engine(g, k, l, ground);
  if (engine.rank() < full_union_rank(g, k, l)) {
    auto w = deficiency_witness(g, k, l, ground);
    if (!w) throw std::logic_error("union rank deficient but no witness produced");
    return std::move(*w);
  }
  auto parts = engine.partition();
  Packing p{std::move(parts.rigidity_parts), std::move(parts.forest_parts)};
  if (const auto check = verify_packing(g, p, k, l, ground); !check.ok())
    throw std::logic_error(std::string("packing failed verification: ") + to_string(check.clause) + ": " + check.detail);
  return p;
}

inline PackResult pack(const Graph& g, int k, int l) { return pack_within(g, k, l, g.all_edges()); }

/// Packing in (V, E - removed). Guaranteed for (6k+2l, 2k)-connected g when
/// |removed| <= 3k + l; larger removals are allowed but carry no guarantee.
inline PackResult pack_after_removal(const Graph& g, int k, int l, const EdgeSet& removed) {
  g.check_edges(removed);
  return pack_within(g, k, l, set_difference(g.all_edges(), removed));
}

inline bool is_two_connected(const Graph& g, const EdgeSet& f) {
  return vertex_connectivity_at_least(spanning_subgraph(g, f).graph, 2).ok;
}

struct TwoConnectedPacking {
  std::vector<EdgeSet> two_connected;
  std::vector<EdgeSet> connected;
};

/// k 2-connected and l connected edge-disjoint spanning subgraphs, taken from
/// a packing (rigidity bases on >= 3 vertices are 2-connected). Each
/// 2-connectivity claim is checked.
inline TwoConnectedPacking two_connected_packing(const Graph& g, int k, int l) {
  if (g.vertex_count() < 3) throw Error(Errc::too_few_vertices, "2-connected packing needs at least 3 vertices");
  auto result = pack(g, k, l);
  if (auto* w = std::get_if<DeficiencyWitness>(&result)) throw PackingFailed(std::move(*w));
  auto& p = std::get<Packing>(result);
  for (const auto& f : p.rigid_subgraphs)
    if (!is_two_connected(g, f)) throw std::logic_error("rigid spanning subgraph is not 2-connected");
  return {std::move(p.rigid_subgraphs), std::move(p.trees)};
}

struct KriesellSplit {
  EdgeSet tree;
  bool remainder_is_2connected = false;
};

/// A spanning tree T from pack(g, 1, 1) together with a fresh check that
/// G - E(T) (all of it, not just the rigid base) is 2-connected.
inline KriesellSplit kriesell_split(const Graph& g) {
  auto result = pack(g, 1, 1);
  if (auto* w = std::get_if<DeficiencyWitness>(&result)) throw PackingFailed(std::move(*w));
  KriesellSplit split;
  split.tree = std::get<Packing>(result).trees.front();
  split.remainder_is_2connected = is_two_connected(g, set_difference(g.all_edges(), split.tree));
  return split;
}

}  // namespace rigpack
