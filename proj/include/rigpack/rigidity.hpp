#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rigpack/graph.hpp"
#include "rigpack/pebble_game.hpp"

namespace rigpack {

/// A collection of vertex sets whose induced edge sets partition `target`.
/// Its value, sum of (2|X| - 3), bounds the rigidity rank of target from above.
struct Cover {
  std::vector<VertexSet> sets;
  EdgeSet target;
};

/// Runs the pebble game over f in edge-id order.
inline PebbleGame play(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  PebbleGame game(g);
  for (EdgeId e : f) game.try_insert(e);
  return game;
}

inline int rigidity_rank(const Graph& g, const EdgeSet& f) { return static_cast<int>(play(g, f).accepted_count()); }

inline bool rigidity_independent(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  PebbleGame game(g);
  for (EdgeId e : f)
    if (!game.try_insert(e)) return false;
  return true;
}

/// Throws Errc::invalid_cover unless every set has >= 2 valid vertices and
/// each target edge is induced by exactly one set.
inline void validate_cover(const Graph& g, const Cover& h) {
  g.check_edges(h.target);
  std::vector<std::vector<char>> masks;
  masks.reserve(h.sets.size());
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    const VertexSet& x = h.sets[i];
    for (VertexId v : x)
      if (v < 0 || v >= g.vertex_count())
        throw Error(Errc::invalid_cover, "cover set " + std::to_string(i) + " has vertex id out of range");
    auto m = vertex_mask(g, x);
    if (std::count(m.begin(), m.end(), 1) < 2)
      throw Error(Errc::invalid_cover, "cover set " + std::to_string(i) + " has fewer than 2 vertices");
    masks.push_back(std::move(m));
  }
  for (EdgeId e : h.target) {
    const auto u = static_cast<std::size_t>(g.edge(e).u), v = static_cast<std::size_t>(g.edge(e).v);
    int hits = 0;
    for (const auto& m : masks) hits += (m[u] && m[v]) ? 1 : 0;
    if (hits != 1)
      throw Error(Errc::invalid_cover, "edge " + std::to_string(e) + " is induced by " + std::to_string(hits) +
                                           " cover sets (must be exactly 1)");
  }
}

/// Sum over the cover of (2|X| - 3). Validates the cover first.
inline long long cover_value(const Graph& g, const Cover& h) {
  validate_cover(g, h);
  long long total = 0;
  for (const VertexSet& x : h.sets) total += 2 * static_cast<long long>(make_vertex_set(g, x).size()) - 3;
  return total;
}

/// The rigid components of G_F: maximal vertex sets X with
/// r(E(X) ∩ F) = 2|X| - 3. They partition F and their value equals the rank.
inline Cover rigid_components(const Graph& g, const EdgeSet& f) {
  if (f.empty()) throw Error(Errc::empty_set, "rigid components of an empty edge set");
  PebbleGame game = play(g, f);
  Cover cover{{}, f};
  std::vector<std::vector<char>> masks;
  for (EdgeId e : f) {
    const Edge& ed = g.edge(e);
    const bool covered = std::any_of(masks.begin(), masks.end(), [&](const std::vector<char>& m) {
      return m[static_cast<std::size_t>(ed.u)] && m[static_cast<std::size_t>(ed.v)];
    });
    if (covered) continue;
    auto comp = game.rigid_component(ed.u, ed.v);
    if (!comp) throw std::logic_error("edge of F is not spanned by the pebble game");
    masks.push_back(vertex_mask(g, *comp));
    cover.sets.push_back(std::move(*comp));
  }
  std::sort(cover.sets.begin(), cover.sets.end());
#ifndef NDEBUG
  long long value = 0;
  for (const auto& x : cover.sets) value += 2 * static_cast<long long>(x.size()) - 3;
  if (value != static_cast<long long>(game.accepted_count()))
    throw std::logic_error("rigid component cover is not tight");
#endif
  return cover;
}

/// r(E) = 2n - 3. Defined for simple graphs with at least two vertices.
inline bool is_rigid(const Graph& g) {
  if (g.vertex_count() < 2) throw Error(Errc::too_few_vertices, "rigidity needs at least 2 vertices");
  if (!g.is_simple()) throw Error(Errc::not_simple, "rigidity test expects a simple graph");
  return rigidity_rank(g, g.all_edges()) == 2 * g.vertex_count() - 3;
}

/// True iff h covers all of E and its value is below 2n - 3, which proves
/// that g is not rigid.
inline bool certify_nonrigid(const Graph& g, const Cover& h) {
  if (!(h.target == g.all_edges())) throw Error(Errc::invalid_cover, "cover target must be the full edge set");
  return cover_value(g, h) < 2LL * g.vertex_count() - 3;
}

}  // namespace rigpack
