#include <gtest/gtest.h>

#include <random>

#include "rigpack/generators.hpp"
#include "rigpack/orientation.hpp"
#include "support/reference.hpp"

using namespace rigpack;

namespace {

bool balanced(const Orientation& d) {
  for (VertexId v = 0; v < d.base.vertex_count(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return true;
}

/// Random spanning tree of K_n by attaching each vertex to an earlier one.
EdgeSet random_tree(const Graph& kn, std::mt19937_64& rng) {
  std::vector<EdgeId> ids;
  const int n = kn.vertex_count();
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(v));
    for (EdgeId e : kn.incident(v))
      if (kn.edge(e).other(v) == u) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

/// Two C_m(1,2) blobs joined by two edges, plus a hub (the last vertex) on
/// all four bridge ends. Removing the hub leaves a 2-edge cut, so many
/// balanced orientations are not vertex-robust.
Graph hub_and_blobs(int m) {
  std::vector<Edge> e;
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < m; ++i) {
      e.push_back({b * m + i, b * m + (i + 1) % m});
      e.push_back({b * m + i, b * m + (i + 2) % m});
    }
  e.push_back({0, m});
  e.push_back({1, m + 1});
  for (VertexId x : {0, 1, m, m + 1}) e.push_back({x, 2 * m});
  return Graph(2 * m + 1, std::move(e));
}

int out_without(const Orientation& d, VertexId v, const VertexSet& side) {
  std::vector<char> in(static_cast<std::size_t>(d.base.vertex_count()), 0);
  for (VertexId x : side) in[static_cast<std::size_t>(x)] = 1;
  int out = 0;
  for (EdgeId e = 0; e < d.base.edge_count(); ++e) {
    const VertexId t = d.tail(e), h = d.head(e);
    if (t != v && h != v && in[static_cast<std::size_t>(t)] && !in[static_cast<std::size_t>(h)]) ++out;
  }
  return out;
}

bool robust_by_brute_force(const Orientation& d, int k) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId e = 0; e < d.base.edge_count(); ++e) arcs.emplace_back(d.tail(e), d.head(e));
  const int n = d.base.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (!ref::arc_connected(n, arcs, k, ((1U << n) - 1) & ~(1U << v))) return false;
  return true;
}

}  // namespace

TEST(OddVertices, Examples) {
  EXPECT_TRUE(odd_vertices(gen::cycle(4), gen::cycle(4).all_edges()).empty());
  EXPECT_EQ(odd_vertices(gen::path(3), gen::path(3).all_edges()), (VertexSet{0, 2}));
  EXPECT_EQ(odd_vertices(gen::complete(4), gen::complete(4).all_edges()), (VertexSet{0, 1, 2, 3}));
}

TEST(TreeTJoin, Examples) {
  const Graph p = gen::path(3);
  EXPECT_EQ(tree_t_join(p, {p.all_edges(), {0, 2}}), p.all_edges());
  EXPECT_TRUE(tree_t_join(p, {p.all_edges(), {}}).empty());
  const Graph s = gen::star(4);
  EXPECT_EQ(tree_t_join(s, {s.all_edges(), {1, 2}}), (EdgeSet{0, 1}));
}

TEST(TreeTJoin, Errors) {
  const Graph p = gen::path(3);
  EXPECT_THROW(tree_t_join(p, {p.all_edges(), {0}}), Error);
  EXPECT_THROW(tree_t_join(p, {EdgeSet{0}, {0, 1}}), Error);
  const Graph t = gen::complete(3);
  EXPECT_THROW(tree_t_join(t, {t.all_edges(), {0, 1}}), Error);
}

TEST(TreeTJoin, OddVerticesAreExactlyTheTargets) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph kn = gen::complete(n);
    const EdgeSet tree = random_tree(kn, rng);
    VertexSet targets;
    for (VertexId v = 0; v < n; ++v)
      if (rng() & 1U) targets.push_back(v);
    if (targets.size() % 2) targets.pop_back();
    const EdgeSet join = tree_t_join(kn, {tree, targets});
    EXPECT_TRUE(std::includes(tree.begin(), tree.end(), join.begin(), join.end()));
    EXPECT_EQ(odd_vertices(kn, join), targets);
  }
}

TEST(EulerianOrientation, Examples) {
  const Graph c4 = gen::cycle(4);
  const Orientation d = eulerian_orientation(c4, c4.all_edges());
  EXPECT_TRUE(balanced(d));
  EXPECT_TRUE(is_k_arc_connected(d, 1));

  const Graph bow = gen::bowtie();
  EXPECT_TRUE(balanced(eulerian_orientation(bow, bow.all_edges())));

  const Graph e(2, {{0, 1}});
  try {
    eulerian_orientation(e, e.all_edges());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::odd_degree);
  }
  const Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  try {
    eulerian_orientation(two, two.all_edges());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::disconnected);
  }
}

TEST(EulerianOrientation, SubsetUsesRenumberedIds) {
  const Graph k5 = gen::complete(5);
  // Two triangles through vertex 0: 0-1-2 and 0-3-4.
  const EdgeSet h{0, 1, 4, 2, 3, 9};
  const Orientation d = eulerian_orientation(k5, h);
  ASSERT_EQ(d.base.edge_count(), 6);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(d.base.edge(static_cast<EdgeId>(i)), k5.edge(h[i]));
  EXPECT_TRUE(balanced(d));
}

TEST(EulerianOrientation, CycleFlipsKeepBalance) {
  std::mt19937_64 rng(97);
  const Graph k7 = gen::complete(7);
  Orientation d = eulerian_orientation(k7, k7.all_edges());
  for (int step = 0; step < 200; ++step) {
    const auto cycle = detail::random_cycle(d, rng);
    ASSERT_TRUE(cycle.has_value());
    for (EdgeId e : *cycle) d.flip(e);
    ASSERT_TRUE(balanced(d));
  }
}

TEST(BuildRobustEulerian, K5FailsAtPacking) {
  const auto r = build_robust_eulerian(gen::complete(5), 1);
  ASSERT_TRUE(std::holds_alternative<DeficiencyWitness>(r));
  EXPECT_EQ(std::get<DeficiencyWitness>(r).achieved_rank, 10);
}

TEST(BuildRobustEulerian, K13) {
  const Graph k13 = gen::complete(13);
  const auto r = build_robust_eulerian(k13, 1);
  ASSERT_TRUE(std::holds_alternative<EdgeSet>(r));
  const EdgeSet& h = std::get<EdgeSet>(r);
  EXPECT_TRUE(odd_vertices(k13, h).empty());
  for (VertexId v = 0; v < 13; ++v) {
    const VertexId del[] = {v};
    EXPECT_GE(edge_connectivity(k13, h, del), 2);
  }
}

TEST(RobustOrient, K5) {
  const Graph k5 = gen::complete(5);
  const auto r = robust_orient(k5, k5.all_edges(), 1);
  ASSERT_TRUE(std::holds_alternative<RobustOrientation>(r));
  const auto& d = std::get<RobustOrientation>(r).orientation;
  EXPECT_TRUE(balanced(d));
  EXPECT_TRUE(is_vertex_robust_arc_connected(d, 1));
}

TEST(RobustOrient, LocalSearchOnK7) {
  const Graph k7 = gen::complete(7);
  SearchBudget budget;
  budget.exhaustive_edges = 0;
  budget.max_seconds = 60;
  const auto r = robust_orient(k7, k7.all_edges(), 1, budget);
  ASSERT_TRUE(std::holds_alternative<RobustOrientation>(r));
  const auto& ro = std::get<RobustOrientation>(r);
  EXPECT_FALSE(ro.stats.exhaustive);
  EXPECT_TRUE(balanced(ro.orientation));
  EXPECT_TRUE(is_vertex_robust_arc_connected(ro.orientation, 1));
}

TEST(RobustOrient, SameSeedSameOrientation) {
  const Graph k9 = gen::complete(9);
  SearchBudget budget;
  budget.exhaustive_edges = 0;
  budget.seed = 3;
  const auto a = robust_orient(k9, k9.all_edges(), 1, budget);
  const auto b = robust_orient(k9, k9.all_edges(), 1, budget);
  ASSERT_TRUE(std::holds_alternative<RobustOrientation>(a));
  ASSERT_TRUE(std::holds_alternative<RobustOrientation>(b));
  EXPECT_EQ(std::get<RobustOrientation>(a).orientation.reversed, std::get<RobustOrientation>(b).orientation.reversed);
}

TEST(RobustOrient, PreconditionIsDistinctFromTimeout) {
  const Graph c4 = gen::cycle(4);
  try {
    robust_orient(c4, c4.all_edges(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition);
  }
  const Graph k5 = gen::complete(5);
  SearchBudget none;
  none.exhaustive_edges = 0;
  none.max_flips = 0;
  const auto r = robust_orient(k5, k5.all_edges(), 1, none);
  // A trail orientation may already be robust; otherwise zero flips means timeout.
  if (const auto* t = std::get_if<SearchTimeout>(&r)) {
    EXPECT_EQ(t->stats.flips, 0);
  }
}

TEST(OrientPipeline, PathFailsAtPacking) {
  const auto r = orient_pipeline(gen::path(5), 1);
  ASSERT_TRUE(std::holds_alternative<PipelineFailure>(r));
  EXPECT_EQ(std::get<PipelineFailure>(r).stage, PipelineFailure::Stage::packing);
}

TEST(OrientPipeline, K13OrientsEveryEdge) {
  const Graph k13 = gen::complete(13);
  const auto r = orient_pipeline(k13, 1);
  ASSERT_TRUE(std::holds_alternative<PipelineSuccess>(r));
  const auto& ok = std::get<PipelineSuccess>(r);
  EXPECT_EQ(ok.orientation.base.edge_count(), k13.edge_count());
  EXPECT_TRUE(is_vertex_robust_arc_connected(ok.orientation, 1));
  for (EdgeId e = 0; e < k13.edge_count(); ++e)
    if (!ok.eulerian.contains(e)) {
      EXPECT_EQ(ok.orientation.tail(e), std::min(k13.edge(e).u, k13.edge(e).v));
    }
}

TEST(RobustnessCheck, AgreesWithBruteForce) {
  std::mt19937_64 rng(101);
  const Graph g = hub_and_blobs(5);
  Orientation d = eulerian_orientation(g, g.all_edges());
  int violated = 0;
  for (int step = 0; step < 300; ++step) {
    const auto step_cycle = detail::random_cycle(d, rng);
    ASSERT_TRUE(step_cycle.has_value());
    for (EdgeId e : *step_cycle) d.flip(e);
    const auto bad = robustness_violation(d, 1);
    ASSERT_EQ(!bad.has_value(), robust_by_brute_force(d, 1));
    if (bad) {
      ++violated;
      EXPECT_EQ(out_without(d, bad->vertex, bad->cut.side), bad->cut.out_degree);
      EXPECT_LT(bad->cut.out_degree, 1);
    }
  }
  EXPECT_GT(violated, 0);
}

TEST(RepairCycle, RaisesTheViolatedCutByOne) {
  std::mt19937_64 rng(103);
  const Graph g = hub_and_blobs(6);
  Orientation d = eulerian_orientation(g, g.all_edges());
  int repaired = 0;
  for (int step = 0; step < 300; ++step) {
    const auto step_cycle = detail::random_cycle(d, rng);
    ASSERT_TRUE(step_cycle.has_value());
    for (EdgeId e : *step_cycle) d.flip(e);
    const auto bad = robustness_violation(d, 1);
    if (!bad) continue;
    const auto cycle = detail::repair_cycle(d, *bad, rng);
    ASSERT_TRUE(cycle.has_value());
    Orientation after = d;
    for (EdgeId e : *cycle) after.flip(e);
    EXPECT_TRUE(balanced(after));
    EXPECT_EQ(out_without(after, bad->vertex, bad->cut.side), bad->cut.out_degree + 1);
    ++repaired;
  }
  EXPECT_GT(repaired, 0);
}

TEST(RobustOrient, LocalSearchRepairsHubGraph) {
  for (int m : {5, 8, 12}) {
    const Graph g = hub_and_blobs(m);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      SearchBudget budget;
      budget.exhaustive_edges = 0;
      budget.seed = seed;
      budget.max_seconds = 60;
      const auto r = robust_orient(g, g.all_edges(), 1, budget);
      ASSERT_TRUE(std::holds_alternative<RobustOrientation>(r)) << m << " " << seed;
      const auto& d = std::get<RobustOrientation>(r).orientation;
      EXPECT_TRUE(balanced(d));
      if (g.vertex_count() <= 20) {
        EXPECT_TRUE(robust_by_brute_force(d, 1));
      }
      EXPECT_TRUE(is_vertex_robust_arc_connected(d, 1));
    }
  }
}

TEST(RobustOrient, ExhaustiveAgreesWithBruteForce) {
  const Graph g = hub_and_blobs(3);
  ASSERT_LE(g.edge_count(), 20);
  const auto r = robust_orient(g, g.all_edges(), 1);
  ASSERT_TRUE(std::holds_alternative<RobustOrientation>(r));
  const auto& ro = std::get<RobustOrientation>(r);
  EXPECT_TRUE(ro.stats.exhaustive);
  EXPECT_TRUE(robust_by_brute_force(ro.orientation, 1));
}
