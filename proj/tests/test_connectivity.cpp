#include <gtest/gtest.h>

#include <random>

#include "rigpack/connectivity.hpp"
#include "rigpack/generators.hpp"
#include "support/reference.hpp"

using namespace rigpack;

namespace {

/// Each pair of K_n joined by two opposite arcs.
Orientation bidirected(int n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      edges.push_back({u, v});
      edges.push_back({v, u});
    }
  return Orientation(Graph(n, std::move(edges)));
}

std::vector<std::pair<VertexId, VertexId>> arcs_of(const Orientation& d) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId e = 0; e < d.base.edge_count(); ++e) arcs.emplace_back(d.tail(e), d.head(e));
  return arcs;
}

}  // namespace

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(gen::complete(4)), 3);
  EXPECT_EQ(edge_connectivity(gen::cycle(5)), 2);
  EXPECT_EQ(edge_connectivity(gen::path(3)), 1);
  EXPECT_EQ(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})), 0);
  EXPECT_THROW(edge_connectivity(Graph(1)), Error);
}

TEST(EdgeConnectivity, LimitCapsTheSearch) {
  const Graph k8 = gen::complete(8);
  EXPECT_GE(edge_connectivity(k8, k8.all_edges(), {}, 3), 3);
  EXPECT_EQ(edge_connectivity(k8, k8.all_edges(), {}), 7);
}

TEST(EdgeConnectivity, MatchesEveryBipartitionUpToEightVertices) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = ref::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    EXPECT_EQ(edge_connectivity(g), ref::min_cut(g, g.all_edges(), ref::all_vertices(g))) << serialize(g);
  }
}

TEST(EdgeConnectivity, WithDeletedVertices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = ref::random_graph(7, 0.6, rng);
    const VertexId x[] = {static_cast<VertexId>(rng() % 7)};
    const std::uint32_t alive = ref::all_vertices(g) & ~(1U << x[0]);
    EXPECT_EQ(edge_connectivity(g, g.all_edges(), x), ref::min_cut(g, g.all_edges(), alive));
  }
}

TEST(VertexConnectivity, Examples) {
  EXPECT_TRUE(vertex_connectivity_at_least(gen::complete(4), 3).ok);
  const auto path = vertex_connectivity_at_least(gen::path(3), 2);
  EXPECT_FALSE(path.ok);
  EXPECT_EQ(path.separator, (VertexSet{1}));
  const auto k4 = vertex_connectivity_at_least(gen::complete(4), 4);
  EXPECT_FALSE(k4.ok);
  EXPECT_TRUE(k4.too_few_vertices);
}

TEST(PqConnectivity, CompleteGraphExamples) {
  EXPECT_TRUE(is_pq_connected(gen::complete(7), {6, 2}));
  const auto w = pq_violation(gen::complete(7), {7, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->deleted_vertices.empty());
  EXPECT_EQ(w->cut_value, 6);
  EXPECT_EQ(w->required, 7);
  EXPECT_EQ(w->cut_side.size() == 1 || w->cut_side.size() == 6, true);
}

TEST(PqConnectivity, KKMatchesEdgeConnectivity) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = ref::random_graph(n, 0.5, rng);
    const int lambda = edge_connectivity(g);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(is_pq_connected(g, {k, k}), lambda >= k);
  }
}

TEST(PqConnectivity, K1ImpliesKq) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = ref::random_graph(8, 0.7, rng);
    for (int k = 1; k <= 4; ++k) {
      if (!is_pq_connected(g, {k, 1})) continue;
      for (int q = 1; q <= 3; ++q) EXPECT_TRUE(is_pq_connected(g, {k, q}));
    }
  }
}

TEST(PqConnectivity, WitnessesRevalidate) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = ref::random_graph(7, 0.6, rng);
    const ConnectivitySpec spec{static_cast<int>(2 + rng() % 5), static_cast<int>(1 + rng() % 2)};
    const auto w = pq_violation(g, spec);
    EXPECT_EQ(w.has_value(), !ref::pq_connected(g, spec.p, spec.q)) << serialize(g) << spec.p << "," << spec.q;
    if (!w) continue;
    EXPECT_EQ(cut_degree(g, w->deleted_vertices, w->cut_side), w->cut_value);
    EXPECT_LT(w->cut_value, spec.p - spec.q * static_cast<int>(w->deleted_vertices.size()));
  }
}

TEST(PqConnectivity, ThreadCountDoesNotChangeTheWitness) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = ref::random_graph(16, 0.5, rng);
    const ConnectivitySpec spec{9, 2};
    PqOptions one, many;
    many.threads = 4;
    const auto a = pq_violation(g, spec, one);
    const auto b = pq_violation(g, spec, many);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->deleted_vertices, b->deleted_vertices);
      EXPECT_EQ(a->cut_side, b->cut_side);
    }
  }
}

TEST(PqConnectivity, RefusesHugeEnumerations) {
  PqOptions opts;
  opts.max_subsets = 100;
  EXPECT_THROW(pq_violation(gen::complete(30), {20, 1}, opts), Error);
  EXPECT_THROW(pq_violation(gen::complete(3), {0, 1}), Error);
}

TEST(ArcConnectivity, Triangles) {
  const Orientation tri(gen::cycle(3));
  EXPECT_TRUE(is_k_arc_connected(tri, 1));
  EXPECT_FALSE(is_k_arc_connected(tri, 2));
  EXPECT_TRUE(is_k_arc_connected(bidirected(3), 2));
  EXPECT_FALSE(is_vertex_robust_arc_connected(tri, 1));
  EXPECT_TRUE(is_vertex_robust_arc_connected(bidirected(3), 1));
  EXPECT_TRUE(is_vertex_robust_arc_connected(bidirected(4), 2));
}

TEST(ArcConnectivity, CutWitnessHasSmallOutDegree) {
  const Orientation tri(gen::cycle(3));
  const auto cut = arc_connectivity_violation(tri, 2);
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->out_degree, 1);
  const auto bad = robustness_violation(tri, 1);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->vertex, 0);
  EXPECT_EQ(bad->cut.out_degree, 0);
}

TEST(ArcConnectivity, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = ref::random_graph(n, 0.8, rng);
    Orientation d(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng() & 1U) d.flip(e);
    const auto arcs = arcs_of(d);
    const std::uint32_t full = ref::all_vertices(g);
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(is_k_arc_connected(d, k), ref::arc_connected(n, arcs, k, full));
      bool robust = true;
      for (VertexId v = 0; v < n; ++v) robust = robust && ref::arc_connected(n, arcs, k, full & ~(1U << v));
      EXPECT_EQ(is_vertex_robust_arc_connected(d, k), robust);
    }
  }
}
