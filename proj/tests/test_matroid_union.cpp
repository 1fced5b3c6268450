#include <gtest/gtest.h>

#include <random>

#include "rigpack/generators.hpp"
#include "rigpack/matroid_union.hpp"
#include "rigpack/oracles.hpp"
#include "support/reference.hpp"

using namespace rigpack;

namespace {

const std::pair<int, int> kPairs[] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};

void expect_valid_partition(const Graph& g, const UnionPartition& p, int k, int l) {
  ASSERT_EQ(static_cast<int>(p.rigidity_parts.size()), k);
  ASSERT_EQ(static_cast<int>(p.forest_parts.size()), l);
  std::vector<int> uses(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& f : p.rigidity_parts) {
    EXPECT_TRUE(rigidity_independent(g, f));
    for (EdgeId e : f) ++uses[static_cast<std::size_t>(e)];
  }
  for (const auto& f : p.forest_parts) {
    EXPECT_TRUE(circuit_independent(g, f));
    for (EdgeId e : f) ++uses[static_cast<std::size_t>(e)];
  }
  for (EdgeId e : p.unselected) ++uses[static_cast<std::size_t>(e)];
  for (int u : uses) EXPECT_EQ(u, 1);
}

}  // namespace

TEST(CircuitMatroid, Examples) {
  const Graph k4 = gen::complete(4);
  EXPECT_TRUE(circuit_independent(k4, EdgeSet{0, 1, 2}));  // star at 0
  const Graph t = gen::complete(3);
  EXPECT_FALSE(circuit_independent(t, t.all_edges()));
  EXPECT_TRUE(circuit_independent(t, {}));
  EXPECT_EQ(circuit_rank(k4, k4.all_edges()), 3);
  EXPECT_EQ(circuit_rank(k4, {}), 0);
  EXPECT_EQ(circuit_rank(gen::bowtie(), EdgeSet{0, 1, 2}), 2);
}

TEST(UnionPartitionTest, Examples) {
  const Graph t = gen::complete(3);
  const auto p = union_max_partition(t, 1, 0);
  EXPECT_EQ(p.rigidity_parts.front(), t.all_edges());
  EXPECT_EQ(p.selected_count(), 3U);

  const Graph k4 = gen::complete(4);
  const auto trees = union_max_partition(k4, 0, 2);
  EXPECT_EQ(trees.selected_count(), 6U);
  for (const auto& f : trees.forest_parts) EXPECT_EQ(f.size(), 3U);
  expect_valid_partition(k4, trees, 0, 2);

  const Graph c5 = gen::cycle(5);
  EXPECT_EQ(union_max_partition(c5, 0, 1).selected_count(), 4U);
}

TEST(UnionRank, Examples) {
  EXPECT_EQ(union_rank(gen::bowtie(), 1, 0), 6);
  EXPECT_EQ(union_rank(gen::complete(4), 1, 0), 5);
  EXPECT_EQ(union_rank(gen::complete(4), 1, 1), 6);
  EXPECT_THROW(union_rank(gen::complete(4), 0, 0), Error);
}

TEST(UnionRank, MatchesExhaustiveSearchOnSmallGraphs) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = ref::random_graph(n, 0.75, rng);
    if (g.edge_count() > 8) continue;
    for (auto [k, l] : kPairs) {
      EXPECT_EQ(union_rank(g, k, l), oracle::union_rank_bruteforce(g, k, l)) << serialize(g) << k << l;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(UnionRank, PartitionsAreIndependentAndDisjoint) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = ref::random_graph(9, 0.6, rng);
    for (auto [k, l] : kPairs) {
      const auto p = union_max_partition(g, k, l);
      expect_valid_partition(g, p, k, l);
      EXPECT_EQ(static_cast<int>(p.selected_count()), union_rank(g, k, l));
    }
  }
}

TEST(UnionRank, MonotoneInCopies) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = ref::random_graph(8, 0.6, rng);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        if (k + l == 0) continue;
        const int r = union_rank(g, k, l);
        EXPECT_LE(r, union_rank(g, k + 1, l));
        EXPECT_LE(r, union_rank(g, k, l + 1));
      }
  }
}

TEST(UnionRank, EverySubsetBoundsTheRank) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = ref::random_graph(8, 0.5, rng);
    const EdgeSet all = g.all_edges();
    for (auto [k, l] : kPairs) {
      const int r = union_rank(g, k, l);
      for (int s = 0; s < 50; ++s) EXPECT_LE(r, union_rank_bound(g, k, l, ref::random_subset(g, rng), all));
    }
  }
}

TEST(DeficiencyWitnessTest, Examples) {
  const Graph bow = gen::bowtie();
  const auto w = deficiency_witness(bow, 1, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->f, bow.all_edges());
  EXPECT_EQ(w->achieved_rank, 6);
  EXPECT_EQ(w->full_rank, 7);
  EXPECT_EQ(w->outside, 0);
  EXPECT_EQ(w->cover.sets, (std::vector<VertexSet>{{0, 1, 2}, {0, 3, 4}}));

  EXPECT_FALSE(deficiency_witness(gen::complete(7), 1, 0).has_value());

  const Graph c4 = gen::cycle(4);
  const auto wc = deficiency_witness(c4, 1, 0);
  ASSERT_TRUE(wc.has_value());
  EXPECT_EQ(wc->f, c4.all_edges());
  EXPECT_EQ(wc->achieved_rank, 4);
  EXPECT_EQ(wc->full_rank, 5);
}

TEST(DeficiencyWitnessTest, AttainsTheRankAndRechecks) {
  std::mt19937_64 rng(73);
  int deficient = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = ref::random_graph(9, 0.45, rng);
    for (auto [k, l] : kPairs) {
      const auto w = deficiency_witness(g, k, l);
      const int r = union_rank(g, k, l);
      if (!w) {
        EXPECT_EQ(r, full_union_rank(g, k, l));
        continue;
      }
      ++deficient;
      EXPECT_EQ(w->achieved_rank, r);
      EXPECT_EQ(union_rank_bound(g, k, l, w->f, g.all_edges()), r);
      EXPECT_EQ(check_witness(g, *w, g.all_edges()), "");
    }
  }
  EXPECT_GT(deficient, 50);
}

TEST(DeficiencyWitnessTest, TamperedWitnessIsRejected) {
  const Graph bow = gen::bowtie();
  auto w = *deficiency_witness(bow, 1, 0);
  auto bad = w;
  bad.rigidity_rank_f = 7;
  EXPECT_NE(check_witness(bow, bad, bow.all_edges()), "");
  bad = w;
  bad.cover.sets = {{0, 1, 2, 3, 4}};
  EXPECT_NE(check_witness(bow, bad, bow.all_edges()), "");
  bad = w;
  bad.f = EdgeSet{0, 1};
  bad.cover.target = bad.f;
  EXPECT_NE(check_witness(bow, bad, bow.all_edges()), "");
}

TEST(DeficiencyWitnessTest, RestrictedGround) {
  const Graph k4 = gen::complete(4);
  const EdgeSet ground{0, 1, 2, 3, 4};
  EXPECT_EQ(union_rank(k4, 0, 2, ground), 5);
  const auto w = deficiency_witness(k4, 0, 2, ground);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->achieved_rank, 5);
  EXPECT_EQ(check_witness(k4, *w, ground), "");
}
