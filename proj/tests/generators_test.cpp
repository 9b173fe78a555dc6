#include "coopcolor/generators.hpp"

#include <gtest/gtest.h>

#include <random>

#include "coopcolor/exact_solver.hpp"
#include "oracles.hpp"

namespace coopcolor {
namespace {

bool all_acyclic(const GraphSystem& s) {
  for (GraphIndex j = 0; j < s.graph_count(); ++j) {
    try {
      root_forest(s, j);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

bool all_connected(const GraphSystem& s) {
  for (GraphIndex j = 0; j < s.graph_count(); ++j)
    if (root_forest(s, j).roots.size() != 1) return false;
  return true;
}

TEST(BaseT2, Shape) {
  const GraphSystem s = base_t2();
  EXPECT_EQ(s.vertex_count(), 4u);
  EXPECT_EQ(s.graph(0).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(s.graph(1).edges(), (std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}}));
  EXPECT_EQ(max_degree(s), 2u);
  EXPECT_TRUE(all_acyclic(s));
  EXPECT_FALSE(testing::brute_force_colorable(4, testing::edge_lists(s)));
}

TEST(QConstruction, LiftsT2) {
  const GraphSystem q = q_construction(base_t2());
  EXPECT_EQ(q.vertex_count(), 20u);
  EXPECT_EQ(q.graph_count(), 3u);
  EXPECT_EQ(max_degree(q), 4u);
  EXPECT_TRUE(all_acyclic(q));
  // (z,u) at 16+u is joined to block u.
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(q.graph(2).has_edge(16 + u, 4 * u + v));
  // every block carries a copy of each base path
  for (Vertex b = 0; b <= 4; ++b) {
    EXPECT_TRUE(q.graph(0).has_edge(4 * b + 2, 4 * b + 3));
    EXPECT_TRUE(q.graph(1).has_edge(4 * b + 1, 4 * b + 3));
  }

  const GraphSystem qq = q_construction(q);
  EXPECT_EQ(qq.vertex_count(), 420u);
  EXPECT_LE(qq.vertex_count(), 1u << 11);
  EXPECT_EQ(max_degree(qq), 20u);
}

TEST(QConstruction, RejectsCyclicInput) {
  try {
    q_construction(build_system(3, {{{0, 1}, {1, 2}, {0, 2}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAForest);
  }
}

TEST(QConstruction, SizeDegreeAndAcyclicityOnRandomForests) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 9, m = 1 + rng() % 3;
    std::vector<std::vector<Edge>> lists;
    for (std::size_t j = 0; j < m; ++j) lists.push_back(testing::random_forest_edges(rng, n, 0.7));
    const GraphSystem s = build_system(n, lists);
    const GraphSystem q = q_construction(s);
    EXPECT_EQ(q.vertex_count(), n * n + n);
    EXPECT_EQ(q.graph_count(), m + 1);
    EXPECT_EQ(max_degree(q), n);
    EXPECT_TRUE(all_acyclic(q));
  }
}

TEST(QConstruction, PropagatesUncolorability) {
  // Every uncolorable random 2-forest system on 4 vertices lifts to an
  // uncolorable 3-forest system.
  std::mt19937_64 rng(22);
  int lifted = 0;
  for (int trial = 0; trial < 400 && lifted < 6; ++trial) {
    std::vector<std::vector<Edge>> lists{testing::random_forest_edges(rng, 4, 1.0),
                                         testing::random_forest_edges(rng, 4, 1.0)};
    const GraphSystem s = build_system(4, lists);
    if (testing::brute_force_colorable(4, lists)) continue;
    ++lifted;
    EXPECT_EQ(decide_colorable(q_construction(s)).outcome, Outcome::Uncolorable);
  }
  EXPECT_GT(lifted, 0);
}

TEST(TreeCounterexample, Levels) {
  const QLevel two = tree_counterexample(2, false);
  EXPECT_EQ(two.system, base_t2());

  const QLevel three = tree_counterexample(3, false);
  EXPECT_EQ(three.system.vertex_count(), 20u);
  EXPECT_EQ(three.system.graph_count(), 3u);
  EXPECT_EQ(max_degree(three.system), 4u);
  EXPECT_EQ(three.label(0), "(0,0)");
  EXPECT_EQ(three.label(7), "(1,3)");
  EXPECT_EQ(three.label(18), "(z,2)");

  const QLevel four = tree_counterexample(4, false);
  EXPECT_EQ(four.sizes, (std::vector<std::size_t>{4, 20, 420}));
  EXPECT_EQ(four.label(419), "(z,(z,3))");
  EXPECT_EQ(four.label(21), "((0,1),(0,1))");
}

TEST(TreeCounterexample, ConnectedVariantStaysUncolorable) {
  const QLevel loose = tree_counterexample(3, false);
  const QLevel tight = tree_counterexample(3, true);
  EXPECT_TRUE(all_acyclic(tight.system));
  EXPECT_TRUE(all_connected(tight.system));
  EXPECT_EQ(max_degree(tight.system), max_degree(loose.system));
  EXPECT_EQ(decide_colorable(loose.system).outcome, Outcome::Uncolorable);
  EXPECT_EQ(decide_colorable(tight.system).outcome, Outcome::Uncolorable);
}

TEST(ConnectForests, PathForestKeepsDegreeTwo) {
  // Three path components: the middle one must be linked through both ends.
  const GraphSystem s = build_system(7, {{{0, 1}, {2, 3}, {3, 4}, {5, 6}}});
  const GraphSystem t = connect_forests(s);
  EXPECT_TRUE(all_connected(t));
  EXPECT_TRUE(all_acyclic(t));
  EXPECT_EQ(max_degree(t), 2u);
}

TEST(Hypercube, SmallCases) {
  const GraphSystem one = hypercube_counterexample(1);
  EXPECT_EQ(one.vertex_count(), 2u);
  EXPECT_EQ(one.graph(0).edges().size(), 1u);
  EXPECT_FALSE(testing::brute_force_colorable(2, testing::edge_lists(one)));

  const GraphSystem two = hypercube_counterexample(2);
  EXPECT_EQ(two.vertex_count(), 4u);
  EXPECT_EQ(max_degree(two), 2u);
  for (GraphIndex j = 0; j < 2; ++j) EXPECT_EQ(two.graph(j).edges().size(), 4u);

  const GraphSystem three = hypercube_counterexample(3);
  EXPECT_EQ(max_degree(three), 4u);
  EXPECT_FALSE(testing::brute_force_colorable(8, testing::edge_lists(three)));
}

TEST(Hypercube, StructureAndAnnotation) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const GraphSystem s = hypercube_counterexample(m);
    for (GraphIndex j = 0; j < m; ++j) {
      EXPECT_EQ(s.graph(j).edges().size(), std::size_t{1} << (2 * (m - 1)));
      for (Vertex v : *s.annotation(j).left) EXPECT_EQ((v >> j) & 1u, 0u);
      EXPECT_EQ(bipartition(s, j).left, *s.annotation(j).left);
    }
  }
}

TEST(RandomForestSystem, DegreeCapAndTrees) {
  const GraphSystem s = random_forest_system(1000, 19, 2, 7);
  EXPECT_EQ(s.graph_count(), 19u);
  EXPECT_LE(max_degree(s), 2u);
  for (GraphIndex j = 0; j < 19; ++j) {
    EXPECT_EQ(s.graph(j).edges().size(), 999u);
    EXPECT_EQ(root_forest(s, j).roots.size(), 1u);
  }
  const GraphSystem wide = random_forest_system(500, 3, 5, 9);
  EXPECT_LE(max_degree(wide), 5u);
  EXPECT_TRUE(all_connected(wide));
}

TEST(RandomForestSystem, EdgeCases) {
  const GraphSystem single = random_forest_system(1, 3, 2, 1);
  for (const Graph& g : single.graphs()) EXPECT_TRUE(g.edges().empty());
  EXPECT_EQ(random_forest_system(2, 1, 1, 1).graph(0).edges().size(), 1u);
  try {
    random_forest_system(3, 1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleDegree);
  }
}

TEST(RandomForestSystem, Deterministic) {
  EXPECT_EQ(random_forest_system(200, 5, 3, 42), random_forest_system(200, 5, 3, 42));
  EXPECT_NE(random_forest_system(200, 5, 3, 42), random_forest_system(200, 5, 3, 43));
  // per-graph streams: graph j does not depend on how many graphs precede it
  EXPECT_EQ(random_forest_system(50, 2, 3, 5).graph(1).edges(),
            random_forest_system(50, 4, 3, 5).graph(1).edges());
}

TEST(RandomBipartiteSystem, DegreeAndAnnotations) {
  const GraphSystem s = random_bipartite_system(200, 16, 8, 1);
  EXPECT_LE(max_degree(s), 8u);
  for (GraphIndex j = 0; j < 16; ++j) {
    const auto& left = *s.annotation(j).left;
    EXPECT_EQ(left.size(), 100u);
    std::vector<std::uint8_t> is_left(200, 0);
    for (Vertex v : left) is_left[v] = 1;
    for (const Edge& e : s.graph(j).edges()) EXPECT_NE(is_left[e.u], is_left[e.v]);
    EXPECT_GT(s.graph(j).edges().size(), 700u);  // close to saturation
  }
}

TEST(RandomBipartiteSystem, EdgeCases) {
  const GraphSystem s = random_bipartite_system(30, 4, 0, 3);
  for (const Graph& g : s.graphs()) EXPECT_TRUE(g.edges().empty());
  EXPECT_EQ(random_bipartite_system(100, 4, 6, 3), random_bipartite_system(100, 4, 6, 3));
  EXPECT_NE(random_bipartite_system(100, 4, 6, 3), random_bipartite_system(100, 4, 6, 4));
}

TEST(GeneratorProperties, AddingEdgesKeepsUncolorable) {
  std::mt19937_64 rng(23);
  const GraphSystem base = hypercube_counterexample(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto lists = testing::edge_lists(base);
    const GraphIndex j = static_cast<GraphIndex>(rng() % 2);
    const Vertex u = static_cast<Vertex>(rng() % 4), v = static_cast<Vertex>(rng() % 4);
    if (u == v || base.graph(j).has_edge(u, v)) continue;
    lists[j].push_back({u, v});
    EXPECT_EQ(decide_colorable(build_system(4, lists)).outcome, Outcome::Uncolorable);
  }
}

}  // namespace
}  // namespace coopcolor
