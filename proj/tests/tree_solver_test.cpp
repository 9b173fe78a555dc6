#include "coopcolor/tree_solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coopcolor/generators.hpp"
#include "oracles.hpp"

namespace coopcolor {
namespace {

MarkMatrix marks_from(std::size_t m, std::size_t n, std::initializer_list<std::pair<GraphIndex, Vertex>> on) {
  MarkMatrix mk(m, n);
  for (auto [i, v] : on) mk.set(i, v, true);
  return mk;
}

TEST(SampleMarks, DeterministicAndShaped) {
  const GraphSystem s = random_forest_system(50, 4, 3, 1);
  const MarkMatrix a = sample_marks(s, 99), b = sample_marks(s, 99);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_marks(s, 100));
  EXPECT_EQ(a.graph_count(), 4u);
  EXPECT_EQ(a.vertex_count(), 50u);
  const MarkMatrix empty = sample_marks(build_system(0, {{}}), 1);
  EXPECT_EQ(empty.vertex_count(), 0u);
}

TEST(SampleMarks, FairBits) {
  const GraphSystem s = random_forest_system(1000, 100, 3, 2);  // 10^5 bits
  const MarkMatrix mk = sample_marks(s, 5);
  std::size_t ones = 0;
  for (GraphIndex i = 0; i < 100; ++i)
    for (auto bit : mk.row(i)) ones += bit;
  EXPECT_NEAR(static_cast<double>(ones) / 1e5, 0.5, 0.01);
}

TEST(DeriveR, PathExample) {
  const GraphSystem path = build_system(4, {{{0, 1}, {1, 2}, {2, 3}}});
  EXPECT_EQ(derive_r(path, 0, marks_from(1, 4, {{0, 0}, {0, 1}, {0, 3}})), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(derive_r(path, 0, MarkMatrix(1, 4)).empty());
  EXPECT_EQ(derive_r(path, 0, marks_from(1, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}})),
            std::vector<Vertex>{0});
}

TEST(DeriveR, MembershipLawByEnumeration) {
  // root: one of the two values of its own bit puts it in R
  // non-root: exactly one of the four (own bit, parent bit) pairs does
  const GraphSystem edge = build_system(2, {{{0, 1}}});
  const RootedForest f = root_forest(edge, 0);
  int root_hits = 0, child_hits = 0;
  for (int bits = 0; bits < 4; ++bits) {
    MarkMatrix mk(1, 2);
    mk.set(0, 0, bits & 1);
    mk.set(0, 1, bits & 2);
    const auto r = derive_r(f, 0, mk);
    root_hits += std::count(r.begin(), r.end(), 0u);
    child_hits += std::count(r.begin(), r.end(), 1u);
  }
  EXPECT_EQ(root_hits, 2);   // 2 of 4 -> 1/2
  EXPECT_EQ(child_hits, 1);  // 1 of 4 -> 1/4
}

TEST(DeriveR, AlwaysIndependent) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto edges = testing::random_forest_edges(rng, n, 0.85);
    const GraphSystem s = build_system(n, {edges});
    const MarkMatrix mk = sample_marks(s, rng());
    EXPECT_TRUE(testing::pairwise_independent(edges, derive_r(s, 0, mk)));
  }
}

TEST(DeriveR, UsesAnnotatedRoots) {
  GraphSpec path{{{0, 1}, {1, 2}}, {}};
  path.annotation.roots = std::vector<Vertex>{2};
  const GraphSystem s(3, {path});
  // marks {1}: with root 2, vertex 1's parent is 2 (unmarked) so 1 is in R
  EXPECT_EQ(derive_r(s, 0, marks_from(1, 3, {{0, 1}})), std::vector<Vertex>{1});
}

TEST(SolveTrees, RandomPathsAtThreshold) {
  const GraphSystem s = random_forest_system(1000, 19, 2, 7);
  const LllResult r = solve_trees(s, 7);
  ASSERT_EQ(r.report.outcome, Outcome::Colorable);
  EXPECT_TRUE(verify_coloring(s, *r.report.coloring).valid);
  EXPECT_EQ(r.stats.rounds, r.stats.resampled_events + 1);
  EXPECT_LE(r.stats.rounds, 1000u * 1000u);
}

TEST(SolveTrees, SingleVertex) {
  const GraphSystem s = build_system(1, {{}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LllResult r = solve_trees(s, seed);
    ASSERT_EQ(r.report.outcome, Outcome::Colorable);
    EXPECT_EQ(r.report.coloring->assignment(), std::vector<GraphIndex>{0});
  }
}

TEST(SolveTrees, IsolatedVerticesAreRoots) {
  const GraphSystem s = build_system(30, {{}, {}, {}});
  const LllResult r = solve_trees(s, 3);
  ASSERT_EQ(r.report.outcome, Outcome::Colorable);
  EXPECT_TRUE(verify_coloring(s, *r.report.coloring).valid);
}

TEST(SolveTrees, UncolorableInputExhaustsBudget) {
  const LllResult r = solve_trees(base_t2(), 1, 500);
  EXPECT_EQ(r.report.outcome, Outcome::BudgetExceeded);
  EXPECT_EQ(r.stats.rounds, 500u);
  EXPECT_FALSE(r.report.coloring.has_value());
}

TEST(SolveTrees, RejectsCycles) {
  try {
    solve_trees(build_system(3, {{{0, 1}, {1, 2}, {0, 2}}}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAForest);
  }
}

TEST(SolveTrees, Deterministic) {
  const GraphSystem s = random_forest_system(300, 12, 3, 4);
  const LllResult a = solve_trees(s, 8), b = solve_trees(s, 8);
  EXPECT_EQ(a.report.outcome, b.report.outcome);
  EXPECT_EQ(a.report.coloring, b.report.coloring);
  EXPECT_EQ(a.stats.rounds, b.stats.rounds);
  EXPECT_EQ(a.stats.per_vertex, b.stats.per_vertex);
}

TEST(SolveTrees, FirstRoundMatchesSampledMarks) {
  // When no resampling happens the coloring is read directly off sample_marks.
  const GraphSystem s = random_forest_system(200, 25, 3, 6);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const LllResult r = solve_trees(s, seed);
    if (r.stats.resampled_events != 0) continue;
    const MarkMatrix mk = sample_marks(s, seed);
    std::vector<std::vector<Vertex>> sets;
    for (GraphIndex i = 0; i < 25; ++i) sets.push_back(derive_r(s, i, mk));
    EXPECT_EQ(*r.report.coloring, CooperativeColoring::from_sets(sets, 200));
    return;
  }
  GTEST_SKIP() << "every seed needed resampling";
}

TEST(TreeProcess, CoverageFailureRate) {
  // Pr[B_v] <= (3/4)^m, checked at m = 4 on random trees.
  const std::size_t n = 400, m = 4, samples = 200;
  const GraphSystem s = random_forest_system(n, m, 3, 11);
  std::vector<RootedForest> forests;
  for (GraphIndex i = 0; i < m; ++i) forests.push_back(root_forest(s, i));
  std::size_t bad = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    const MarkMatrix mk = sample_marks(s, 1000 + t);
    std::vector<std::uint8_t> covered(n, 0);
    for (GraphIndex i = 0; i < m; ++i)
      for (Vertex v : derive_r(forests[i], i, mk)) covered[v] = 1;
    for (Vertex v = 0; v < n; ++v) bad += !covered[v];
  }
  const double p = std::pow(0.75, m);
  const double trials = static_cast<double>(n * samples);
  const double rate = static_cast<double>(bad) / trials;
  EXPECT_LE(rate, p + 3 * std::sqrt(p * (1 - p) / trials));
}

TEST(TreeProcess, DependencyAudit) {
  const std::size_t d = 4, m = 5;
  const GraphSystem s = random_forest_system(300, m, d, 12);
  std::vector<RootedForest> forests;
  for (GraphIndex i = 0; i < m; ++i) forests.push_back(root_forest(s, i));
  for (Vertex v = 0; v < 300; ++v) {
    const auto deps = tree_event_dependencies(forests, v);
    EXPECT_LE(deps.size(), 2 * d * m);
    // independent check: u depends on v iff their variable sets intersect
    for (Vertex u = 0; u < 300; ++u) {
      if (u == v) continue;
      bool shares = false;
      for (const auto& f : forests) {
        const Vertex vars_v[2] = {v, f.parent[v]};
        const Vertex vars_u[2] = {u, f.parent[u]};
        for (Vertex a : vars_v)
          for (Vertex b : vars_u)
            if (a != kNoVertex && a == b) shares = true;
      }
      EXPECT_EQ(shares, std::binary_search(deps.begin(), deps.end(), u)) << u << " " << v;
    }
  }
}

TEST(LllConditionTree, KnownValues) {
  EXPECT_TRUE(lll_condition_tree(19, 2));
  EXPECT_FALSE(lll_condition_tree(18, 2));
  EXPECT_FALSE(lll_condition_tree(1, 1));
  EXPECT_THROW(lll_condition_tree(0, 2), Error);
}

TEST(MinMTree, Values) {
  EXPECT_EQ(min_m_tree(2), 19u);
  const double reference = std::log(1e6) / std::log(4.0 / 3.0);
  const auto big = static_cast<double>(min_m_tree(1'000'000));
  EXPECT_GE(big, reference);
  EXPECT_LE(big, 1.5 * reference);
  std::uint64_t prev = min_m_tree(1);
  for (std::uint64_t d = 2; d < 5000; ++d) {
    const auto cur = min_m_tree(d);
    EXPECT_GE(cur, prev);
    prev = cur;
  }
}

}  // namespace
}  // namespace coopcolor
