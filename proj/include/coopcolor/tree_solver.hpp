#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "coopcolor/error.hpp"
#include "coopcolor/graph_system.hpp"
#include "coopcolor/report.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

/// m x n bit matrix; bit (i, v) says whether v belongs to the marked set S_i.
class MarkMatrix {
 public:
  MarkMatrix() = default;
  MarkMatrix(std::size_t m, std::size_t n) : m_(m), n_(n), bits_(m * n, 0) {}

  std::size_t graph_count() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return n_; }

  bool test(GraphIndex i, Vertex v) const { return bits_[i * n_ + v] != 0; }
  void set(GraphIndex i, Vertex v, bool value) { bits_[i * n_ + v] = value ? 1 : 0; }
  std::span<const std::uint8_t> row(GraphIndex i) const {
    return std::span<const std::uint8_t>(bits_).subspan(i * n_, n_);
  }

  friend bool operator==(const MarkMatrix&, const MarkMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

namespace detail {

inline std::vector<RootedForest> root_all_forests(const GraphSystem& s) {
  std::vector<RootedForest> forests;
  forests.reserve(s.graph_count());
  for (GraphIndex i = 0; i < s.graph_count(); ++i) {
    try {
      forests.push_back(rooted(s, i));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CycleDetected) throw Error(ErrorCode::NotAForest, e.what());
      throw;
    }
  }
  return forests;
}

inline void fill_marks(MarkMatrix& marks, Rng& rng) {
  for (GraphIndex i = 0; i < marks.graph_count(); ++i)
    for (Vertex v = 0; v < marks.vertex_count(); ++v) marks.set(i, v, rng.coin());
}

inline bool in_r(const RootedForest& f, const MarkMatrix& marks, GraphIndex i, Vertex v) {
  return marks.test(i, v) && (f.is_root(v) || !marks.test(i, f.parent[v]));
}

}  // namespace detail

/// Fair independent bits for every (graph, vertex) pair, reproducible from seed.
inline MarkMatrix sample_marks(const GraphSystem& s, std::uint64_t seed) {
  MarkMatrix marks(s.graph_count(), s.vertex_count());
  Rng rng(derive_seed(seed, Stream::Marks, 0));
  detail::fill_marks(marks, rng);
  return marks;
}

/// R_i: marked vertices that are roots or whose parent is unmarked.
/// Independent in forest i because every edge joins a parent and its child.
inline std::vector<Vertex> derive_r(const RootedForest& forest, GraphIndex i,
                                    const MarkMatrix& marks) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < forest.parent.size(); ++v)
    if (detail::in_r(forest, marks, i, v)) out.push_back(v);
  return out;
}

inline std::vector<Vertex> derive_r(const GraphSystem& s, GraphIndex i, const MarkMatrix& marks) {
  check_graph_index(s, i);
  return derive_r(rooted(s, i), i, marks);
}

/// Vertices u != v whose event shares a mark variable with v's event: the
/// parent, children and siblings of v across all forests.
inline std::vector<Vertex> tree_event_dependencies(std::span<const RootedForest> forests,
                                                   Vertex v) {
  std::vector<Vertex> out;
  for (const RootedForest& f : forests) {
    const Vertex p = f.parent[v];
    for (Vertex u = 0; u < f.parent.size(); ++u) {
      if (u == v) continue;
      const Vertex pu = f.parent[u];
      if (u == p || pu == v || (p != kNoVertex && pu == p)) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Moser-Tardos resampling of the marking process. While some vertex v lies
/// in no R_i (the lowest such v first), redraw the bits (i, v) and
/// (i, parent_i(v)) in every forest. Success assigns each vertex the lowest i
/// with v in R_i. max_rounds caps the number of rounds (default 1000 n).
inline LllResult solve_trees(const GraphSystem& s, std::uint64_t seed,
                             std::optional<std::uint64_t> max_rounds = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = s.vertex_count();
  const auto m = static_cast<GraphIndex>(s.graph_count());
  const std::vector<RootedForest> forests = detail::root_all_forests(s);
  std::vector<std::vector<std::vector<Vertex>>> children;
  children.reserve(m);
  for (const auto& f : forests) children.push_back(f.children());

  const std::uint64_t cap = max_rounds.value_or(std::max<std::uint64_t>(1, 1000 * n));

  LllResult result;
  result.stats.per_vertex.assign(n, 0);
  MarkMatrix marks(m, n);
  Rng rng(derive_seed(seed, Stream::Marks, 0));
  detail::fill_marks(marks, rng);

  std::vector<std::uint32_t> cover(n, 0);
  for (GraphIndex i = 0; i < m; ++i)
    for (Vertex v = 0; v < n; ++v) cover[v] += detail::in_r(forests[i], marks, i, v);
  std::set<Vertex> uncovered;
  for (Vertex v = 0; v < n; ++v)
    if (cover[v] == 0) uncovered.insert(v);

  // Redraw bit (i, x); R_i-membership of x and its children may change.
  auto redraw = [&](GraphIndex i, Vertex x) {
    const RootedForest& f = forests[i];
    auto touch = [&](Vertex y, int sign) {
      if (!detail::in_r(f, marks, i, y)) return;
      if (sign < 0) {
        if (--cover[y] == 0) uncovered.insert(y);
      } else {
        if (cover[y]++ == 0) uncovered.erase(y);
      }
    };
    touch(x, -1);
    for (Vertex c : children[i][x]) touch(c, -1);
    marks.set(i, x, rng.coin());
    touch(x, +1);
    for (Vertex c : children[i][x]) touch(c, +1);
    ++result.stats.resampled_variables;
  };

  result.stats.rounds = 1;
  while (!uncovered.empty() && result.stats.rounds < cap) {
    const Vertex v = *uncovered.begin();
    for (GraphIndex i = 0; i < m; ++i) {
      redraw(i, v);
      if (!forests[i].is_root(v)) redraw(i, forests[i].parent[v]);
    }
    ++result.stats.resampled_events;
    ++result.stats.per_vertex[v];
    ++result.stats.rounds;
  }

  SolveReport& report = result.report;
  if (uncovered.empty()) {
    std::vector<GraphIndex> assignment(n, kNoVertex);
    for (GraphIndex i = m; i-- > 0;)
      for (Vertex v = 0; v < n; ++v)
        if (detail::in_r(forests[i], marks, i, v)) assignment[v] = i;
    CooperativeColoring coloring(std::move(assignment));
    if (!verify_coloring(s, coloring).valid)
      throw std::logic_error("tree solver produced an invalid coloring");
    report.outcome = Outcome::Colorable;
    report.coloring = std::move(coloring);
  } else {
    report.outcome = Outcome::BudgetExceeded;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// (3/4)^m * m * 2d * e <= 1, evaluated in log space.
inline bool lll_condition_tree(std::uint64_t m, std::uint64_t d) {
  if (m < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "m and d must be >= 1");
  const long double lhs = static_cast<long double>(m) * std::log(0.75L) +
                          std::log(static_cast<long double>(m)) +
                          std::log(2.0L * static_cast<long double>(d)) + 1.0L;
  return lhs <= 0.0L;
}

/// Least m with lll_condition_tree(m, d).
inline std::uint64_t min_m_tree(std::uint64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  std::uint64_t m = 1;
  while (!lll_condition_tree(m, d)) ++m;
  return m;
}

}  // namespace coopcolor
