#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coopcolor/error.hpp"
#include "coopcolor/graph_system.hpp"
#include "coopcolor/report.hpp"

namespace coopcolor {

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  std::optional<double> deadline_seconds;
};

namespace detail {

// Depth-first search over per-vertex graph indices in vertex order, trying
// indices in ascending order. Index j is admissible at v iff no earlier
// neighbour of v in G_j already holds j. on_leaf returns false to stop.
template <typename OnLeaf>
Outcome assignment_search(const GraphSystem& s, const SearchBudget& budget,
                          std::uint64_t& nodes, OnLeaf&& on_leaf) {
  const std::size_t n = s.vertex_count();
  const auto m = static_cast<GraphIndex>(s.graph_count());
  if (budget.max_nodes < 1) throw Error(ErrorCode::InvalidArgument, "max_nodes must be >= 1");

  // earlier[j][v]: neighbours u < v of v in G_j.
  std::vector<std::vector<std::vector<Vertex>>> earlier(m, std::vector<std::vector<Vertex>>(n));
  for (GraphIndex j = 0; j < m; ++j)
    for (const Edge& e : s.graph(j).edges()) {
      if (e.u < e.v) earlier[j][e.v].push_back(e.u);
      else earlier[j][e.u].push_back(e.v);
    }

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (!budget.deadline_seconds) return false;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    return dt.count() > *budget.deadline_seconds;
  };

  std::vector<GraphIndex> color(n, kNoVertex);
  std::vector<GraphIndex> next(n + 1, 0);
  nodes = 0;
  if (n == 0) {
    on_leaf(color);
    return Outcome::Colorable;
  }
  bool found_any = false;
  std::size_t v = 0;
  for (;;) {
    if (v == n) {
      found_any = true;
      if (!on_leaf(color)) return Outcome::Colorable;
      --v;
      continue;
    }
    GraphIndex c = next[v];
    for (; c < m; ++c) {
      bool ok = true;
      for (Vertex u : earlier[c][v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    if (c < m) {
      if (++nodes > budget.max_nodes) return Outcome::BudgetExceeded;
      if ((nodes & 0x3fff) == 0 && out_of_time()) return Outcome::BudgetExceeded;
      color[v] = c;
      next[v] = c + 1;
      ++v;
      next[v] = 0;
    } else {
      color[v] = kNoVertex;
      if (v == 0) return found_any ? Outcome::Colorable : Outcome::Uncolorable;
      --v;
    }
  }
}

}  // namespace detail

/// Exact decision by exhaustive backtracking. Uncolorable is only reported
/// after the whole search tree has been exhausted.
inline SolveReport decide_colorable(const GraphSystem& s, const SearchBudget& budget = {}) {
  if (s.graph_count() < 1) throw Error(ErrorCode::InvalidArgument, "system has no graphs");
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  std::optional<CooperativeColoring> found;
  report.outcome = detail::assignment_search(s, budget, report.nodes_expanded,
                                             [&](const std::vector<GraphIndex>& color) {
                                               found.emplace(color);
                                               return false;
                                             });
  if (report.outcome == Outcome::Colorable) {
    if (!verify_coloring(s, *found).valid)
      throw std::logic_error("exact solver produced an invalid coloring");
    report.coloring = std::move(found);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// All valid single-assignment colorings (lexicographic), at most cap of them.
inline std::vector<CooperativeColoring> enumerate_colorings(const GraphSystem& s, std::size_t cap) {
  std::vector<CooperativeColoring> out;
  if (cap == 0 || s.graph_count() == 0) return out;
  SearchBudget unlimited;
  unlimited.max_nodes = UINT64_MAX;
  std::uint64_t nodes = 0;
  detail::assignment_search(s, unlimited, nodes, [&](const std::vector<GraphIndex>& color) {
    out.emplace_back(color);
    return out.size() < cap;
  });
  return out;
}

}  // namespace coopcolor
