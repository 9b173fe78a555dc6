#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "coopcolor/bipartite_solver.hpp"
#include "coopcolor/error.hpp"
#include "coopcolor/tree_solver.hpp"

namespace coopcolor {

enum class GraphClass { General, Tree, Bipartite };

inline std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "general") return GraphClass::General;
  if (name == "tree" || name == "forest") return GraphClass::Tree;
  if (name == "bipartite") return GraphClass::Bipartite;
  return std::nullopt;
}

struct GeneralBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

/// m(1) = 2 and d + 2 <= m(d) <= 2d for d >= 2.
inline GeneralBounds general_bounds(std::uint64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (d == 1) return {2, 2};
  return {d + 2, 2 * d};
}

struct TreeBounds {
  double lower = 0;          // m_T(d) > log2 log2 d
  std::uint64_t upper_m = 0;  // least m passing the tree LLL inequality
};

inline TreeBounds tree_bounds(std::uint64_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
  return {std::log2(std::log2(static_cast<double>(d))), min_m_tree(d)};
}

struct BipartiteBounds {
  double lower = 0;            // log2 d
  double upper_reference = 0;  // (1 + eps) 2d / ln d, not a guarantee
  std::optional<std::uint64_t> sufficient_m;
};

/// sufficient_m is the least m in [1, 2d] passing every bipartite condition.
inline BipartiteBounds bipartite_bounds(std::uint64_t d, double eps) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  const auto dd = static_cast<long double>(d);
  BipartiteBounds b;
  b.lower = std::log2(static_cast<double>(d));
  b.upper_reference = static_cast<double>((1 + static_cast<long double>(eps)) * 2 * dd / std::log(dd));

  // (i) and (ii) only get easier as m grows while (iii) only gets harder, so
  // the first m passing (i) and (ii) decides the answer.
  const auto probe = lll_condition_bipartite(1, dd, eps);
  const long double from_ii = probe.survival > 0 ? 8 * std::log(dd) / probe.survival : INFINITY;
  const long double start = std::max<long double>({1, std::floor(probe.required_m), std::floor(from_ii)});
  const long double limit = 2 * dd;
  for (long double m = std::max<long double>(1, start - 1); m <= limit; ++m) {
    const auto c = lll_condition_bipartite(m, dd, eps);
    if (c.size_ok && c.survival_ok) {
      if (c.lll_ok) b.sufficient_m = static_cast<std::uint64_t>(m);
      break;
    }
  }
  return b;
}

/// Size and degree audit of the recursive tree family, from the recurrence
/// n_2 = 4, n_k = n_{k-1}^2 + n_{k-1}, max degree 2 at level 2 and n_{k-1}
/// above it.
struct QGrowth {
  std::uint64_t m = 0;
  std::uint64_t vertices = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t vertex_bound = 0;  // 2^(3 * 2^(m-2) - 1)
  std::uint64_t degree_bound = 0;  // 2^(2^(m-1))
  bool ok = false;
};

inline QGrowth q_growth_check(std::uint64_t m) {
  if (m < 2 || m > 5) throw Error(ErrorCode::InvalidArgument, "q_growth_check supports 2 <= m <= 5");
  QGrowth g;
  g.m = m;
  g.vertices = 4;
  g.max_degree = 2;
  for (std::uint64_t k = 3; k <= m; ++k) {
    g.max_degree = g.vertices;
    g.vertices = g.vertices * g.vertices + g.vertices;
  }
  g.vertex_bound = std::uint64_t{1} << (3 * (std::uint64_t{1} << (m - 2)) - 1);
  g.degree_bound = std::uint64_t{1} << (std::uint64_t{1} << (m - 1));
  g.ok = g.vertices <= g.vertex_bound && g.max_degree <= g.degree_bound;
  return g;
}

}  // namespace coopcolor
