#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "coopcolor/error.hpp"
#include "coopcolor/graph_system.hpp"
#include "coopcolor/report.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

/// Per-vertex left/right membership across the m bipartitions, and the A/B
/// split: A holds the vertices that are on the left in at least half the graphs.
struct SideProfile {
  std::size_t graph_count = 0;
  std::vector<std::vector<GraphIndex>> left_of;   // J_L(v), ascending
  std::vector<std::vector<GraphIndex>> right_of;  // J_R(v), ascending
  std::vector<std::uint8_t> in_a;
  std::vector<Vertex> a;
  std::vector<Vertex> b;

  bool is_left(Vertex v, GraphIndex j) const {
    return std::binary_search(left_of[v].begin(), left_of[v].end(), j);
  }
};

/// Step-1 choices: choice[a] in J_L(a) for a in A, kNoVertex elsewhere.
struct AssignmentMap {
  std::vector<GraphIndex> choice;

  bool assigned(Vertex v) const { return choice[v] != kNoVertex; }
};

struct FirstFailure {
  Vertex vertex = 0;
};

using GreedyResult = std::variant<CooperativeColoring, FirstFailure>;

inline SideProfile split_ab(const GraphSystem& s) {
  const std::size_t n = s.vertex_count();
  const auto m = static_cast<GraphIndex>(s.graph_count());
  SideProfile p;
  p.graph_count = m;
  p.left_of.resize(n);
  p.right_of.resize(n);
  p.in_a.assign(n, 0);
  std::vector<std::uint8_t> left(n);
  for (GraphIndex j = 0; j < m; ++j) {
    const auto& ann = s.annotation(j).left;
    if (!ann)
      throw Error(ErrorCode::MissingBipartition,
                  "graph " + std::to_string(j) + " has no bipartition annotation");
    std::fill(left.begin(), left.end(), 0);
    for (Vertex v : *ann) left[v] = 1;
    for (Vertex v = 0; v < n; ++v) (left[v] ? p.left_of : p.right_of)[v].push_back(j);
  }
  for (Vertex v = 0; v < n; ++v) {
    // |J_L(v)| >= m/2, ties go to A
    if (2 * p.left_of[v].size() >= m) {
      p.in_a[v] = 1;
      p.a.push_back(v);
    } else {
      p.b.push_back(v);
    }
  }
  return p;
}

namespace detail {

inline GraphIndex draw_choice(const SideProfile& p, Vertex a, Rng& rng) {
  const auto& options = p.left_of[a];
  if (options.empty())
    throw Error(ErrorCode::EmptyChoiceSet, "vertex " + std::to_string(a) + " has empty J_L");
  return options[rng.below(options.size())];
}

inline AssignmentMap assign_a(const SideProfile& p, Rng& rng) {
  AssignmentMap amap;
  amap.choice.assign(p.left_of.size(), kNoVertex);
  for (Vertex a : p.a) amap.choice[a] = draw_choice(p, a, rng);
  return amap;
}

}  // namespace detail

/// Uniform independent choice j(a) in J_L(a) for every a in A.
inline AssignmentMap assign_a(const SideProfile& p, std::uint64_t seed) {
  Rng rng(derive_seed(seed, Stream::Assignment, 0));
  return detail::assign_a(p, rng);
}

/// J_R'(b): indices j in J_R(b) not taken by any A-neighbour of b in G_j.
inline std::vector<GraphIndex> compute_jr_prime(const GraphSystem& s, const SideProfile& p,
                                                const AssignmentMap& amap, Vertex b) {
  std::vector<GraphIndex> out;
  for (GraphIndex j : p.right_of[b]) {
    bool excluded = false;
    for (Vertex a : s.graph(j).neighbors(b))
      if (p.in_a[a] && amap.choice[a] == j) {
        excluded = true;
        break;
      }
    if (!excluded) out.push_back(j);
  }
  return out;
}

/// Step 2: B in ascending order, each b taking the smallest index of J_R'(b).
/// Stops at the first b whose J_R'(b) is empty.
inline GreedyResult greedy_b(const GraphSystem& s, const SideProfile& p, const AssignmentMap& amap) {
  std::vector<GraphIndex> assignment(s.vertex_count(), kNoVertex);
  for (Vertex a : p.a) assignment[a] = amap.choice[a];
  for (Vertex b : p.b) {
    GraphIndex pick = kNoVertex;
    for (GraphIndex j : p.right_of[b]) {
      bool excluded = false;
      for (Vertex a : s.graph(j).neighbors(b))
        if (p.in_a[a] && amap.choice[a] == j) {
          excluded = true;
          break;
        }
      if (!excluded) {
        pick = j;
        break;
      }
    }
    if (pick == kNoVertex) return FirstFailure{b};
    assignment[b] = pick;
  }
  return CooperativeColoring(std::move(assignment));
}

/// Step-1 variables that the failure event of b depends on: every a in A
/// adjacent to b in some G_j with j in J_R(b).
inline std::vector<Vertex> failure_variables(const GraphSystem& s, const SideProfile& p, Vertex b) {
  std::vector<Vertex> out;
  for (GraphIndex j : p.right_of[b])
    for (Vertex a : s.graph(j).neighbors(b))
      if (p.in_a[a]) out.push_back(a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// B-vertices b' != b whose failure events share a step-1 variable with b's.
inline std::vector<Vertex> bipartite_event_dependencies(const GraphSystem& s, const SideProfile& p,
                                                        Vertex b) {
  const auto mine = failure_variables(s, p, b);
  std::vector<Vertex> out;
  for (Vertex other : p.b) {
    if (other == b) continue;
    const auto theirs = failure_variables(s, p, other);
    std::vector<Vertex> shared;
    std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                          std::back_inserter(shared));
    if (!shared.empty()) out.push_back(other);
  }
  return out;
}

/// Semi-random process with Moser-Tardos resampling: on the first failing b,
/// redraw j(a) for every variable of b's failure event and rerun step 2.
inline LllResult solve_bipartite(const GraphSystem& s, std::uint64_t seed,
                                 std::optional<std::uint64_t> max_rounds = {}) {
  const auto start = std::chrono::steady_clock::now();
  const SideProfile p = split_ab(s);
  const std::uint64_t cap =
      max_rounds.value_or(std::max<std::uint64_t>(1, 1000 * s.vertex_count()));

  LllResult result;
  result.stats.per_vertex.assign(s.vertex_count(), 0);
  Rng rng(derive_seed(seed, Stream::Assignment, 0));
  AssignmentMap amap = detail::assign_a(p, rng);

  SolveReport& report = result.report;
  report.outcome = Outcome::BudgetExceeded;
  for (result.stats.rounds = 1;; ++result.stats.rounds) {
    GreedyResult step2 = greedy_b(s, p, amap);
    if (auto* coloring = std::get_if<CooperativeColoring>(&step2)) {
      if (!verify_coloring(s, *coloring).valid)
        throw std::logic_error("bipartite solver produced an invalid coloring");
      report.outcome = Outcome::Colorable;
      report.coloring = std::move(*coloring);
      break;
    }
    if (result.stats.rounds >= cap) break;
    const Vertex b = std::get<FirstFailure>(step2).vertex;
    for (Vertex a : failure_variables(s, p, b)) {
      amap.choice[a] = detail::draw_choice(p, a, rng);
      ++result.stats.resampled_variables;
    }
    ++result.stats.resampled_events;
    ++result.stats.per_vertex[b];
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// The three concrete sufficient conditions with m and d explicit:
///   (i)   m >= (1 + eps) 2d / ln d
///   (ii)  (1 - ln d / ((1 + eps) d))^d >= 8 ln d / m
///   (iii) m d^2 e / d^4 <= 1
struct BipartiteConditions {
  long double required_m = 0;   // (1 + eps) 2d / ln d
  long double survival = 0;     // left side of (ii)
  long double exclusion = 0;    // right side of (ii)
  long double lll_product = 0;  // left side of (iii)
  bool size_ok = false;
  bool survival_ok = false;
  bool lll_ok = false;
  bool all = false;
};

inline BipartiteConditions lll_condition_bipartite(long double m, long double d, long double eps) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  if (!(m >= 1)) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  const long double ln_d = std::log(d);
  BipartiteConditions c;
  c.required_m = (1 + eps) * 2 * d / ln_d;
  c.survival = std::exp(d * std::log1p(-ln_d / ((1 + eps) * d)));
  c.exclusion = 8 * ln_d / m;
  c.lll_product = m * std::numbers::e_v<long double> / (d * d);
  c.size_ok = m >= c.required_m;
  c.survival_ok = c.survival >= c.exclusion;
  c.lll_ok = c.lll_product <= 1;
  c.all = c.size_ok && c.survival_ok && c.lll_ok;
  return c;
}

/// Smallest k such that every condition holds at d = 2^k with
/// m = ceil((1 + eps) 2d / ln d), searching k in [1, max_log2_d].
inline std::optional<unsigned> bipartite_threshold_log2(long double eps, unsigned max_log2_d = 4096) {
  for (unsigned k = 1; k <= max_log2_d; ++k) {
    const long double d = std::ldexp(1.0L, static_cast<int>(k));
    const long double m = std::ceil((1 + eps) * 2 * d / std::log(d));
    if (lll_condition_bipartite(m, d, eps).all) return k;
  }
  return std::nullopt;
}

}  // namespace coopcolor
