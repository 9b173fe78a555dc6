#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coopcolor/error.hpp"
#include "coopcolor/graph_system.hpp"
#include "coopcolor/rng.hpp"

namespace coopcolor {

namespace detail {

inline GraphAnnotation lowest_index_roots(const Graph& g, GraphIndex j) {
  GraphAnnotation a;
  a.roots = orient_forest(g, {}, j).roots;
  return a;
}

inline GraphSystem annotate_roots(std::size_t n, std::vector<std::vector<Edge>> edge_lists) {
  std::vector<GraphSpec> specs;
  for (GraphIndex j = 0; j < edge_lists.size(); ++j) {
    const Graph g(n, edge_lists[j]);
    specs.push_back(GraphSpec{std::move(edge_lists[j]), lowest_index_roots(g, j)});
  }
  return GraphSystem(n, std::move(specs));
}

}  // namespace detail

/// The two interleaved paths on four vertices that admit no cooperative
/// coloring: 0-1-2-3 and 0-2-1-3.
inline GraphSystem base_t2() {
  return detail::annotate_roots(4, {{{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {1, 2}, {1, 3}}});
}

/// Lifts an m-forest system on V to an (m+1)-forest system on (V + {z}) x V.
///
/// Layout: vertex (u, v) with u in V sits at u*n + v; vertex (z, v) sits at
/// n*n + v. Forest i < m is one copy of F_i per block; forest m is the union of
/// stars joining (z, u) to every (u, v).
inline GraphSystem q_construction(const GraphSystem& s) {
  const std::size_t n = s.vertex_count();
  const std::size_t m = s.graph_count();
  for (GraphIndex j = 0; j < m; ++j) {
    try {
      (void)root_forest(s, j);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotAForest, e.what());
    }
  }
  const std::size_t n2 = n * n + n;
  if (n2 >= kNoVertex) throw Error(ErrorCode::InvalidArgument, "lifted system too large");

  std::vector<std::vector<Edge>> lists(m + 1);
  for (GraphIndex i = 0; i < m; ++i) {
    const auto& edges = s.graph(i).edges();
    lists[i].reserve(edges.size() * (n + 1));
    for (std::size_t block = 0; block <= n; ++block) {
      const auto base = static_cast<Vertex>(block * n);
      for (const Edge& e : edges) lists[i].push_back({base + e.u, base + e.v});
    }
  }
  lists[m].reserve(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      lists[m].push_back({static_cast<Vertex>(n * n + u), static_cast<Vertex>(u * n + v)});
  return detail::annotate_roots(n2, std::move(lists));
}

/// One level of the recursive tree family together with the vertex-count
/// chain needed to recover the nested pair label of any dense index.
struct QLevel {
  std::size_t level = 2;
  GraphSystem system;
  std::vector<std::size_t> sizes;  // sizes[k] = vertex count at level k + 2
  bool connected = false;

  std::string label(Vertex index) const { return label_at(level, index); }

 private:
  std::string label_at(std::size_t k, Vertex index) const {
    if (k == 2) return std::to_string(index);
    const std::size_t n = sizes[k - 3];
    const std::size_t u = index / n;
    const auto v = static_cast<Vertex>(index % n);
    const std::string outer = u == n ? std::string("z") : label_at(k - 1, static_cast<Vertex>(u));
    return "(" + outer + "," + label_at(k - 1, v) + ")";
  }
};

/// Joins the components of every forest into one tree. Components are chained
/// in order of their lowest vertex; each link uses the lowest-index vertex of
/// degree at most one in each component (the second-lowest on the outgoing
/// side of a middle component). The result has maximum degree at most
/// max(old maximum, 2).
inline GraphSystem connect_forests(const GraphSystem& s) {
  const std::size_t n = s.vertex_count();
  std::vector<std::vector<Edge>> lists;
  for (GraphIndex j = 0; j < s.graph_count(); ++j) {
    const Graph& g = s.graph(j);
    RootedForest f;
    try {
      f = root_forest(s, j);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotAForest, e.what());
    }
    // Component id per vertex, in root discovery order (= lowest vertex order).
    std::vector<std::size_t> comp(n, 0);
    {
      std::vector<std::size_t> id_of_root(n, 0);
      for (std::size_t c = 0; c < f.roots.size(); ++c) id_of_root[f.roots[c]] = c;
      for (Vertex v : f.order)
        comp[v] = f.is_root(v) ? id_of_root[v] : comp[f.parent[v]];
    }
    // Two lowest ports per component: the chain enters through the first and
    // leaves through the second, so a leaf is never linked twice.
    std::vector<std::array<Vertex, 2>> port(f.roots.size(), {kNoVertex, kNoVertex});
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) > 1) continue;
      auto& p = port[comp[v]];
      if (p[0] == kNoVertex) p[0] = v;
      else if (p[1] == kNoVertex) p[1] = v;
    }
    auto exit_port = [&](std::size_t c) {
      return c == 0 || port[c][1] == kNoVertex ? port[c][0] : port[c][1];
    };

    auto edges = g.edges();
    for (std::size_t c = 0; c + 1 < port.size(); ++c)
      edges.push_back({exit_port(c), port[c + 1][0]});
    lists.push_back(std::move(edges));
  }
  return detail::annotate_roots(n, std::move(lists));
}

/// The m-forest system with no cooperative coloring, built by iterating the
/// Q-construction from the two-path base.
inline QLevel tree_counterexample(std::size_t m, bool connect) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "tree counterexample needs m >= 2");
  QLevel q;
  q.system = base_t2();
  q.sizes.push_back(q.system.vertex_count());
  for (std::size_t k = 3; k <= m; ++k) {
    q.system = q_construction(q.system);
    q.sizes.push_back(q.system.vertex_count());
  }
  q.level = m;
  if (connect) {
    q.system = connect_forests(q.system);
    q.connected = true;
  }
  return q;
}

/// m complete bipartite graphs on {0,1}^m; graph j splits by bit j. Vertex
/// index is the binary word, bit j being coordinate j.
inline GraphSystem hypercube_counterexample(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "hypercube counterexample needs m >= 1");
  if (m > 20) throw Error(ErrorCode::InvalidArgument, "hypercube counterexample too large");
  const std::size_t n = std::size_t{1} << m;
  std::vector<GraphSpec> specs(m);
  for (GraphIndex j = 0; j < m; ++j) {
    const Vertex bit = Vertex{1} << j;
    std::vector<Vertex> zero, one;
    for (Vertex v = 0; v < n; ++v) ((v & bit) ? one : zero).push_back(v);
    auto& spec = specs[j];
    spec.edges.reserve(zero.size() * one.size());
    for (Vertex u : zero)
      for (Vertex v : one) spec.edges.push_back({u, v});
    spec.annotation.left = std::move(zero);
  }
  return GraphSystem(n, std::move(specs));
}

/// m independent uniform-attachment trees with degree capped at d. Vertex t
/// attaches to a uniformly chosen earlier vertex whose degree is still below d.
inline GraphSystem random_forest_system(std::size_t n, std::size_t m, std::size_t d,
                                        std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree cap must be >= 1");
  if (d == 1 && n > 2)
    throw Error(ErrorCode::InfeasibleDegree, "a tree on more than two vertices needs d >= 2");
  std::vector<std::vector<Edge>> lists(m);
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> open;
  for (GraphIndex j = 0; j < m; ++j) {
    Rng rng(derive_seed(seed, Stream::Generator, j));
    std::fill(degree.begin(), degree.end(), 0);
    open.clear();
    if (n > 0) open.push_back(0);
    auto& edges = lists[j];
    edges.reserve(n > 0 ? n - 1 : 0);
    for (Vertex t = 1; t < n; ++t) {
      const std::size_t slot = rng.below(open.size());
      const Vertex p = open[slot];
      edges.push_back({p, t});
      if (++degree[p] >= d) {
        open[slot] = open.back();
        open.pop_back();
      }
      if (++degree[t] < d) open.push_back(t);
    }
  }
  return detail::annotate_roots(n, std::move(lists));
}

/// m random bipartite graphs: a uniformly shuffled balanced split (the first
/// ceil(n/2) shuffled vertices form the left side) and random cross edges
/// added while both endpoints have degree below d. Insertion stops when one
/// side saturates or 8(n+1) consecutive draws hit existing edges.
inline GraphSystem random_bipartite_system(std::size_t n, std::size_t m, std::size_t d,
                                           std::uint64_t seed) {
  std::vector<GraphSpec> specs(m);
  std::vector<Vertex> perm(n);
  std::vector<std::size_t> degree(n);
  for (GraphIndex j = 0; j < m; ++j) {
    Rng rng(derive_seed(seed, Stream::Generator, j));
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    const std::size_t half = (n + 1) / 2;
    std::vector<Vertex> left(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<Vertex> right(perm.begin() + static_cast<std::ptrdiff_t>(half), perm.end());

    auto& spec = specs[j];
    if (d > 0) {
      std::fill(degree.begin(), degree.end(), 0);
      std::vector<Vertex> open_left = left, open_right = right;
      std::unordered_set<std::uint64_t> present;
      std::size_t misses = 0;
      const std::size_t miss_limit = 8 * (n + 1);
      while (!open_left.empty() && !open_right.empty() && misses < miss_limit) {
        const std::size_t li = rng.below(open_left.size());
        const std::size_t ri = rng.below(open_right.size());
        const Vertex u = open_left[li], v = open_right[ri];
        if (!present.insert(detail::edge_key(u, v)).second) {
          ++misses;
          continue;
        }
        misses = 0;
        spec.edges.push_back({u, v});
        if (++degree[u] >= d) {
          open_left[li] = open_left.back();
          open_left.pop_back();
        }
        if (++degree[v] >= d) {
          open_right[ri] = open_right.back();
          open_right.pop_back();
        }
      }
    }
    std::sort(left.begin(), left.end());
    spec.annotation.left = std::move(left);
  }
  return GraphSystem(n, std::move(specs));
}

}  // namespace coopcolor
