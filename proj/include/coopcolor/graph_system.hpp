#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coopcolor/error.hpp"

namespace coopcolor {

using Vertex = std::uint32_t;
using GraphIndex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::string to_string(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Optional structure attached to one graph of a system. Roots mark a rooted
/// forest (one root per component); left marks one side of a bipartition.
struct GraphAnnotation {
  std::optional<std::vector<Vertex>> roots;
  std::optional<std::vector<Vertex>> left;

  friend bool operator==(const GraphAnnotation&, const GraphAnnotation&) = default;
};

struct GraphSpec {
  std::vector<Edge> edges;
  GraphAnnotation annotation;
};

/// Simple undirected graph on a fixed vertex count. Edges keep input order.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adjacency_) best = std::max(best, row.size());
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Parent pointers of a forest oriented away from one root per component.
struct RootedForest {
  std::vector<Vertex> parent;  // kNoVertex for roots
  std::vector<Vertex> roots;   // in discovery order
  std::vector<Vertex> order;   // every parent precedes its children

  bool is_root(Vertex v) const { return parent[v] == kNoVertex; }

  std::vector<std::vector<Vertex>> children() const {
    std::vector<std::vector<Vertex>> out(parent.size());
    for (Vertex v : order)
      if (parent[v] != kNoVertex) out[parent[v]].push_back(v);
    return out;
  }
};

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<std::uint8_t> is_left;
};

namespace detail {

inline std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// BFS orientation from the given sources; remaining components are rooted at
// their lowest-index vertex.
inline RootedForest orient_forest(const Graph& g, std::span<const Vertex> sources,
                                  GraphIndex j) {
  const std::size_t n = g.vertex_count();
  RootedForest out;
  out.parent.assign(n, kNoVertex);
  out.order.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);

  auto grow = [&](Vertex root) {
    seen[root] = 1;
    out.roots.push_back(root);
    std::size_t head = out.order.size();
    out.order.push_back(root);
    while (head < out.order.size()) {
      const Vertex x = out.order[head++];
      for (Vertex w : g.neighbors(x)) {
        if (w == out.parent[x]) continue;
        if (seen[w])
          throw Error(ErrorCode::CycleDetected,
                      "graph " + std::to_string(j) + " has a cycle through edge " +
                          to_string(Edge{x, w}));
        seen[w] = 1;
        out.parent[w] = x;
        out.order.push_back(w);
      }
    }
  };

  for (Vertex r : sources) {
    if (r >= n)
      throw Error(ErrorCode::OutOfRangeVertex,
                  "root " + std::to_string(r) + " outside [0," + std::to_string(n) + ")");
    if (seen[r])
      throw Error(ErrorCode::InvalidRoots, "graph " + std::to_string(j) + ": root " +
                                               std::to_string(r) +
                                               " shares a component with an earlier root");
    grow(r);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) grow(v);
  return out;
}

inline Bipartition two_color(const Graph& g, GraphIndex j) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kUnseen = 2;
  std::vector<std::uint8_t> side(n, kUnseen);  // 0 = left, 1 = right
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != kUnseen) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(x)) {
        if (side[w] == kUnseen) {
          side[w] = static_cast<std::uint8_t>(1 - side[x]);
          queue.push_back(w);
        } else if (side[w] == side[x]) {
          throw Error(ErrorCode::OddCycleDetected, "graph " + std::to_string(j) +
                                                       " has an odd cycle through edge " +
                                                       to_string(Edge{x, w}));
        }
      }
    }
  }
  Bipartition out;
  out.is_left.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    out.is_left[v] = side[v] == 0;
    (side[v] == 0 ? out.left : out.right).push_back(v);
  }
  return out;
}

}  // namespace detail

/// m simple graphs sharing the vertex set {0, ..., n-1}.
///
/// Construction validates every edge and annotation; a GraphSystem that
/// exists is always well formed, and it is never mutated afterwards.
class GraphSystem {
 public:
  GraphSystem() = default;

  GraphSystem(std::size_t n, std::vector<GraphSpec> specs) : n_(n) {
    if (n > static_cast<std::size_t>(kNoVertex))
      throw Error(ErrorCode::InvalidArgument, "vertex count too large");
    graphs_.reserve(specs.size());
    annotations_.reserve(specs.size());
    for (std::size_t j = 0; j < specs.size(); ++j) {
      validate_edges(specs[j].edges, static_cast<GraphIndex>(j));
      graphs_.emplace_back(n, std::move(specs[j].edges));
      validate_annotation(graphs_.back(), specs[j].annotation, static_cast<GraphIndex>(j));
      annotations_.push_back(std::move(specs[j].annotation));
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t graph_count() const noexcept { return graphs_.size(); }
  const Graph& graph(GraphIndex j) const { return graphs_.at(j); }
  const GraphAnnotation& annotation(GraphIndex j) const { return annotations_.at(j); }
  const std::vector<Graph>& graphs() const noexcept { return graphs_; }

  std::vector<GraphSpec> specs() const {
    std::vector<GraphSpec> out;
    out.reserve(graphs_.size());
    for (std::size_t j = 0; j < graphs_.size(); ++j)
      out.push_back(GraphSpec{graphs_[j].edges(), annotations_[j]});
    return out;
  }

  GraphSystem with_annotation(GraphIndex j, GraphAnnotation annotation) const {
    auto s = specs();
    s.at(j).annotation = std::move(annotation);
    return GraphSystem(n_, std::move(s));
  }

  friend bool operator==(const GraphSystem& a, const GraphSystem& b) {
    if (a.n_ != b.n_ || a.graphs_.size() != b.graphs_.size()) return false;
    for (std::size_t j = 0; j < a.graphs_.size(); ++j)
      if (a.graphs_[j].edges() != b.graphs_[j].edges() || a.annotations_[j] != b.annotations_[j])
        return false;
    return true;
  }

 private:
  void validate_edges(const std::vector<Edge>& edges, GraphIndex j) const {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    const std::string where = "graph " + std::to_string(j) + ": edge ";
    for (const Edge& e : edges) {
      if (e.u >= n_ || e.v >= n_)
        throw Error(ErrorCode::OutOfRangeVertex,
                    where + to_string(e) + " outside [0," + std::to_string(n_) + ")");
      if (e.u == e.v) throw Error(ErrorCode::SelfLoop, where + to_string(e));
      if (!seen.insert(detail::edge_key(e.u, e.v)).second)
        throw Error(ErrorCode::DuplicateEdge, where + to_string(e));
    }
  }

  void validate_annotation(const Graph& g, const GraphAnnotation& a, GraphIndex j) const {
    if (a.roots) {
      const RootedForest f = detail::orient_forest(g, *a.roots, j);
      if (f.roots.size() != a.roots->size())
        throw Error(ErrorCode::InvalidRoots,
                    "graph " + std::to_string(j) + ": roots do not cover every component");
    }
    if (a.left) {
      std::vector<std::uint8_t> is_left(n_, 0);
      for (Vertex v : *a.left) {
        if (v >= n_)
          throw Error(ErrorCode::OutOfRangeVertex, "left-side vertex " + std::to_string(v));
        if (is_left[v])
          throw Error(ErrorCode::InvalidBipartition,
                      "graph " + std::to_string(j) + ": left vertex listed twice");
        is_left[v] = 1;
      }
      for (const Edge& e : g.edges())
        if (is_left[e.u] == is_left[e.v])
          throw Error(ErrorCode::InvalidBipartition,
                      "graph " + std::to_string(j) + ": edge " + to_string(e) +
                          " lies within one side");
    }
  }

  std::size_t n_ = 0;
  std::vector<Graph> graphs_;
  std::vector<GraphAnnotation> annotations_;
};

inline GraphSystem build_system(std::size_t n, const std::vector<std::vector<Edge>>& edge_lists) {
  std::vector<GraphSpec> specs;
  specs.reserve(edge_lists.size());
  for (const auto& edges : edge_lists) specs.push_back(GraphSpec{edges, {}});
  return GraphSystem(n, std::move(specs));
}

inline std::size_t max_degree(const GraphSystem& s) {
  std::size_t best = 0;
  for (const Graph& g : s.graphs()) best = std::max(best, g.max_degree());
  return best;
}

inline void check_graph_index(const GraphSystem& s, GraphIndex j) {
  if (j >= s.graph_count())
    throw Error(ErrorCode::IndexOutOfRange,
                "graph index " + std::to_string(j) + " with m=" + std::to_string(s.graph_count()));
}

inline bool is_independent(const GraphSystem& s, GraphIndex j, std::span<const Vertex> set) {
  check_graph_index(s, j);
  std::vector<std::uint8_t> in(s.vertex_count(), 0);
  for (Vertex v : set) {
    if (v >= s.vertex_count())
      throw Error(ErrorCode::OutOfRangeVertex, "vertex " + std::to_string(v));
    in[v] = 1;
  }
  for (const Edge& e : s.graph(j).edges())
    if (in[e.u] && in[e.v]) return false;
  return true;
}

/// Roots each component of graph j: preferred roots first, then the
/// lowest-index vertex of every component left over.
inline RootedForest root_forest(const GraphSystem& s, GraphIndex j,
                                std::optional<std::span<const Vertex>> preferred_roots = {}) {
  check_graph_index(s, j);
  return detail::orient_forest(s.graph(j), preferred_roots.value_or(std::span<const Vertex>{}), j);
}

/// Rooting that honours a roots annotation when one is attached.
inline RootedForest rooted(const GraphSystem& s, GraphIndex j) {
  const auto& roots = s.annotation(j).roots;
  if (roots) return root_forest(s, j, std::span<const Vertex>(*roots));
  return root_forest(s, j);
}

/// Two-coloring by traversal; the side holding a component's lowest-index
/// vertex is the left side, so isolated vertices land on the left.
inline Bipartition bipartition(const GraphSystem& s, GraphIndex j) {
  check_graph_index(s, j);
  return detail::two_color(s.graph(j), j);
}

/// Single-assignment cooperative coloring: entry v is the index of the graph
/// whose independent set covers vertex v.
class CooperativeColoring {
 public:
  CooperativeColoring() = default;
  explicit CooperativeColoring(std::vector<GraphIndex> assignment)
      : assignment_(std::move(assignment)) {}

  const std::vector<GraphIndex>& assignment() const noexcept { return assignment_; }
  std::size_t size() const noexcept { return assignment_.size(); }
  GraphIndex operator[](Vertex v) const { return assignment_[v]; }

  std::vector<std::vector<Vertex>> to_sets(std::size_t m) const {
    std::vector<std::vector<Vertex>> sets(m);
    for (Vertex v = 0; v < assignment_.size(); ++v) {
      if (assignment_[v] >= m)
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " assigned graph " +
                                                    std::to_string(assignment_[v]));
      sets[assignment_[v]].push_back(v);
    }
    return sets;
  }

  // Each vertex takes the lowest index of a set containing it.
  static CooperativeColoring from_sets(const std::vector<std::vector<Vertex>>& sets,
                                       std::size_t n) {
    std::vector<GraphIndex> a(n, kNoVertex);
    for (GraphIndex j = static_cast<GraphIndex>(sets.size()); j-- > 0;)
      for (Vertex v : sets[j]) {
        if (v >= n) throw Error(ErrorCode::OutOfRangeVertex, "vertex " + std::to_string(v));
        a[v] = j;
      }
    for (Vertex v = 0; v < n; ++v)
      if (a[v] == kNoVertex)
        throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " is uncovered");
    return CooperativeColoring(std::move(a));
  }

  friend bool operator==(const CooperativeColoring&, const CooperativeColoring&) = default;

 private:
  std::vector<GraphIndex> assignment_;
};

struct Violation {
  GraphIndex graph = 0;
  Edge edge;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<Vertex> uncovered;
};

inline VerificationReport verify_coloring(const GraphSystem& s, const CooperativeColoring& c) {
  if (c.size() != s.vertex_count())
    throw Error(ErrorCode::LengthMismatch, "coloring has " + std::to_string(c.size()) +
                                               " entries for n=" + std::to_string(s.vertex_count()));
  for (Vertex v = 0; v < c.size(); ++v)
    if (c[v] >= s.graph_count())
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " assigned graph " +
                                                  std::to_string(c[v]) +
                                                  " with m=" + std::to_string(s.graph_count()));
  VerificationReport r;
  for (GraphIndex j = 0; j < s.graph_count(); ++j)
    for (const Edge& e : s.graph(j).edges())
      if (c[e.u] == j && c[e.v] == j) r.violations.push_back({j, e});
  r.valid = r.violations.empty();
  return r;
}

/// Set-form check; sets may overlap and may leave vertices uncovered.
inline VerificationReport verify_sets(const GraphSystem& s,
                                      const std::vector<std::vector<Vertex>>& sets) {
  if (sets.size() != s.graph_count())
    throw Error(ErrorCode::LengthMismatch, std::to_string(sets.size()) + " sets for m=" +
                                               std::to_string(s.graph_count()));
  const std::size_t n = s.vertex_count();
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<std::uint8_t> in(n, 0);
  VerificationReport r;
  for (GraphIndex j = 0; j < sets.size(); ++j) {
    std::fill(in.begin(), in.end(), 0);
    for (Vertex v : sets[j]) {
      if (v >= n) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
      in[v] = 1;
      covered[v] = 1;
    }
    for (const Edge& e : s.graph(j).edges())
      if (in[e.u] && in[e.v]) r.violations.push_back({j, e});
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) r.uncovered.push_back(v);
  r.valid = r.violations.empty() && r.uncovered.empty();
  return r;
}

}  // namespace coopcolor
