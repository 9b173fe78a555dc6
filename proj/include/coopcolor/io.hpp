#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coopcolor/error.hpp"
#include "coopcolor/graph_system.hpp"
#include "json.hpp"

namespace coopcolor {

inline constexpr int kFormatVersion = 1;

/// A graph system plus free-form generator metadata, as stored on disk.
///
/// Layout (version 1), one graph per line:
///
///   {
///     "version": 1,
///     "n": 4,
///     "graphs": [
///       {"id": 0, "edges": [[0,1],[1,2],[2,3]], "roots": [0]},
///       {"id": 1, "edges": [[0,2],[1,2],[1,3]], "left": [0,1]}
///     ],
///     "metadata": {"generator":"tree-lb","m":2}
///   }
///
/// emit(parse(emit(x))) reproduces emit(x) byte for byte.
struct InstanceFile {
  GraphSystem system;
  nlohmann::json metadata = nlohmann::json::object();
};

namespace detail {

inline void emit_vertex_list(std::ostream& os, const std::vector<Vertex>& vs) {
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << ']';
}

[[noreturn]] inline void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

inline std::uint64_t as_index(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_fail(where + ": expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v >= kNoVertex) parse_fail(where + ": value too large");
  return v;
}

inline std::vector<Vertex> as_vertex_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(static_cast<Vertex>(as_index(x, where)));
  return out;
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
}

inline void check_version(const nlohmann::json& doc) {
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (!doc.contains("version") || doc["version"] != kFormatVersion)
    parse_fail("missing or unsupported \"version\"");
}

}  // namespace detail

inline std::string emit_instance(const InstanceFile& file) {
  const GraphSystem& s = file.system;
  std::ostringstream os;
  os << "{\n  \"version\": " << kFormatVersion << ",\n  \"n\": " << s.vertex_count()
     << ",\n  \"graphs\": [";
  for (GraphIndex j = 0; j < s.graph_count(); ++j) {
    os << (j ? ",\n" : "\n") << "    {\"id\": " << j << ", \"edges\": [";
    const auto& edges = s.graph(j).edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
      os << (k ? "," : "") << '[' << edges[k].u << ',' << edges[k].v << ']';
    os << ']';
    const auto& ann = s.annotation(j);
    if (ann.roots) {
      os << ", \"roots\": ";
      detail::emit_vertex_list(os, *ann.roots);
    }
    if (ann.left) {
      os << ", \"left\": ";
      detail::emit_vertex_list(os, *ann.left);
    }
    os << '}';
  }
  os << (s.graph_count() ? "\n  ]" : "]") << ",\n  \"metadata\": "
     << (file.metadata.is_null() ? std::string("{}") : file.metadata.dump()) << "\n}\n";
  return os.str();
}

inline InstanceFile parse_instance(std::string_view text) {
  const nlohmann::json doc = detail::parse_json(text);
  detail::check_version(doc);
  if (!doc.contains("n")) detail::parse_fail("missing \"n\"");
  const auto n = detail::as_index(doc["n"], "n");
  if (!doc.contains("graphs") || !doc["graphs"].is_array()) detail::parse_fail("missing \"graphs\" array");

  std::vector<GraphSpec> specs;
  for (std::size_t j = 0; j < doc["graphs"].size(); ++j) {
    const auto& g = doc["graphs"][j];
    const std::string where = "graphs[" + std::to_string(j) + "]";
    if (!g.is_object()) detail::parse_fail(where + ": expected an object");
    if (!g.contains("id") || detail::as_index(g["id"], where + ".id") != j)
      detail::parse_fail(where + ": \"id\" must equal the position " + std::to_string(j));
    if (!g.contains("edges") || !g["edges"].is_array()) detail::parse_fail(where + ": missing \"edges\"");
    GraphSpec spec;
    spec.edges.reserve(g["edges"].size());
    for (const auto& e : g["edges"]) {
      if (!e.is_array() || e.size() != 2) detail::parse_fail(where + ": each edge is a pair");
      spec.edges.push_back({static_cast<Vertex>(detail::as_index(e[0], where)),
                            static_cast<Vertex>(detail::as_index(e[1], where))});
    }
    if (g.contains("roots")) spec.annotation.roots = detail::as_vertex_list(g["roots"], where + ".roots");
    if (g.contains("left")) spec.annotation.left = detail::as_vertex_list(g["left"], where + ".left");
    specs.push_back(std::move(spec));
  }
  InstanceFile file;
  file.system = GraphSystem(n, std::move(specs));
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) detail::parse_fail("\"metadata\" must be an object");
    file.metadata = doc["metadata"];
  }
  return file;
}

inline std::string emit_coloring(const CooperativeColoring& c) {
  std::ostringstream os;
  os << "{\n  \"version\": " << kFormatVersion << ",\n  \"assignment\": [";
  for (std::size_t v = 0; v < c.size(); ++v) os << (v ? "," : "") << c[static_cast<Vertex>(v)];
  os << "]\n}\n";
  return os.str();
}

/// Assignment entries as written; null marks a vertex left uncovered.
inline std::vector<std::optional<GraphIndex>> parse_coloring_entries(std::string_view text) {
  const nlohmann::json doc = detail::parse_json(text);
  detail::check_version(doc);
  if (!doc.contains("assignment") || !doc["assignment"].is_array())
    detail::parse_fail("missing \"assignment\" array");
  std::vector<std::optional<GraphIndex>> out;
  for (const auto& x : doc["assignment"]) {
    if (x.is_null()) out.emplace_back();
    else out.emplace_back(static_cast<GraphIndex>(detail::as_index(x, "assignment")));
  }
  return out;
}

inline CooperativeColoring parse_coloring(std::string_view text) {
  std::vector<GraphIndex> a;
  for (const auto& x : parse_coloring_entries(text)) {
    if (!x) detail::parse_fail("assignment has an uncovered vertex");
    a.push_back(*x);
  }
  return CooperativeColoring(std::move(a));
}

/// Set form of possibly partial assignment entries, checked against the system.
inline std::vector<std::vector<Vertex>> entries_to_sets(const GraphSystem& s,
                                                        const std::vector<std::optional<GraphIndex>>& entries) {
  if (entries.size() != s.vertex_count())
    throw Error(ErrorCode::LengthMismatch, "coloring has " + std::to_string(entries.size()) +
                                               " entries for n=" + std::to_string(s.vertex_count()));
  std::vector<std::vector<Vertex>> sets(s.graph_count());
  for (Vertex v = 0; v < entries.size(); ++v) {
    if (!entries[v]) continue;
    if (*entries[v] >= s.graph_count())
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " assigned graph " +
                                                  std::to_string(*entries[v]));
    sets[*entries[v]].push_back(v);
  }
  return sets;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace coopcolor
