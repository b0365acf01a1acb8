#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sphere_chroma/graph.hpp"

namespace sphere_chroma {

inline constexpr std::string_view kGraphFormatTag = "sphere-chroma-graph-v1";

/// Canonical JSON document (edges sorted, single line, trailing newline).
std::string graph_to_json(const Graph& g);

/// Parses the JSON graph schema. Throws ParseError naming the offending line
/// or field; self-loops and duplicate edges are rejected.
Graph graph_from_json(std::string_view text);

/// CNF that is satisfiable iff g is k-colorable. Variable for (v, c) is
/// v*k + c + 1; at-least-one clause per vertex, one conflict clause per
/// edge and color.
std::string export_dimacs_kcolor(const Graph& g, unsigned k);

/// Undirected DOT, vertices in label order, edges in index order.
std::string export_dot(const Graph& g, const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace sphere_chroma
