#pragma once

#include <optional>
#include <string>

#include "cliquehit/graph.hpp"

namespace cliquehit {

enum class GraphFormat { EdgeList, Graph6, Json };

// Picks a format from the file extension: .g6/.graph6 -> Graph6,
// .json -> Json, anything else -> EdgeList.
GraphFormat sniff_format(const std::string& path);

// Edge-list text: header "p <n> <m>", then m lines "e <u> <v>", 0-indexed.
// Lines starting with 'c' and blank lines are ignored on read.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Standard graph6 ASCII encoding (single line; ">>graph6<<" header tolerated).
Graph parse_graph6(const std::string& text);
std::string format_graph6(const Graph& g);

// {"n": <int>, "edges": [[u, v], ...]}
Graph parse_graph_json(const std::string& text);
std::string format_graph_json(const Graph& g);

Graph read_graph(const std::string& path, std::optional<GraphFormat> fmt = std::nullopt);
void write_graph(const std::string& path, const Graph& g,
                 std::optional<GraphFormat> fmt = std::nullopt);

std::string format_graph(const Graph& g, GraphFormat fmt);
Graph parse_graph(const std::string& text, GraphFormat fmt);

}  // namespace cliquehit
