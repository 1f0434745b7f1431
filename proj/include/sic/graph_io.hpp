#pragma once

#include <string>

#include "sic/graph.hpp"

namespace sic {

enum class GraphFormat { EdgeList, Graph6 };

/// Accepts either an edge list ("n m" header, then m lines "u v") or a
/// single graph6 line; the format is detected from the first line.
Graph parse_graph(const std::string& text);
Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);

/// Canonical text: edges sorted, one per line, trailing newline.
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::EdgeList);
std::string to_graph6(const Graph& g);

/// Format chosen by extension: ".g6" is graph6, anything else an edge list.
GraphFormat format_for_path(const std::string& path);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sic
