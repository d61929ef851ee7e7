#pragma once

#include <iosfwd>
#include <string>

#include "graphlogic/graph.hpp"

namespace graphlogic {

// edge-list: header "p <n> <m>", then m lines "<u> <v>", 0-based; '#' comments.
// dimacs:    "c" comments, "p edge <n> <m>", "e <u> <v>" lines, 1-based.
enum class GraphFormat { EdgeList, Dimacs };

GraphFormat graph_format_from_name(const std::string& name);

Graph read_graph(std::istream& in, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

Graph read_graph_string(const std::string& text, GraphFormat format);
std::string write_graph_string(const Graph& g, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);
void write_graph_file(const std::string& path, const Graph& g, GraphFormat format);

}  // namespace graphlogic
