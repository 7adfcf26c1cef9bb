#pragma once

// Graph file format (UTF-8 JSON):
//
//   { "vertices": ["x1", "x2", ...],
//     "edges":    [["x1", "x2"], ...] }
//
// Both fields are required and no other field is accepted.

#include <string>
#include <string_view>

#include "coverlab/graph.hpp"

namespace coverlab {

/// Throws InputError carrying the line/column or field path of the problem.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Deterministic serialization in the same format, two-space indented.
std::string format_graph(const Graph& g);

}  // namespace coverlab
