#pragma once

#include <string>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

// Edge-list text format: one edge per line, two whitespace-separated vertex
// tokens; lines beginning '#' are comments.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Assignment files are JSON with sorted keys so serialization is diff-stable:
//   {"lists": {"v": [1,2]}, "matchings": {"u v": [[1,2],[2,1]]}}
// Matching keys name the endpoints in lexicographic order.
MatchingAssignment parse_assignment(const Graph& g, const std::string& json_text);
std::string serialize_assignment(const MatchingAssignment& m);

Coloring parse_coloring(const Graph& g, const std::string& json_text);
std::string serialize_coloring(const Graph& g, const Coloring& c);

} // namespace dpcolor
