#pragma once

#include <iosfwd>
#include <string>

#include "jdv/graph.hpp"

namespace jdv {

// Edge-list text format:
//
//   n <integer>
//   u v
//   ...
//
// Vertices are 1-indexed. Blank lines and lines starting with '#' are ignored.

Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace jdv
