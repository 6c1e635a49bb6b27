#pragma once

#include <filesystem>
#include <iosfwd>

#include "modd/graph.hpp"

namespace modd {

// Plain-text edge list: a header line "n m" followed by m lines "u v"
// with 0-based endpoints. Lines starting with '#' are comments. Writing
// normalizes every edge to u < v and sorts the lines, so write/read
// round-trips to an identical edge set.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace modd
