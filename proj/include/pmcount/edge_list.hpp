#pragma once

#include <iosfwd>
#include <string_view>

#include "pmcount/graph.hpp"
#include "pmcount/orientation.hpp"

namespace pmcount {

// Text format: '#' lines are comments; the first other line is "n m",
// followed by m lines "u v" (undirected) or "u -> v" (oriented), 0-based.
// Malformed input throws Error(parse) naming the line.

Graph read_edge_list(std::istream& in);
OrientedGraph read_oriented_edge_list(std::istream& in);

/// Each line of `comment` is written prefixed with "# ".
void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment = {});
void write_oriented_edge_list(std::ostream& out, const OrientedGraph& d,
                              std::string_view comment = {});

}  // namespace pmcount
