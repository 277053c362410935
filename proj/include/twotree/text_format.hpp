#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "twotree/graph.hpp"

namespace twotree {

// Edge list:     "n m" then m lines "u v" with u < v.
// Construction:  "n" then n - 2 lines "v x y" in build order (v = 2, 3, ...).
// Tree stream:   "# n=<n> expected=<count>" then one tree per line, edges
//                "u-v" sorted and space separated.
// All formats are ASCII with LF line ends. Parsers throw Error(Parse).

void write_edge_list(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);

void write_construction(std::ostream& out, const TwoTreeConstruction& c);
TwoTreeConstruction read_construction(std::istream& in);

/// Reads either format, deciding by the number of fields on the first line.
std::variant<SimpleGraph, TwoTreeConstruction> read_graph_file(std::istream& in);

void write_tree_stream_header(std::ostream& out, std::size_t n,
                              const std::optional<std::string>& expected);

/// Writes one tree line; edges need not be sorted.
void write_tree_line(std::ostream& out, std::span<const Edge> edges);

std::string format_tree(std::span<const Edge> edges);

}  // namespace twotree
