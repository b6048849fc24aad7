#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "tricirc/graph.hpp"
#include "tricirc/voltage.hpp"

namespace tricirc {

/// Standard graph6: size header N(n) followed by the upper triangle of the
/// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
/// packed six bits per byte, each byte offset by 63. No trailing newline.
std::string encode_graph6(const SimpleGraph& g);

/// Throws Graph6Error on a malformed header, characters outside 63..126,
/// a body of the wrong length, nonzero padding bits, or a size header that
/// uses a longer form than necessary. An optional ">>graph6<<" prefix and
/// trailing whitespace are accepted.
SimpleGraph decode_graph6(std::string_view text);

/// Graphviz, with fibre names and edge tags when present.
std::string to_dot(const SimpleGraph& g);

/// "n m" on the first line, then one "a b" line per edge (a < b).
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph parse_edge_list(std::string_view text);

/// Reads the first graph from text in either graph6 or edge-list form.
SimpleGraph parse_graph(std::string_view text);

/// Text form of a pregraph with voltages:
///
///   pregraph <vertices> <darts> <modulus>
///   dart <id> <beg> <inv> <voltage>      (one line per dart)
///
/// A dart with inv == id is a semi-edge.
std::string to_pregraph_text(const VoltageAssignment& va);
VoltageAssignment parse_pregraph_text(std::string_view text);

}  // namespace tricirc
