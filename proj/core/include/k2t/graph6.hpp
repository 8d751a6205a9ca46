#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "k2t/graph.hpp"

namespace k2t {

/// Decodes one graph6 line. An optional ">>graph6<<" header and a single
/// trailing '\n' (or "\r\n") are accepted; anything else after the bit
/// section is an error. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes g's labeled adjacency. No canonical relabeling is applied.
std::string write_graph6(const Graph& g);

/// Calls `sink` for each non-blank graph6 line of `in`. Parse errors are
/// rethrown with the 1-based line number prefixed.
void read_graph6_stream(std::istream& in, const std::function<void(Graph)>& sink);

}  // namespace k2t
