#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamtough/graph.hpp"

namespace hamtough {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line (trailing newline / CR tolerated, optional
/// ">>graph6<<" prefix skipped). Nonzero padding bits and trailing bytes are
/// rejected so that to_graph6(parse_graph6(s)) == s for every accepted s.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v", zero-based.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// Reads a single graph from text that is either one graph6 line or an edge list.
Graph parse_graph_text(std::string_view text);

}  // namespace hamtough
