#pragma once

#include <string>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

// graph6 text codec (McKay format): one size byte (n+63, n <= 62) followed by
// the column-major upper-triangle bit field, 6 bits per character, each
// character offset by 63, padded with zero bits.

Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// One graph per nonempty line.
std::vector<Graph> parse_graph6_lines(const std::string& text);

}  // namespace locgame
