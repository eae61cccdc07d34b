#pragma once

#include <optional>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

// Minimum resolving set size: fewest probe vertices giving every vertex a
// distinct distance vector (a win in one round). Exhaustive by increasing
// set size with twin pruning; n <= 20. The single-vertex graph reports 1,
// matching the one-probe capture the game needs there.
int metric_dimension(const Graph& g);

// Exact chromatic number, n <= 18 (bipartite and edgeless graphs of any
// order are answered directly).
int chromatic_number(const Graph& g);

// A proper coloring with exactly chromatic_number(g) colors.
std::vector<int> find_coloring(const Graph& g, int colors);

// Exact pathwidth via the vertex-separation subset DP; n <= 18.
int pathwidth(const Graph& g);

}  // namespace locgame
