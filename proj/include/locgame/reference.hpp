#pragma once

#include "locgame/game.hpp"
#include "locgame/graph.hpp"

namespace locgame {

// Independent oracle for cop_win: plain value iteration over every reachable
// territory, serial, no pruning, no shared machinery with the main engine
// (its own BFS distances, partitioning and state bookkeeping). Intended for
// small graphs (n <= 10 or so).
bool reference_cop_win(const Graph& g, int k, Variant variant = Variant::standard);

}  // namespace locgame
