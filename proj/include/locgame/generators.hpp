#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

enum class Family { path, cycle, star, complete, complete_bipartite, hypercube, kneser };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Standard families with a documented canonical vertex order:
//   path(n), cycle(n):       vertices 0..n-1 along the walk
//   star(n):                 center 0, leaves 1..n (order n+1)
//   complete(n)
//   complete_bipartite(a,b): side A = 0..a-1, side B = a..a+b-1
//   hypercube(d):            vertex i carries the binary expansion of i
//   kneser(k,n):             k-subsets of {0..n-1} in colexicographic order,
//                            adjacent when disjoint; labeled "{a,b,..}"
Graph generate(Family f, const std::vector<int>& params);

// Every connected labeled graph on n vertices (1 <= n <= 6), each exactly
// once, ordered by adjacency bitmask. No isomorphism reduction.
std::vector<Graph> enumerate_connected_graphs(int n);

// One representative per isomorphism class of free trees on n vertices
// (1 <= n <= 9): labeled trees from Pruefer sequences, deduplicated by the
// centroid-rooted canonical form.
std::vector<Graph> enumerate_trees(int n);

// Canonical form of a tree (rooted at its centroid(s)); equal strings iff
// isomorphic trees.
std::string tree_canonical_form(const Graph& tree);

// True iff pattern embeds as a subgraph of host; both inputs must be trees.
bool contains_subtree(const Graph& host, const Graph& pattern);

// Deterministic corpus of connected random graphs, edge probability 1/2,
// orders cycling through ns. Same seed, same graphs.
std::vector<Graph> random_connected_graphs(int count, const std::vector<int>& ns,
                                           std::uint64_t seed);

}  // namespace locgame
