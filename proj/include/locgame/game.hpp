#pragma once

#include <string>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

// Game rules. In the no-backtrack variant the robber may not move onto a
// vertex probed in the current round.
enum class Variant { standard, no_backtrack };

Variant variant_from_name(const std::string& name);
std::string variant_name(Variant v);

// Robber territory: the candidate set at a cop turn, stored already expanded.
using Territory = VertexSet;

// Sorted distinct probe vertices, length min(k, n).
using ProbeSet = std::vector<int>;

// One distance per probe vertex, in probe order; kUnreachable for vertices
// in another component.
using DistanceVector = std::vector<int>;

// Splits t into the classes of equal distance vectors to the probe set.
// Classes are returned in lexicographic order of their vectors, with
// unreachable sorting before distance 0. Each class is nonempty, the classes
// are disjoint, they cover t, and their vectors are pairwise distinct.
std::vector<std::pair<DistanceVector, Territory>> partition_by_probe(const Graph& g,
                                                                     const DistanceMatrix& dm,
                                                                     Territory t,
                                                                     const ProbeSet& u);

// Robber move: the closed neighborhood of t, minus the probed vertices in
// the no-backtrack variant. An empty result means immediate capture; it can
// only arise for territories inside the probe's neighborhood.
Territory expand(const Graph& g, Territory t, Variant variant, const ProbeSet& last_probe);

// All C(n, min(k,n)) probe sets in lexicographic order.
std::vector<ProbeSet> all_probe_sets(int n, int k);

std::string distance_vector_to_string(const DistanceVector& dv);

}  // namespace locgame
