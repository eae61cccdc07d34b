#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "locgame/game.hpp"

namespace locgame {

// Winning evidence for the cops: a probe per territory and one outgoing edge
// per distance-vector class. Shared sub-strategies are stored once, so the
// node array forms a rooted DAG; replaying it is still tree-shaped play.
struct StrategyTree {
  static constexpr int kCaptured = -1;

  struct Edge {
    DistanceVector distances;
    int child = kCaptured;  // node index, or kCaptured for singleton classes
  };
  struct Node {
    VertexSet territory;  // candidate set at the cop turn, already expanded
    ProbeSet probe;
    std::vector<Edge> edges;  // canonical class order
    int rounds = 0;           // worst-case rounds to capture from this node
  };

  int n = 0;
  int cops = 0;
  Variant variant = Variant::standard;
  std::vector<Node> nodes;  // nodes[0] = root with territory V

  int depth() const { return nodes.empty() ? 0 : nodes[0].rounds; }
};

// Winning evidence for the robber: a family of territories (cop-turn
// convention, already expanded) containing V and closed under best response:
// every probe leaves some class of size >= 2 whose expansion stays inside.
struct RobberCertificate {
  int n = 0;
  int cops = 0;
  Variant variant = Variant::standard;
  std::vector<VertexSet> safe_states;  // ascending bit patterns; contains V
};

// Replays the tree against every robber class choice; true iff each node's
// edges exactly match the classes of its territory under its probe, singleton
// classes are Captured, non-singleton children carry the expanded class, and
// every play ends in capture. On failure *why names the offending node.
bool verify_strategy(const Graph& g, int k, Variant variant, const StrategyTree& tree,
                     std::string* why = nullptr);

// True iff V is present and every safe state survives every probe set.
bool verify_certificate(const Graph& g, int k, Variant variant, const RobberCertificate& cert,
                        std::string* why = nullptr);

nlohmann::ordered_json strategy_to_json(const StrategyTree& t);
StrategyTree strategy_from_json(const nlohmann::json& j);
nlohmann::ordered_json certificate_to_json(const RobberCertificate& c);
RobberCertificate certificate_from_json(const nlohmann::json& j);

std::string strategy_to_dot(const StrategyTree& t, const Graph& g);
std::string certificate_to_dot(const RobberCertificate& c, const Graph& g);

}  // namespace locgame
