#include "locgame/evidence.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace locgame {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// Class bitsets of t under the probe, in canonical (lexicographic vector)
// order. Kept local so the verifiers do not lean on the solver's machinery.
std::vector<VertexSet> classes_of(const DistanceMatrix& dm, VertexSet t, const ProbeSet& u) {
  std::vector<VertexSet> cls{t};
  std::vector<VertexSet> next;
  for (int p : u) {
    next.clear();
    for (VertexSet c : cls) {
      std::array<VertexSet, 66> byd{};  // [0] = unreachable, [d+1] = distance d
      for (int v : c) byd[static_cast<std::size_t>(dm.at(p, v) + 1)].add(v);
      for (const VertexSet& m : byd)
        if (!m.empty()) next.push_back(m);
    }
    std::swap(cls, next);
  }
  return cls;
}

bool probe_well_formed(const ProbeSet& u, int n, int k) {
  if (static_cast<int>(u.size()) != std::min(k, n)) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= n) return false;
    if (i > 0 && u[i] <= u[i - 1]) return false;
  }
  return true;
}

}  // namespace

bool verify_strategy(const Graph& g, int k, Variant variant, const StrategyTree& tree,
                     std::string* why) {
  const int n = g.order();
  if (tree.nodes.empty()) return fail(why, "strategy: no nodes");
  if (tree.n != n || tree.cops != k || tree.variant != variant)
    return fail(why, "strategy: header does not match the queried instance");
  if (tree.nodes[0].territory != g.vertices())
    return fail(why, "strategy: root territory is not V");

  DistanceMatrix dm = all_pairs_distances(g);
  const std::size_t count = tree.nodes.size();
  std::vector<std::uint8_t> reached(count, 0);
  std::vector<int> stack{0};
  reached[0] = 1;

  while (!stack.empty()) {
    int ni = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[static_cast<std::size_t>(ni)];
    const std::string at = "node " + std::to_string(ni);

    if (node.territory.empty() || !node.territory.is_subset_of(g.vertices()))
      return fail(why, at + ": bad territory");
    if (!probe_well_formed(node.probe, n, k))
      return fail(why, at + ": malformed probe set");

    auto classes = partition_by_probe(g, dm, node.territory, node.probe);
    if (classes.size() != node.edges.size())
      return fail(why, at + ": edge count differs from class count");

    int worst_child = 0;
    bool all_captured = true;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const auto& [dv, cls] = classes[ci];
      const auto& edge = node.edges[ci];
      if (edge.distances != dv)
        return fail(why, at + ": edge vector mismatch in canonical order");
      if (cls.size() == 1) {
        if (edge.child != StrategyTree::kCaptured)
          return fail(why, at + ": singleton class not marked captured");
        continue;
      }
      all_captured = false;
      if (edge.child < 0 || edge.child >= static_cast<int>(count))
        return fail(why, at + ": child index out of range");
      const auto& child = tree.nodes[static_cast<std::size_t>(edge.child)];
      if (child.territory != expand(g, cls, variant, node.probe))
        return fail(why, at + ": child territory is not the expanded class");
      worst_child = std::max(worst_child, child.rounds);
      if (!reached[static_cast<std::size_t>(edge.child)]) {
        reached[static_cast<std::size_t>(edge.child)] = 1;
        stack.push_back(edge.child);
      }
    }
    int want = all_captured ? 1 : 1 + worst_child;
    if (node.rounds != want)
      return fail(why, at + ": rounds field inconsistent (depth must strictly decrease)");
  }

  for (std::size_t i = 0; i < count; ++i)
    if (!reached[i]) return fail(why, "node " + std::to_string(i) + ": unreachable from root");
  return true;
}

bool verify_certificate(const Graph& g, int k, Variant variant, const RobberCertificate& cert,
                        std::string* why) {
  const int n = g.order();
  if (cert.n != n || cert.cops != k || cert.variant != variant)
    return fail(why, "certificate: header does not match the queried instance");
  if (cert.safe_states.empty()) return fail(why, "certificate: empty state set");

  std::unordered_set<std::uint64_t> safe;
  for (VertexSet s : cert.safe_states) {
    if (s.size() < 2 || !s.is_subset_of(g.vertices()))
      return fail(why, "certificate: state must have >= 2 vertices inside V");
    safe.insert(s.bits());
  }
  if (!safe.contains(g.vertices().bits()))
    return fail(why, "certificate: V missing from the safe set");

  DistanceMatrix dm = all_pairs_distances(g);
  auto probes = all_probe_sets(n, k);
  for (VertexSet t : cert.safe_states) {
    for (const auto& u : probes) {
      bool survives = false;
      for (VertexSet cls : classes_of(dm, t, u)) {
        if (cls.size() < 2) continue;
        if (safe.contains(expand(g, cls, variant, u).bits())) {
          survives = true;
          break;
        }
      }
      if (!survives) {
        std::ostringstream msg;
        msg << "certificate: state {";
        for (int v : t) msg << v << ",";
        msg << "} loses to probe {";
        for (int v : u) msg << v << ",";
        msg << "}";
        return fail(why, msg.str());
      }
    }
  }
  return true;
}

nlohmann::ordered_json strategy_to_json(const StrategyTree& t) {
  nlohmann::ordered_json j;
  j["type"] = "strategy";
  j["n"] = t.n;
  j["cops"] = t.cops;
  j["variant"] = variant_name(t.variant);
  j["depth"] = t.depth();
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& node : t.nodes) {
    nlohmann::ordered_json nj;
    nj["territory"] = node.territory.to_vector();
    nj["probe"] = node.probe;
    nj["rounds"] = node.rounds;
    nlohmann::ordered_json kids;
    for (const auto& e : node.edges) {
      if (e.child == StrategyTree::kCaptured)
        kids[distance_vector_to_string(e.distances)] = "captured";
      else
        kids[distance_vector_to_string(e.distances)] = e.child;
    }
    nj["children"] = std::move(kids);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

namespace {

DistanceVector parse_distance_key(const std::string& key) {
  DistanceVector dv;
  std::istringstream in(key);
  std::string tok;
  while (std::getline(in, tok, ','))
    dv.push_back(tok == "inf" ? DistanceMatrix::kUnreachable : std::stoi(tok));
  return dv;
}

}  // namespace

StrategyTree strategy_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "strategy")
    throw std::invalid_argument("strategy_from_json: not a strategy payload");
  StrategyTree t;
  t.n = j.at("n").get<int>();
  t.cops = j.at("cops").get<int>();
  t.variant = variant_from_name(j.at("variant").get<std::string>());
  for (const auto& nj : j.at("nodes")) {
    StrategyTree::Node node;
    for (int v : nj.at("territory")) node.territory.add(v);
    node.probe = nj.at("probe").get<ProbeSet>();
    node.rounds = nj.at("rounds").get<int>();
    std::vector<StrategyTree::Edge> edges;
    for (const auto& [key, val] : nj.at("children").items()) {
      StrategyTree::Edge e;
      e.distances = parse_distance_key(key);
      e.child = val.is_string() ? StrategyTree::kCaptured : val.get<int>();
      edges.push_back(std::move(e));
    }
    // JSON object order may not survive a round trip; restore canonical
    // (lexicographic vector) order.
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.distances < b.distances; });
    node.edges = std::move(edges);
    t.nodes.push_back(std::move(node));
  }
  return t;
}

nlohmann::ordered_json certificate_to_json(const RobberCertificate& c) {
  nlohmann::ordered_json j;
  j["type"] = "certificate";
  j["n"] = c.n;
  j["cops"] = c.cops;
  j["variant"] = variant_name(c.variant);
  auto states = nlohmann::ordered_json::array();
  for (VertexSet s : c.safe_states) states.push_back(s.to_vector());
  j["safeStates"] = std::move(states);
  return j;
}

RobberCertificate certificate_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "certificate")
    throw std::invalid_argument("certificate_from_json: not a certificate payload");
  RobberCertificate c;
  c.n = j.at("n").get<int>();
  c.cops = j.at("cops").get<int>();
  c.variant = variant_from_name(j.at("variant").get<std::string>());
  for (const auto& sj : j.at("safeStates")) {
    VertexSet s;
    for (int v : sj) s.add(v);
    c.safe_states.push_back(s);
  }
  return c;
}

namespace {

std::string set_label(VertexSet s, const Graph& g) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

std::string strategy_to_dot(const StrategyTree& t, const Graph& g) {
  std::ostringstream out;
  out << "digraph strategy {\n  rankdir=TB;\n  node [shape=box];\n";
  int cap = 0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    out << "  n" << i << " [label=\"" << set_label(node.territory, g) << "\\nprobe {";
    for (std::size_t pi = 0; pi < node.probe.size(); ++pi)
      out << (pi ? "," : "") << g.label(node.probe[pi]);
    out << "}\"];\n";
    for (const auto& e : node.edges) {
      if (e.child == StrategyTree::kCaptured) {
        out << "  cap" << cap << " [label=\"captured\", shape=ellipse];\n";
        out << "  n" << i << " -> cap" << cap << " [label=\"" << distance_vector_to_string(e.distances)
            << "\"];\n";
        ++cap;
      } else {
        out << "  n" << i << " -> n" << e.child << " [label=\""
            << distance_vector_to_string(e.distances) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string certificate_to_dot(const RobberCertificate& c, const Graph& g) {
  DistanceMatrix dm = all_pairs_distances(g);
  auto probes = all_probe_sets(c.n, c.cops);
  std::unordered_set<std::uint64_t> safe;
  for (VertexSet s : c.safe_states) safe.insert(s.bits());

  std::ostringstream out;
  out << "digraph certificate {\n  node [shape=box];\n";
  std::vector<std::uint64_t> order;
  for (VertexSet s : c.safe_states) order.push_back(s.bits());
  auto id_of = [&order](std::uint64_t bits) {
    return std::distance(order.begin(), std::find(order.begin(), order.end(), bits));
  };
  for (VertexSet s : c.safe_states)
    out << "  s" << id_of(s.bits()) << " [label=\"" << set_label(s, g) << "\"];\n";
  // One witness edge per (state, lexicographically first probe): the class
  // the robber keeps against that probe.
  for (VertexSet s : c.safe_states) {
    if (probes.empty()) break;
    const auto& u = probes.front();
    for (VertexSet cls : classes_of(dm, s, u)) {
      if (cls.size() < 2) continue;
      VertexSet nxt = expand(g, cls, c.variant, u);
      if (safe.contains(nxt.bits())) {
        out << "  s" << id_of(s.bits()) << " -> s" << id_of(nxt.bits()) << ";\n";
        break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace locgame
