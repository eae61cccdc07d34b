#include "locgame/game.hpp"

#include <algorithm>
#include <map>

namespace locgame {

Variant variant_from_name(const std::string& name) {
  if (name == "standard") return Variant::standard;
  if (name == "no-backtrack" || name == "no_backtrack") return Variant::no_backtrack;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string variant_name(Variant v) {
  return v == Variant::standard ? "standard" : "no-backtrack";
}

std::vector<std::pair<DistanceVector, Territory>> partition_by_probe(const Graph& g,
                                                                     const DistanceMatrix& dm,
                                                                     Territory t,
                                                                     const ProbeSet& u) {
  if (t.empty()) throw std::invalid_argument("partition_by_probe: empty territory");
  if (!t.is_subset_of(g.vertices()))
    throw std::invalid_argument("partition_by_probe: territory not within the graph");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= g.order())
      throw std::invalid_argument("partition_by_probe: probe vertex out of range");
    if (i > 0 && u[i] <= u[i - 1])
      throw std::invalid_argument("partition_by_probe: probe set must be strictly increasing");
  }

  // Unreachable (-1) sorts before every finite distance, giving the
  // documented lexicographic class order directly from std::map.
  std::map<DistanceVector, Territory> classes;
  for (int v : t) {
    DistanceVector key;
    key.reserve(u.size());
    for (int p : u) key.push_back(dm.at(p, v));
    classes[key].add(v);
  }
  std::vector<std::pair<DistanceVector, Territory>> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.emplace_back(key, cls);
  return out;
}

Territory expand(const Graph& g, Territory t, Variant variant, const ProbeSet& last_probe) {
  if (t.empty()) throw std::invalid_argument("expand: empty territory");
  Territory out = g.closed_neighborhood(t);
  if (variant == Variant::no_backtrack)
    for (int p : last_probe) out.remove(p);
  return out;
}

std::vector<ProbeSet> all_probe_sets(int n, int k) {
  const int m = std::min(k, n);
  std::vector<ProbeSet> out;
  ProbeSet cur(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::string distance_vector_to_string(const DistanceVector& dv) {
  std::string out;
  for (std::size_t i = 0; i < dv.size(); ++i) {
    if (i) out += ",";
    out += dv[i] == DistanceMatrix::kUnreachable ? "inf" : std::to_string(dv[i]);
  }
  return out;
}

}  // namespace locgame
