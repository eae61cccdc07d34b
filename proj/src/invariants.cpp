#include "locgame/invariants.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace locgame {

namespace {

// Twin vertices (identical neighborhoods outside the pair) look alike to
// every other vertex, so a resolving set must contain one of each twin pair.
std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexSet nu = g.neighbors(u) - VertexSet::single(v);
      VertexSet nv = g.neighbors(v) - VertexSet::single(u);
      if (nu == nv) pairs.emplace_back(u, v);
    }
  return pairs;
}

bool resolves(const DistanceMatrix& dm, int n, const std::vector<int>& probes) {
  // Distinct distance vectors <=> no vertex pair equal on every probe.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (int p : probes)
        if (dm.at(p, u) != dm.at(p, v)) {
          same = false;
          break;
        }
      if (same) return false;
    }
  return true;
}

}  // namespace

int metric_dimension(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw SizeLimitError("metric_dimension: n > 20");
  if (n == 0) throw std::invalid_argument("metric_dimension: empty graph");
  if (n == 1) return 1;

  DistanceMatrix dm = all_pairs_distances(g);
  auto twins = twin_pairs(g);
  int lower = 1;
  {
    // Disjoint twin pairs each force a distinct probe: greedy matching.
    VertexSet used;
    int matching = 0;
    for (auto [u, v] : twins)
      if (!used.contains(u) && !used.contains(v)) {
        used.add(u);
        used.add(v);
        ++matching;
      }
    lower = std::max(lower, matching);
  }

  for (int k = lower; k < n; ++k) {
    std::vector<int> probes(static_cast<std::size_t>(k));
    std::iota(probes.begin(), probes.end(), 0);
    for (;;) {
      VertexSet chosen;
      for (int p : probes) chosen.add(p);
      bool feasible = true;
      for (auto [u, v] : twins)
        if (!chosen.contains(u) && !chosen.contains(v)) {
          feasible = false;
          break;
        }
      if (feasible && resolves(dm, n, probes)) return k;
      int i = k - 1;
      while (i >= 0 && probes[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++probes[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        probes[static_cast<std::size_t>(j)] = probes[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return n - 1;  // probing all but one vertex always resolves
}

namespace {

bool color_rec(const Graph& g, const std::vector<int>& order, std::size_t pos,
               std::vector<int>& color, int used, int limit) {
  if (pos == order.size()) return true;
  int v = order[pos];
  VertexSet taken_set = g.neighbors(v);
  std::uint32_t taken = 0;
  for (int w : taken_set)
    if (color[static_cast<std::size_t>(w)] >= 0) taken |= 1u << color[static_cast<std::size_t>(w)];
  int tryable = std::min(used + 1, limit);
  for (int c = 0; c < tryable; ++c) {
    if ((taken >> c) & 1) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (color_rec(g, order, pos + 1, color, std::max(used, c + 1), limit)) return true;
  }
  color[static_cast<std::size_t>(v)] = -1;
  return false;
}

int greedy_clique_lower_bound(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&g](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = n > 0 ? 1 : 0;
  for (int s : order) {
    VertexSet clique = VertexSet::single(s);
    for (int v : g.neighbors(s)) {
      if (clique.is_subset_of(g.neighbors(v))) clique.add(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

}  // namespace

std::vector<int> find_coloring(const Graph& g, int colors) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&g](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  if (!color_rec(g, order, 0, color, 0, colors)) return {};
  return color;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("chromatic_number: empty graph");
  if (g.edge_count() == 0) return 1;
  GraphStats st = graph_stats(g);
  if (st.bipartite) return 2;
  if (n > 18) throw SizeLimitError("chromatic_number: n > 18");

  for (int k = std::max(3, greedy_clique_lower_bound(g)); k < n; ++k)
    if (!find_coloring(g, k).empty()) return k;
  return n;
}

int pathwidth(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("pathwidth: empty graph");
  if (n > 18) throw SizeLimitError("pathwidth: n > 18");

  // Vertex separation number equals pathwidth: over all orders, minimize the
  // maximum number of placed vertices that still see an unplaced neighbor.
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    nbr[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());

  std::vector<std::uint8_t> f(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (nbr[static_cast<std::size_t>(u)] & ~s) ++boundary;
    }
    int best = 255;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      std::uint32_t prev = s & ~(rest & -rest);
      best = std::min(best, static_cast<int>(f[prev]));
    }
    f[s] = static_cast<std::uint8_t>(std::max(best, boundary));
  }
  return f[full];
}

}  // namespace locgame
