#include "locgame/reference.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace locgame {

namespace {

// Everything here is written for clarity, not speed: territories are plain
// uint64 masks, partitions go through std::map on full distance vectors, and
// the fixpoint is a sweep-until-stable loop over a sorted state list.

std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v) && d[static_cast<std::size_t>(v)] == -1) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

void combinations_rec(int n, int k, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    combinations_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool reference_cop_win(const Graph& g, int k, Variant variant) {
  if (k < 1) throw std::invalid_argument("reference_cop_win: need k >= 1");
  if (!is_connected(g)) throw std::invalid_argument("reference_cop_win: disconnected input");

  const int n = g.order();
  const auto dist = bfs_distances(g);

  std::vector<std::vector<int>> probes;
  {
    std::vector<int> cur;
    combinations_rec(n, std::min(k, n), 0, cur, probes);
  }

  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  auto popcount = [](std::uint64_t x) {
    int c = 0;
    while (x) {
      x &= x - 1;
      ++c;
    }
    return c;
  };

  auto neighborhood = [&](std::uint64_t t) {
    std::uint64_t out = t;
    for (int v = 0; v < n; ++v)
      if ((t >> v) & 1)
        for (int w = 0; w < n; ++w)
          if (g.adjacent(v, w)) out |= std::uint64_t{1} << w;
    return out;
  };

  // Successor territories of t under one probe: expansions of the classes
  // with two or more candidates.
  auto successors = [&](std::uint64_t t, const std::vector<int>& probe) {
    std::map<std::vector<int>, std::uint64_t> classes;
    for (int v = 0; v < n; ++v) {
      if (!((t >> v) & 1)) continue;
      std::vector<int> key;
      for (int p : probe) key.push_back(dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]);
      classes[key] |= std::uint64_t{1} << v;
    }
    std::vector<std::uint64_t> out;
    for (const auto& [key, cls] : classes) {
      if (popcount(cls) < 2) continue;
      std::uint64_t next = neighborhood(cls);
      if (variant == Variant::no_backtrack)
        for (int p : probe) next &= ~(std::uint64_t{1} << p);
      out.push_back(next);
    }
    return out;
  };

  // Discover every reachable territory.
  std::set<std::uint64_t> seen{all};
  std::vector<std::uint64_t> queue{all};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint64_t t = queue[qi];
    for (const auto& probe : probes)
      for (std::uint64_t s : successors(t, probe))
        if (seen.insert(s).second) queue.push_back(s);
  }

  // Value iteration: a territory is winning once some probe leaves no class
  // of size >= 2 outside the winning set. Repeat until stable.
  std::map<std::uint64_t, bool> win;
  for (std::uint64_t t : seen) win[t] = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t t : seen) {
      if (win[t]) continue;
      bool can = false;
      for (const auto& probe : probes) {
        bool ok = true;
        for (std::uint64_t s : successors(t, probe))
          if (!win[s]) {
            ok = false;
            break;
          }
        if (ok) {
          can = true;
          break;
        }
      }
      if (can) {
        win[t] = true;
        changed = true;
      }
    }
  }
  return win[all];
}

}  // namespace locgame
