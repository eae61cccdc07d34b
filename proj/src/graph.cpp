#include "locgame/graph.hpp"

#include <algorithm>
#include <array>

namespace locgame {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels)) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in 0.." + std::to_string(kMaxVertices));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count must equal graph order");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  VertexSet out = s;
  for (int v : s) out |= adj_[static_cast<std::size_t>(v)];
  return out;
}

std::string Graph::label(int v) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet s, std::vector<int>* old_of) const {
  std::vector<int> verts = s.to_vector();
  std::array<int, kMaxVertices> new_of{};
  new_of.fill(-1);
  for (std::size_t i = 0; i < verts.size(); ++i) new_of[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> es;
  for (int u : verts)
    for (int v : (adj_[static_cast<std::size_t>(u)] & s))
      if (u < v) es.emplace_back(new_of[static_cast<std::size_t>(u)], new_of[static_cast<std::size_t>(v)]);

  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.reserve(verts.size());
    for (int u : verts) labels.push_back(labels_[static_cast<std::size_t>(u)]);
  }
  if (old_of) *old_of = verts;
  return Graph(static_cast<int>(verts.size()), es, std::move(labels));
}

namespace {

// Single-source BFS distances; -1 where unreachable.
void bfs(const Graph& g, int src, std::int8_t* dist) {
  for (int v = 0; v < g.order(); ++v) dist[v] = -1;
  dist[src] = 0;
  VertexSet frontier = VertexSet::single(src);
  VertexSet seen = frontier;
  std::int8_t d = 0;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    ++d;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::int8_t> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) bfs(g, u, d.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n));
  return DistanceMatrix(n, std::move(d));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    for (;;) {
      VertexSet grown = g.closed_neighborhood(comp);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

GraphStats graph_stats(const Graph& g) {
  const int n = g.order();
  GraphStats st;
  for (int v = 0; v < n; ++v) st.max_degree = std::max(st.max_degree, g.degree(v));
  st.component_count = static_cast<int>(components(g).size());

  // 2-coloring per component.
  {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n && st.bipartite; ++s) {
      if (color[static_cast<std::size_t>(s)] != -1) continue;
      color[static_cast<std::size_t>(s)] = 0;
      std::vector<int> stack{s};
      while (!stack.empty() && st.bipartite) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
          if (color[static_cast<std::size_t>(v)] == -1) {
            color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
            stack.push_back(v);
          } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
            st.bipartite = false;
            break;
          }
        }
      }
    }
  }

  // Girth: min over roots of the shortest closed walk witnessed by a non-tree
  // edge in a BFS; each candidate contains a cycle of at most its length, and
  // a BFS rooted on a shortest cycle realizes the girth exactly.
  {
    int best = -1;
    std::vector<std::int8_t> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      for (int v = 0; v < n; ++v) {
        dist[static_cast<std::size_t>(v)] = -1;
        parent[static_cast<std::size_t>(v)] = -1;
      }
      dist[static_cast<std::size_t>(s)] = 0;
      std::vector<int> queue{s};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : g.neighbors(u)) {
          if (dist[static_cast<std::size_t>(v)] == -1) {
            dist[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(dist[static_cast<std::size_t>(u)] + 1);
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          } else if (parent[static_cast<std::size_t>(u)] != v && parent[static_cast<std::size_t>(v)] != u) {
            int cyc = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
            if (best == -1 || cyc < best) best = cyc;
          }
        }
      }
    }
    if (best != -1) st.girth = best;
  }

  // Diameter from BFS distances.
  {
    if (st.component_count <= 1) {
      DistanceMatrix dm = all_pairs_distances(g);
      int d = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) d = std::max(d, dm.at(u, v));
      st.diameter = d;
    }
  }
  return st;
}

}  // namespace locgame
