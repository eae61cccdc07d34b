#include "locgame/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <random>

namespace locgame {

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "complete-bipartite" || name == "complete_bipartite" || name == "cbip")
    return Family::complete_bipartite;
  if (name == "hypercube") return Family::hypercube;
  if (name == "kneser") return Family::kneser;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::hypercube: return "hypercube";
    case Family::kneser: return "kneser";
  }
  return "?";
}

namespace {

void need_params(const std::vector<int>& params, std::size_t count, const char* what) {
  if (params.size() != count)
    throw std::invalid_argument(std::string(what) + ": wrong parameter count");
}

Graph make_kneser(int k, int n) {
  if (k < 1 || n <= k) throw std::invalid_argument("kneser: requires n > k >= 1");
  if (n > 30) throw std::invalid_argument("kneser: ground set too large");
  // k-subsets as bitmasks in increasing numeric order = colex order.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) subsets.push_back(m);
  if (subsets.size() > static_cast<std::size_t>(Graph::kMaxVertices))
    throw std::invalid_argument("kneser: C(n,k) exceeds 64 vertices");

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::string lab = "{";
    for (int b = 0; b < n; ++b)
      if ((subsets[i] >> b) & 1) lab += std::to_string(b) + ",";
    lab.back() = '}';
    labels.push_back(lab);
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Graph(static_cast<int>(subsets.size()), edges, labels);
}

}  // namespace

Graph generate(Family f, const std::vector<int>& params) {
  std::vector<std::pair<int, int>> edges;
  switch (f) {
    case Family::path: {
      need_params(params, 1, "path");
      int n = params[0];
      if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("path: bad order");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    }
    case Family::cycle: {
      need_params(params, 1, "cycle");
      int n = params[0];
      if (n < 3 || n > Graph::kMaxVertices) throw std::invalid_argument("cycle: order must be >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return Graph(n, edges);
    }
    case Family::star: {
      need_params(params, 1, "star");
      int leaves = params[0];
      if (leaves < 1 || leaves + 1 > Graph::kMaxVertices)
        throw std::invalid_argument("star: bad leaf count");
      for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
      return Graph(leaves + 1, edges);
    }
    case Family::complete: {
      need_params(params, 1, "complete");
      int n = params[0];
      if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("complete: bad order");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(n, edges);
    }
    case Family::complete_bipartite: {
      need_params(params, 2, "complete-bipartite");
      int a = params[0], b = params[1];
      if (a < 1 || b < 1 || a + b > Graph::kMaxVertices)
        throw std::invalid_argument("complete-bipartite: bad part sizes");
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
      return Graph(a + b, edges);
    }
    case Family::hypercube: {
      need_params(params, 1, "hypercube");
      int d = params[0];
      if (d < 0 || d > 6) throw std::invalid_argument("hypercube: dimension must be in 0..6");
      int n = 1 << d;
      for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b)
          if (!((i >> b) & 1)) edges.emplace_back(i, i | (1 << b));
      return Graph(n, edges);
    }
    case Family::kneser: {
      need_params(params, 2, "kneser");
      return make_kneser(params[0], params[1]);
    }
  }
  throw std::invalid_argument("unknown family");
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_connected_graphs: n must be in 1..6");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(static_cast<std::size_t>(pairs));
  {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_of[static_cast<std::size_t>(idx++)] = {i, j};
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < pairs; ++b)
      if ((mask >> b) & 1) edges.push_back(pair_of[static_cast<std::size_t>(b)]);
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

using AdjArray = std::array<VertexSet, 16>;

// Pruefer sequence -> labeled tree adjacency, without building a Graph.
void prufer_decode_adj(const std::vector<int>& seq, int n, AdjArray& adj) {
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = VertexSet();
  std::array<int, 16> deg{};
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = 1;
  for (int x : seq) ++deg[static_cast<std::size_t>(x)];
  VertexSet leaves;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.add(v);
  auto link = [&adj](int a, int b) {
    adj[static_cast<std::size_t>(a)].add(b);
    adj[static_cast<std::size_t>(b)].add(a);
  };
  for (int x : seq) {
    int leaf = leaves.lowest();
    leaves.remove(leaf);
    link(leaf, x);
    if (--deg[static_cast<std::size_t>(x)] == 1) leaves.add(x);
  }
  int a = leaves.lowest();
  leaves.remove(a);
  link(a, leaves.lowest());
}

std::string ahu_code(const AdjArray& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != parent) kids.push_back(ahu_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

// The one or two middle vertices left after repeatedly stripping leaves.
std::vector<int> tree_centers(const AdjArray& adj, int n) {
  if (n == 1) return {0};
  std::array<int, 16> deg{};
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)].size();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive.remove(v);
      --remaining;
      for (int w : (adj[static_cast<std::size_t>(v)] & alive))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  return alive.to_vector();
}

std::string canonical_from_adj(const AdjArray& adj, int n) {
  std::string best;
  for (int c : tree_centers(adj, n)) {
    std::string code = ahu_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

AdjArray adj_of(const Graph& g) {
  AdjArray adj;
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

Graph graph_of(const AdjArray& adj, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_canonical_form: input is not a tree");
  AdjArray adj = adj_of(tree);
  return canonical_from_adj(adj, tree.order());
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("enumerate_trees: n must be in 1..9");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::map<std::string, Graph> reps;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  AdjArray adj;
  for (;;) {
    prufer_decode_adj(seq, n, adj);
    std::string code = canonical_from_adj(adj, n);
    if (!reps.contains(code)) reps.emplace(std::move(code), graph_of(adj, n));
    // Next sequence in base-n counting order.
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [code, g] : reps) out.push_back(std::move(g));
  return out;
}

bool contains_subtree(const Graph& host, const Graph& pattern) {
  if (!is_tree(host) || !is_tree(pattern))
    throw std::invalid_argument("contains_subtree: both inputs must be trees");
  const int p = pattern.order();
  if (p > host.order()) return false;
  // Any connected subgraph of a tree is the induced subtree on its vertex
  // set, so subgraph containment reduces to: some connected |V(pattern)|-set
  // of host induces a tree isomorphic to the pattern.
  std::string want = tree_canonical_form(pattern);
  std::vector<int> verts(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) verts[static_cast<std::size_t>(i)] = i;
  const int n = host.order();
  for (;;) {
    VertexSet s;
    for (int v : verts) s.add(v);
    Graph sub = host.induced(s);
    if (is_connected(sub) && sub.edge_count() == p - 1 && tree_canonical_form(sub) == want)
      return true;
    // Next p-combination of 0..n-1.
    int i = p - 1;
    while (i >= 0 && verts[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) return false;
    ++verts[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) verts[static_cast<std::size_t>(j)] = verts[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Graph> random_connected_graphs(int count, const std::vector<int>& ns,
                                           std::uint64_t seed) {
  if (ns.empty()) throw std::invalid_argument("random_connected_graphs: need at least one order");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int n = ns[static_cast<std::size_t>(i) % ns.size()];
    for (;;) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((rng() >> 33) & 1) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (is_connected(g)) {
        out.push_back(std::move(g));
        break;
      }
    }
  }
  return out;
}

}  // namespace locgame
