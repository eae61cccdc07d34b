#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locgame/vertex_set.hpp"

namespace locgame {

// Thrown when an operation is asked for an input beyond its documented size range.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on dense vertex indices 0..n-1.
// Adjacency is stored as one VertexSet per vertex; no self-loops.
// Optional per-vertex labels carry display names for design-derived graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kMaxVertices;

  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)] | VertexSet::single(v);
  }
  // N[s] = s together with every neighbor of a member of s.
  VertexSet closed_neighborhood(VertexSet s) const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced on s, vertices renumbered in increasing order of their
  // original index. old_of, when given, receives the original index of each
  // new vertex.
  Graph induced(VertexSet s, std::vector<int>* old_of = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// All-pairs shortest-path distances; kUnreachable marks vertex pairs that lie
// in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int8_t> d) : n_(n), d_(std::move(d)) {}

  int order() const { return n_; }
  int at(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
  const std::int8_t* row(int u) const {
    return d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_);
  }

 private:
  int n_ = 0;
  std::vector<std::int8_t> d_;  // -1 encodes kUnreachable
};

struct GraphStats {
  int max_degree = 0;
  int component_count = 0;
  bool bipartite = true;
  std::optional<int> girth;     // nullopt = acyclic
  std::optional<int> diameter;  // nullopt = disconnected
};

DistanceMatrix all_pairs_distances(const Graph& g);

GraphStats graph_stats(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace locgame
