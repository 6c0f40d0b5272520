#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcvc/vertex_set.hpp"

namespace mcvc {

/// A required structural property of the input does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run above its configured vertex limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph star(int leaves) { return complete_bipartite(1, leaves); }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const;

  /// Throws std::invalid_argument for loops and std::out_of_range for bad indices.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return adj_.at(static_cast<std::size_t>(u)).contains(v); }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return neighbors(v).size(); }

  /// N[U] for a vertex set.
  VertexSet closed_neighborhood(const VertexSet& set) const;
  /// N(U) = N[U] \ U.
  VertexSet open_neighborhood(const VertexSet& set) const;

  VertexSet vertices() const { return VertexSet::full(n()); }
  VertexSet empty_set() const { return VertexSet(n()); }
  VertexSet isolated_vertices() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
};

/// Induced subgraph together with the map from its vertices back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new index -> parent index (ascending)
  std::vector<Vertex> to_child;   // parent index -> new index, -1 if dropped

  VertexSet lift(const VertexSet& child_set) const;
};

/// G[U], relabelled by the ascending order of U.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

}  // namespace mcvc
