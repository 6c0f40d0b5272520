#pragma once

#include <vector>

#include "mcvc/graph.hpp"

namespace mcvc {

/// Induced minor of an original graph. Super-vertex i stands for bags[i], a
/// connected, non-empty set of original vertices; bags are pairwise disjoint
/// and two super-vertices are adjacent iff an original edge joins their bags.
class MinorGraph {
 public:
  MinorGraph() = default;

  /// One singleton bag per vertex of `original`.
  static MinorGraph trivial(const Graph& original);

  const Graph& graph() const { return graph_; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  const VertexSet& bag(Vertex super) const { return bags_.at(static_cast<std::size_t>(super)); }
  int origin_n() const { return origin_n_; }
  int size() const { return graph_.n(); }

  /// Super-vertex whose bag holds original vertex `v`, or -1 if deleted.
  Vertex owner(Vertex v) const { return owner_.at(static_cast<std::size_t>(v)); }

  /// Merge the endpoints of edge uv; the merged super-vertex takes index
  /// min(u, v) and higher indices shift down by one.
  MinorGraph contract_edge(Vertex u, Vertex v) const;

  /// Delete a set of super-vertices (indices of this minor).
  MinorGraph remove_vertices(const VertexSet& supers) const;

 private:
  void rebuild_owner();

  Graph graph_;
  std::vector<VertexSet> bags_;
  std::vector<Vertex> owner_;
  int origin_n_ = 0;
};

/// Free-function form of MinorGraph::contract_edge.
inline MinorGraph contract_edge(const MinorGraph& m, Vertex u, Vertex v) { return m.contract_edge(u, v); }

}  // namespace mcvc
