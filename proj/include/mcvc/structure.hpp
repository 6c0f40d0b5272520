#pragma once

#include <optional>
#include <vector>

#include "mcvc/graph.hpp"

namespace mcvc {

inline constexpr int kDefaultChordalityGuard = 20;

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[subset].
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& subset);
bool is_connected(const Graph& g);

/// Vertices whose removal disconnects G. Throws PreconditionError if G is disconnected.
VertexSet cut_vertices(const Graph& g);
/// Cut vertices of G[subset]; no connectivity requirement.
VertexSet articulation_points(const Graph& g, const VertexSet& subset);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
/// The empty set and singletons are connected.
bool is_connected_set(const Graph& g, const VertexSet& subset);
bool is_independent_set(const Graph& g, const VertexSet& subset);

/// True iff U is a vertex cover, G[U] is connected, and every u in U is a cut
/// vertex of G[U] or has a neighbour outside U.
bool is_minimal_cvc(const Graph& g, const VertexSet& cover);

/// Length of a longest induced cycle, 0 for forests. Exhaustive; throws
/// SizeGuardError when n exceeds `guard`.
int chordality(const Graph& g, int guard = kDefaultChordalityGuard);

/// Unweighted distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// 2-colouring (0/1 per vertex) if G is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Component H of G[L_i ∪ ... ∪ L_s] together with its boundary N(V(H)) ⊆ L_{i-1}
/// and interface V(H) ∩ L_i.
struct UpperComponent {
  int level = 0;
  VertexSet vertices;
  VertexSet boundary;
  VertexSet interface;
};

struct BfsLayering {
  Vertex root = -1;
  std::vector<VertexSet> levels;                   // L_0 .. L_s
  std::vector<std::vector<UpperComponent>> upper;  // upper[i] = components at level i; upper[0] empty

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  /// Distinct boundaries of all upper components with level >= min_level.
  std::vector<VertexSet> boundaries(int min_level = 1) const;
};

/// Throws PreconditionError if G is disconnected.
BfsLayering bfs_layering(const Graph& g, Vertex root);

/// Vertices with an independent neighbourhood whose members' neighbourhoods
/// form a chain under inclusion.
VertexSet weakly_simplicial_vertices(const Graph& g);
bool is_weakly_simplicial(const Graph& g, Vertex v);

}  // namespace mcvc
