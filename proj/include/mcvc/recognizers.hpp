#pragma once

#include <optional>
#include <utility>

#include "mcvc/graph.hpp"
#include "mcvc/structure.hpp"

namespace mcvc {

/// Partition of V(G) into a clique and an independent set.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Partition of V(G) into two cliques.
struct CobipartitePartition {
  VertexSet first;
  VertexSet second;
};

enum class Tristate { no, yes, unverified };

struct GraphClassReport {
  bool is_chordal = false;
  bool is_chordal_bipartite = false;
  bool is_split = false;
  bool is_cobipartite = false;
  bool is_distance_hereditary = false;
  Tristate chordality_le5 = Tristate::unverified;
};

/// Maximum cardinality search ordering; reversed, it is a perfect
/// elimination ordering iff G is chordal.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);
bool is_chordal(const Graph& g);

bool is_bipartite(const Graph& g);
/// Bipartite, and repeated deletion of weakly simplicial vertices empties G.
bool is_chordal_bipartite(const Graph& g);
/// Bipartite and brute-force chordality <= 4 (n <= guard).
bool is_chordal_bipartite_exhaustive(const Graph& g, int guard = kDefaultChordalityGuard);

/// Witness with an inclusion-maximal clique side, if G is split.
std::optional<SplitPartition> split_partition(const Graph& g);
inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

std::optional<CobipartitePartition> cobipartite_partition(const Graph& g);
inline bool is_cobipartite(const Graph& g) { return cobipartite_partition(g).has_value(); }

/// Pruning-sequence test (pendant vertices and twins). Throws
/// PreconditionError on disconnected input.
bool is_distance_hereditary(const Graph& g);

/// chordality_le5 is computed only when n <= guard (or G is chordal).
GraphClassReport classify(const Graph& g, int guard = kDefaultChordalityGuard);

}  // namespace mcvc
