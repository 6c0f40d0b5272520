#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mcvc/graph.hpp"
#include "mcvc/report.hpp"

namespace mcvc {

enum class Algorithm { automatic, general, chordal, chord5, dh, split, cobipartite, oracle };

std::string_view algorithm_name(Algorithm a);
/// Accepts "auto", "general", "chordal", "chord5", "dh", "split", "cobipartite", "oracle".
Algorithm algorithm_from_name(std::string_view name);

/// Structural events recorded by the distance-hereditary enumerator.
struct DhRootTrace {
  Vertex root = -1;
  /// Every distinct boundary of an upper BFS component (levels >= 1).
  std::vector<VertexSet> boundaries;
  /// Inclusion-minimal boundaries of components at levels >= 2.
  std::vector<VertexSet> minimal_boundaries;
  /// Independent minimal boundaries on which the boundary step branched.
  std::vector<VertexSet> fired;
};

struct DhTrace {
  std::vector<DhRootTrace> roots;
  /// Covers emitted twice within a single rooted run.
  std::uint64_t duplicates_within_root = 0;
};

// Every enumerator drops isolated vertices first. If two or more components
// carry edges there is no connected vertex cover and the result is empty; an
// edgeless graph yields {∅}. Covers are reported in the input's labels.

/// Branching over selected/free vertices; works on any graph.
EnumerationReport enum_mcvc_general(const Graph& g, const EnumOptions& options = {});

/// Chordal graphs: cut vertices plus a minimal vertex cover of G minus them.
EnumerationReport enum_mcvc_chordal(const Graph& g, const EnumOptions& options = {});

/// Chordality <= 5: binary branching, then contraction of selected
/// components and branching at a weakly simplicial contracted vertex.
/// Throws PreconditionError if no weakly simplicial vertex exists.
EnumerationReport enum_mcvc_chord5(const Graph& g, const EnumOptions& options = {});

/// Distance-hereditary graphs: two rooted runs over the endpoints of the
/// lexicographically first edge, merged without duplicates.
EnumerationReport enum_mcvc_dh(const Graph& g, const EnumOptions& options = {}, DhTrace* trace = nullptr);

/// Split graphs: at most n candidates built from a maximal clique side.
EnumerationReport enum_mcvc_split(const Graph& g, const EnumOptions& options = {});

/// Cobipartite graphs: V \ {v} and V \ {u, v} across the two cliques.
EnumerationReport enum_mcvc_cobipartite(const Graph& g, const EnumOptions& options = {});

/// Brute force over all subsets (see oracle.hpp); n <= 24.
EnumerationReport enum_mcvc_oracle(const Graph& g, const EnumOptions& options = {});

/// The algorithm enum_mcvc_auto would pick for `g`.
Algorithm select_algorithm(const Graph& g, const EnumOptions& options = {});

/// Dispatches split -> cobipartite -> chordal -> dh -> chord5 -> general.
/// report.algorithm names the enumerator that ran.
EnumerationReport enum_mcvc_auto(const Graph& g, const EnumOptions& options = {});

EnumerationReport enumerate_mcvc(const Graph& g, Algorithm algorithm, const EnumOptions& options = {});

/// Size of a minimum connected vertex cover, or nullopt if none exists.
std::optional<int> min_cvc_size(const Graph& g);

}  // namespace mcvc
