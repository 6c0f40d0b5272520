#pragma once

#include <vector>

#include "mcvc/graph.hpp"

namespace mcvc {

inline constexpr int kOracleGuard = 24;
inline constexpr int kDhOracleGuard = 12;

// Definition-level references. Each scans every vertex subset and shares no
// code with the enumerators beyond Graph itself. Results are sorted.

/// Connected vertex covers with no proper subset that is also a connected vertex cover.
std::vector<VertexSet> oracle_enum_cvc_minimal(const Graph& g, int guard = kOracleGuard);

/// Vertex covers with no proper subset that is also a vertex cover.
std::vector<VertexSet> oracle_enum_mvc(const Graph& g, int guard = kOracleGuard);

/// Every connected induced subgraph preserves all pairwise distances.
bool oracle_is_distance_hereditary(const Graph& g, int guard = kDhOracleGuard);

}  // namespace mcvc
