#pragma once

#include <cstdint>

#include "mcvc/graph.hpp"
#include "mcvc/report.hpp"

namespace mcvc {

/// All minimal vertex covers, each once. Branches on a maximum-degree vertex
/// of the undecided part: take it, or leave it out and take its neighbours.
/// Edgeless graphs yield the single cover ∅.
EnumerationReport enum_minimal_vertex_covers(const Graph& g, const EnumOptions& options = {});

/// Largest number of minimal vertex covers (maximal independent sets) an
/// n-vertex graph can have. Throws std::invalid_argument for n <= 0 and
/// std::overflow_error when the value does not fit.
std::uint64_t moon_moser_bound(int n);

}  // namespace mcvc
