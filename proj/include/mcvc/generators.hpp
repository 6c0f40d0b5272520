#pragma once

#include <cstdint>

#include "mcvc/graph.hpp"

namespace mcvc {

/// k disjoint triangles {3i, 3i+1, 3i+2} plus an apex 3k adjacent to all of them.
Graph gen_apex_triangles(int k);

/// Chain x_1 - A_1 - x_2 - A_2 - ... - A_k - x_{k+1}: blocks A_i are the five
/// vertices 5(i-1)..5(i-1)+4, x_j is vertex 5k + j - 1, and x_j is adjacent to
/// every vertex of A_{j-1} and A_j. n = 6k + 1; G_1 = K_{2,5}.
Graph gen_block_chain(int k);

/// k disjoint triangles on vertices {3i, 3i+1, 3i+2}.
Graph gen_triangles(int k);

/// Edges {2i, 2i+1} for i < k plus a hub 2k adjacent to every 2i.
Graph gen_broom_tree(int k);

/// G(n, p): std::mt19937_64 seeded with `seed`, one draw per pair (i < j) in
/// lexicographic order, edge iff (draw >> 11) * 2^-53 < p.
Graph gen_random(int n, double p, std::uint64_t seed);

}  // namespace mcvc
