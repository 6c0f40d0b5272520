#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "mcvc/vertex_set.hpp"

namespace mcvc {

struct EnumerationReport {
  std::string algorithm;
  int n = 0;
  /// Empty when the run was count-only.
  std::vector<VertexSet> covers;
  std::uint64_t count = 0;
  /// Search-tree recursion nodes.
  std::uint64_t nodes = 0;
  /// Search-tree leaves, including candidate children examined by final
  /// non-recursive steps.
  std::uint64_t leaves = 0;
  /// Leaves of the tree spanned by the binary branching steps alone
  /// (terminal nodes plus nodes where the final step runs). chord5 has no
  /// final step, so there it equals `leaves`.
  std::uint64_t branch_leaves = 0;
  /// Nodes at which the final step ran.
  std::uint64_t sub_leaves = 0;
  /// Covers produced more than once by the search (dropped from `covers`).
  std::uint64_t duplicates = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct EnumOptions {
  /// Keep the covers; otherwise only count them.
  bool collect = true;
  /// Check the class precondition of specialised enumerators first.
  bool verify_class = true;
  /// Treat chordality <= 5 as given (skips the exhaustive check).
  bool assume_chordality5 = false;
  int size_guard = 20;
};

}  // namespace mcvc
