#pragma once

#include <algorithm>
#include <chrono>
#include <unordered_set>
#include <vector>

#include "mcvc/report.hpp"
#include "mcvc/vertex_set.hpp"

namespace mcvc::detail {

/// Receives covers from a search. Duplicates are dropped and counted, so the
/// enumerators that claim branch disjointness can be checked against it.
class CoverCollector {
 public:
  explicit CoverCollector(bool keep) : keep_(keep) {}

  bool emit(const VertexSet& cover) {
    if (!seen_.insert(cover).second) {
      ++duplicates_;
      return false;
    }
    return true;
  }

  std::uint64_t duplicates() const { return duplicates_; }
  std::uint64_t count() const { return seen_.size(); }

  /// Moves the covers (sorted) into the report.
  void finish(EnumerationReport& report) {
    report.count = seen_.size();
    if (keep_) {
      report.covers.assign(seen_.begin(), seen_.end());
      std::sort(report.covers.begin(), report.covers.end());
    }
  }

 private:
  bool keep_;
  std::unordered_set<VertexSet, VertexSetHash> seen_;
  std::uint64_t duplicates_ = 0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mcvc::detail
