#include "mcvc/mvc_enum.hpp"

#include <limits>
#include <stdexcept>

#include "collector.hpp"

namespace mcvc {
namespace {

class MvcSearch {
 public:
  MvcSearch(const Graph& g, detail::CoverCollector& out, EnumerationReport& report)
      : g_(g), out_(out), report_(report) {}

  // `taken` is in the cover, `open` undecided; every other vertex is excluded
  // and has all of its neighbours in `taken`.
  void run(const VertexSet& taken, const VertexSet& open) {
    ++report_.nodes;
    for (Vertex s : taken) {
      if (g_.neighbors(s).is_subset_of(taken)) {
        ++report_.leaves;
        return;
      }
    }
    Vertex pivot = -1;
    int pivot_degree = 0;
    for (Vertex v : open) {
      int d = (g_.neighbors(v) & open).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot < 0) {
      ++report_.leaves;
      out_.emit(taken);
      return;
    }
    VertexSet with = taken;
    with.insert(pivot);
    VertexSet rest = open;
    rest.erase(pivot);
    run(with, rest);

    run(taken | (g_.neighbors(pivot) & open), rest - g_.neighbors(pivot));
  }

 private:
  const Graph& g_;
  detail::CoverCollector& out_;
  EnumerationReport& report_;
};

}  // namespace

EnumerationReport enum_minimal_vertex_covers(const Graph& g, const EnumOptions& options) {
  detail::Stopwatch clock;
  EnumerationReport report;
  report.algorithm = "mvc";
  report.n = g.n();
  detail::CoverCollector out(options.collect);
  MvcSearch(g, out, report).run(g.empty_set(), g.vertices());
  report.branch_leaves = report.leaves;
  report.duplicates = out.duplicates();
  out.finish(report);
  report.elapsed = clock.elapsed();
  return report;
}

std::uint64_t moon_moser_bound(int n) {
  if (n <= 0) throw std::invalid_argument("moon_moser_bound: n must be positive");
  auto pow3 = [](int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
      if (r > std::numeric_limits<std::uint64_t>::max() / 3) throw std::overflow_error("moon_moser_bound: overflow");
      r *= 3;
    }
    return r;
  };
  switch (n % 3) {
    case 0: return pow3(n / 3);
    case 1: return n == 1 ? 1 : 4 * pow3((n - 4) / 3);
    default: return 2 * pow3((n - 2) / 3);
  }
}

}  // namespace mcvc
