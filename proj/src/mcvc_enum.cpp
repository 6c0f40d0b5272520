#include "mcvc/mcvc_enum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "collector.hpp"
#include "mcvc/minor_graph.hpp"
#include "mcvc/mvc_enum.hpp"
#include "mcvc/oracle.hpp"
#include "mcvc/recognizers.hpp"
#include "mcvc/structure.hpp"

namespace mcvc {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::general: return "general";
    case Algorithm::chordal: return "chordal";
    case Algorithm::chord5: return "chord5";
    case Algorithm::dh: return "dh";
    case Algorithm::split: return "split";
    case Algorithm::cobipartite: return "cobipartite";
    case Algorithm::oracle: return "oracle";
  }
  return "unknown";
}

Algorithm algorithm_from_name(std::string_view name) {
  for (auto a : {Algorithm::automatic, Algorithm::general, Algorithm::chordal, Algorithm::chord5, Algorithm::dh,
                 Algorithm::split, Algorithm::cobipartite, Algorithm::oracle}) {
    if (algorithm_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

namespace {

/// The edge-bearing part of the input, relabelled.
struct Reduction {
  enum class Kind { edgeless, no_cover, connected } kind = Kind::edgeless;
  InducedSubgraph core;
};

Reduction reduce(const Graph& g) {
  Reduction r;
  const VertexSet bearing = g.vertices() - g.isolated_vertices();
  if (bearing.empty()) return r;
  if (connected_components(g, bearing).size() >= 2) {
    r.kind = Reduction::Kind::no_cover;
    return r;
  }
  r.kind = Reduction::Kind::connected;
  r.core = induced_subgraph(g, bearing);
  return r;
}

using Body = std::function<void(const InducedSubgraph&, detail::CoverCollector&, EnumerationReport&)>;

/// Shared prologue/epilogue: reduction, timing, lifting labels back.
EnumerationReport run_reduced(const Graph& g, const EnumOptions& options, std::string_view name, const Body& body) {
  detail::Stopwatch clock;
  EnumerationReport report;
  report.algorithm = std::string(name);
  report.n = g.n();
  detail::CoverCollector out(options.collect);
  const Reduction r = reduce(g);
  switch (r.kind) {
    case Reduction::Kind::edgeless:
      report.nodes = report.leaves = report.branch_leaves = 1;
      out.emit(g.empty_set());
      break;
    case Reduction::Kind::no_cover: report.nodes = report.leaves = report.branch_leaves = 1; break;
    case Reduction::Kind::connected: {
      detail::CoverCollector inner(true);
      body(r.core, inner, report);
      report.duplicates = inner.duplicates();
      EnumerationReport tmp;
      inner.finish(tmp);
      for (const auto& cover : tmp.covers) out.emit(r.core.lift(cover));
      break;
    }
  }
  out.finish(report);
  report.elapsed = clock.elapsed();
  return report;
}

bool is_cvc(const Graph& g, const VertexSet& s) { return is_vertex_cover(g, s) && is_connected_set(g, s); }

// ---------------------------------------------------------------------------
// General graphs.

class GeneralSearch {
 public:
  GeneralSearch(const Graph& g, detail::CoverCollector& out, EnumerationReport& report)
      : g_(g), out_(out), report_(report) {}

  void run(const VertexSet& selected, const VertexSet& free) {
    ++report_.nodes;
    if (is_minimal_cvc(g_, selected)) {
      out_.emit(selected);
      terminal();
      return;
    }
    if (is_cvc(g_, selected) || free.empty()) {
      terminal();
      return;
    }
    for (Vertex u : free) {
      if (!g_.neighbors(u).intersects(free)) continue;
      VertexSet with = selected;
      with.insert(u);
      VertexSet rest = free;
      rest.erase(u);
      run(with, rest);
      run(selected | g_.neighbors(u), rest - g_.neighbors(u));
      return;
    }
    complete_independent(selected, free);
  }

 private:
  void terminal() {
    ++report_.leaves;
    ++report_.branch_leaves;
  }

  // Free vertices are independent, so `selected` covers every edge and the
  // missing free vertices only reconnect its components.
  void complete_independent(const VertexSet& selected, const VertexSet& free) {
    ++report_.sub_leaves;
    ++report_.branch_leaves;
    const int parts = static_cast<int>(connected_components(g_, selected).size());
    const std::vector<Vertex> pool = free.to_vector();
    const int limit = std::min(parts - 1, static_cast<int>(pool.size()));
    if (limit < 1) {
      ++report_.leaves;
      return;
    }
    for (int size = 1; size <= limit; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        ++report_.leaves;
        VertexSet candidate = selected;
        for (int i : idx) candidate.insert(pool[static_cast<std::size_t>(i)]);
        if (is_minimal_cvc(g_, candidate)) out_.emit(candidate);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  const Graph& g_;
  detail::CoverCollector& out_;
  EnumerationReport& report_;
};

// ---------------------------------------------------------------------------
// Chordality at most 5.

class Chord5Search {
 public:
  Chord5Search(const Graph& g, detail::CoverCollector& out, EnumerationReport& report)
      : g_(g), out_(out), report_(report) {}

  // `minor` is G minus the discarded vertices, with some selected-selected
  // edges contracted. Free vertices always keep singleton bags.
  void run(const MinorGraph& minor, const VertexSet& selected, const VertexSet& free) {
    ++report_.nodes;
    if (is_minimal_cvc(g_, selected)) {
      out_.emit(selected);
      terminal();
      return;
    }
    if (is_cvc(g_, selected)) {
      terminal();
      return;
    }
    int touching = 0;
    for (const auto& comp : connected_components(g_, selected | free))
      if (comp.intersects(selected)) ++touching;
    if (touching >= 2) {
      terminal();
      return;
    }

    for (Vertex u : free) {
      if (!g_.neighbors(u).intersects(free)) continue;
      VertexSet with = selected;
      with.insert(u);
      VertexSet rest = free;
      rest.erase(u);
      run(minor, with, rest);

      VertexSet gone(minor.size());
      gone.insert(minor.owner(u));
      run(minor.remove_vertices(gone), selected | g_.neighbors(u), rest - g_.neighbors(u));
      return;
    }
    branch_on_contraction(minor, selected, free);
  }

 private:
  void terminal() {
    ++report_.leaves;
    ++report_.branch_leaves;
  }

  static bool is_free_super(const MinorGraph& m, Vertex s, const VertexSet& free) { return m.bag(s).intersects(free); }

  // Step 4 recurses, so unlike the general search it is not a final step and
  // its nodes are not counted as leaves.
  void branch_on_contraction(const MinorGraph& minor, const VertexSet& selected, const VertexSet& free) {
    MinorGraph h = minor;
    for (bool merged = true; merged;) {
      merged = false;
      for (auto [a, b] : h.graph().edges()) {
        if (is_free_super(h, a, free) || is_free_super(h, b, free)) continue;
        h = h.contract_edge(a, b);
        merged = true;
        break;
      }
    }

    Vertex pivot = -1;
    for (Vertex s = 0; s < h.size(); ++s) {
      if (is_free_super(h, s, free) || !is_weakly_simplicial(h.graph(), s)) continue;
      if (pivot < 0 || h.bag(s).first() < h.bag(pivot).first()) pivot = s;
    }
    if (pivot < 0) {
      throw PreconditionError("chord5: contracted minor has no weakly simplicial vertex; chordality exceeds 5");
    }

    const VertexSet& around = h.graph().neighbors(pivot);
    VertexSet originals(g_.n());
    for (Vertex s : around) originals |= h.bag(s);
    if (around.empty()) {
      terminal();
      return;
    }
    for (Vertex s : around) {
      const Vertex v = h.bag(s).first();
      VertexSet others = around;
      others.erase(s);
      VertexSet with = selected;
      with.insert(v);
      run(h.remove_vertices(others), with, free - originals);
    }
  }

  const Graph& g_;
  detail::CoverCollector& out_;
  EnumerationReport& report_;
};

// ---------------------------------------------------------------------------
// Distance-hereditary graphs.

class DhRootedSearch {
 public:
  DhRootedSearch(const Graph& g, Vertex root, detail::CoverCollector& out, EnumerationReport& report,
                 DhRootTrace& trace)
      : g_(g), out_(out), report_(report), trace_(trace) {
    const BfsLayering layering = bfs_layering(g, root);
    trace_.root = root;
    trace_.boundaries = layering.boundaries(1);
    const std::vector<VertexSet> upper = layering.boundaries(2);
    for (const auto& b : upper) {
      bool minimal = true;
      for (const auto& other : trace_.boundaries)
        if (other.is_proper_subset_of(b)) minimal = false;
      if (!minimal) continue;
      trace_.minimal_boundaries.push_back(b);
      if (is_independent_set(g, b)) candidates_.push_back(b);
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  }

  void run(const VertexSet& selected, const VertexSet& free) {
    ++report_.nodes;
    if (is_minimal_cvc(g_, selected)) {
      emit(selected);
      terminal();
      return;
    }
    if (is_cvc(g_, selected)) {
      terminal();
      return;
    }
    for (const auto& boundary : candidates_) {
      if (boundary.intersects(selected)) continue;
      branch_on_boundary(boundary, selected, free);
      return;
    }
    complete_by_vertex_covers(selected, free);
  }

 private:
  void terminal() {
    ++report_.leaves;
    ++report_.branch_leaves;
  }

  void emit(const VertexSet& cover) {
    if (!local_.insert(cover).second) {
      ++duplicates_;
      return;
    }
    out_.emit(cover);
  }

  void note_fired(const VertexSet& boundary) {
    if (std::find(trace_.fired.begin(), trace_.fired.end(), boundary) == trace_.fired.end())
      trace_.fired.push_back(boundary);
  }

  void branch_on_boundary(const VertexSet& boundary, const VertexSet& selected, const VertexSet& free) {
    note_fired(boundary);
    const VertexSet remaining = boundary & free;
    if (remaining.empty()) {
      terminal();
      return;
    }
    if (remaining.size() == 1) {
      run(selected | remaining, free - remaining);
      return;
    }
    const VertexSet alive = selected | free;
    const VertexSet around = g_.open_neighborhood(remaining) & alive;
    const VertexSet around_free = around & free;

    if (around_free.empty()) {
      for (Vertex v : remaining) {
        VertexSet with = selected;
        with.insert(v);
        run(with, free - remaining);
      }
      return;
    }
    if (around_free.size() == 1) {
      const Vertex w = around_free.first();
      for (Vertex v : remaining) {
        VertexSet with = selected;
        with.insert(v);
        with.insert(w);
        run(with, free - remaining - around_free);
      }
      const VertexSet w_nbrs = g_.neighbors(w) & alive;
      run(selected | w_nbrs, free - w_nbrs - around_free);
      return;
    }
    for (Vertex v : remaining) {
      VertexSet with = selected | around;
      with.insert(v);
      run(with, free - around - remaining);
    }
    run(selected | remaining, free - remaining);
  }

  void complete_by_vertex_covers(const VertexSet& selected, const VertexSet& free) {
    ++report_.sub_leaves;
    ++report_.branch_leaves;
    const auto sub = induced_subgraph(g_, free);
    const auto covers = enum_minimal_vertex_covers(sub.graph);
    report_.nodes += covers.nodes;
    for (const auto& x : covers.covers) {
      ++report_.leaves;
      VertexSet candidate = selected | sub.lift(x);
      if (is_minimal_cvc(g_, candidate)) emit(candidate);
    }
  }

 public:
  std::uint64_t duplicates() const { return duplicates_; }

 private:
  const Graph& g_;
  detail::CoverCollector& out_;
  EnumerationReport& report_;
  DhRootTrace& trace_;
  std::vector<VertexSet> candidates_;
  std::unordered_set<VertexSet, VertexSetHash> local_;
  std::uint64_t duplicates_ = 0;
};

VertexSet singleton(int n, Vertex v) { return VertexSet(n, {v}); }

void emit_filtered(const Graph& g, const std::vector<VertexSet>& candidates, detail::CoverCollector& out,
                   EnumerationReport& report) {
  report.nodes = 1;
  for (const auto& c : candidates) {
    ++report.leaves;
    if (is_minimal_cvc(g, c)) out.emit(c);
  }
  report.branch_leaves = 1;
  report.sub_leaves = 1;
}

}  // namespace

EnumerationReport enum_mcvc_general(const Graph& g, const EnumOptions& options) {
  return run_reduced(g, options, "general",
                     [](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       GeneralSearch(core, out, rep).run(core.empty_set(), core.vertices());
                     });
}

EnumerationReport enum_mcvc_chordal(const Graph& g, const EnumOptions& options) {
  return run_reduced(g, options, "chordal",
                     [&](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       if (options.verify_class && !is_chordal(core))
                         throw PreconditionError("chordal: input graph is not chordal");
                       const VertexSet cuts = cut_vertices(core);
                       const auto rest = induced_subgraph(core, core.vertices() - cuts);
                       const auto inner = enum_minimal_vertex_covers(rest.graph);
                       rep.nodes = inner.nodes;
                       rep.leaves = inner.leaves;
                       rep.branch_leaves = inner.branch_leaves;
                       for (const auto& x : inner.covers) out.emit(cuts | rest.lift(x));
                     });
}

EnumerationReport enum_mcvc_chord5(const Graph& g, const EnumOptions& options) {
  return run_reduced(g, options, "chord5",
                     [&](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       if (options.verify_class && !options.assume_chordality5 && !is_chordal(core) &&
                           chordality(core, options.size_guard) > 5) {
                         throw PreconditionError("chord5: input graph has chordality greater than 5");
                       }
                       Chord5Search(core, out, rep).run(MinorGraph::trivial(core), core.empty_set(), core.vertices());
                     });
}

EnumerationReport enum_mcvc_dh(const Graph& g, const EnumOptions& options, DhTrace* trace) {
  return run_reduced(g, options, "dh",
                     [&](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       if (options.verify_class && !is_distance_hereditary(core)) {
                         throw PreconditionError("dh: input graph is not distance-hereditary");
                       }
                       const auto [u1, u2] = core.edges().front();
                       DhTrace local;
                       DhTrace& sink = trace ? *trace : local;
                       const std::size_t offset = sink.roots.size();
                       sink.roots.resize(offset + 2);
                       for (int i = 0; i < 2; ++i) {
                         const Vertex root = i == 0 ? u1 : u2;
                         DhRootTrace& slot = sink.roots[offset + static_cast<std::size_t>(i)];
                         DhRootedSearch search(core, root, out, rep, slot);
                         VertexSet free = core.vertices();
                         free.erase(root);
                         search.run(singleton(core.n(), root), free);
                         sink.duplicates_within_root += search.duplicates();
                         // report the trace in the caller's labels
                         slot.root = reduced.to_parent[static_cast<std::size_t>(root)];
                         for (auto* family : {&slot.boundaries, &slot.minimal_boundaries, &slot.fired})
                           for (auto& b : *family) b = reduced.lift(b);
                       }
                     });
}

EnumerationReport enum_mcvc_split(const Graph& g, const EnumOptions& options) {
  return run_reduced(g, options, "split",
                     [&](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       auto part = split_partition(core);
                       if (!part) {
                         if (options.verify_class) throw PreconditionError("split: input graph is not a split graph");
                         return;
                       }
                       std::vector<VertexSet> candidates;
                       if (part->independent.empty()) {
                         for (Vertex v = 0; v < core.n(); ++v)
                           candidates.push_back(core.vertices() - singleton(core.n(), v));
                       } else {
                         candidates.push_back(part->clique);
                         for (Vertex v : part->clique)
                           candidates.push_back((part->clique - singleton(core.n(), v)) | core.neighbors(v));
                       }
                       emit_filtered(core, candidates, out, rep);
                     });
}

EnumerationReport enum_mcvc_cobipartite(const Graph& g, const EnumOptions& options) {
  return run_reduced(g, options, "cobipartite",
                     [&](const InducedSubgraph& reduced, detail::CoverCollector& out, EnumerationReport& rep) {
                       const Graph& core = reduced.graph;
                       auto part = cobipartite_partition(core);
                       if (!part) {
                         if (options.verify_class)
                           throw PreconditionError("cobipartite: input graph is not cobipartite");
                         return;
                       }
                       std::vector<VertexSet> candidates;
                       for (Vertex v = 0; v < core.n(); ++v)
                         candidates.push_back(core.vertices() - singleton(core.n(), v));
                       for (Vertex a : part->first) {
                         for (Vertex b : part->second) {
                           VertexSet c = core.vertices();
                           c.erase(a);
                           c.erase(b);
                           candidates.push_back(std::move(c));
                         }
                       }
                       emit_filtered(core, candidates, out, rep);
                     });
}

EnumerationReport enum_mcvc_oracle(const Graph& g, const EnumOptions& options) {
  detail::Stopwatch clock;
  EnumerationReport report;
  report.algorithm = "oracle";
  report.n = g.n();
  auto covers = oracle_enum_cvc_minimal(g);
  report.count = covers.size();
  report.nodes = 1;
  report.leaves = report.branch_leaves = g.n() < 64 ? (std::uint64_t{1} << g.n()) : 0;
  if (options.collect) report.covers = std::move(covers);
  report.elapsed = clock.elapsed();
  return report;
}

Algorithm select_algorithm(const Graph& g, const EnumOptions& options) {
  const Reduction r = reduce(g);
  if (r.kind != Reduction::Kind::connected) return Algorithm::general;
  const Graph& core = r.core.graph;
  if (is_split(core)) return Algorithm::split;
  if (is_cobipartite(core)) return Algorithm::cobipartite;
  if (is_chordal(core)) return Algorithm::chordal;
  if (is_distance_hereditary(core)) return Algorithm::dh;
  if (options.assume_chordality5) return Algorithm::chord5;
  if (core.n() <= options.size_guard && chordality(core, options.size_guard) <= 5) return Algorithm::chord5;
  return Algorithm::general;
}

EnumerationReport enum_mcvc_auto(const Graph& g, const EnumOptions& options) {
  EnumOptions inner = options;
  inner.verify_class = false;
  return enumerate_mcvc(g, select_algorithm(g, options), inner);
}

EnumerationReport enumerate_mcvc(const Graph& g, Algorithm algorithm, const EnumOptions& options) {
  switch (algorithm) {
    case Algorithm::automatic: return enum_mcvc_auto(g, options);
    case Algorithm::general: return enum_mcvc_general(g, options);
    case Algorithm::chordal: return enum_mcvc_chordal(g, options);
    case Algorithm::chord5: return enum_mcvc_chord5(g, options);
    case Algorithm::dh: return enum_mcvc_dh(g, options);
    case Algorithm::split: return enum_mcvc_split(g, options);
    case Algorithm::cobipartite: return enum_mcvc_cobipartite(g, options);
    case Algorithm::oracle: return enum_mcvc_oracle(g, options);
  }
  throw std::invalid_argument("enumerate_mcvc: unknown algorithm");
}

std::optional<int> min_cvc_size(const Graph& g) {
  const auto report = enum_mcvc_auto(g);
  if (report.covers.empty()) return std::nullopt;
  int best = report.covers.front().size();
  for (const auto& c : report.covers) best = std::min(best, c.size());
  return best;
}

}  // namespace mcvc
