#include "mcvc/recognizers.hpp"

#include <algorithm>
#include <numeric>

namespace mcvc {

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet numbered(n);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (numbered.contains(v)) continue;
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    numbered.insert(pick);
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick) - numbered) ++weight[static_cast<std::size_t>(w)];
  }
  return order;
}

bool is_chordal(const Graph& g) {
  const auto order = maximum_cardinality_search(g);
  std::vector<int> position(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  // In the reversed order, the neighbours of v that follow it are exactly the
  // ones MCS numbered before v; they must form a clique. It suffices that they
  // all (except the closest one, u) are adjacent to u.
  for (Vertex v : order) {
    VertexSet earlier(g.n());
    Vertex closest = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[static_cast<std::size_t>(w)] >= position[static_cast<std::size_t>(v)]) continue;
      earlier.insert(w);
      if (closest < 0 || position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(closest)])
        closest = w;
    }
    if (closest < 0) continue;
    earlier.erase(closest);
    if (!earlier.is_subset_of(g.neighbors(closest))) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

bool weakly_simplicial_within(const Graph& g, const VertexSet& alive, Vertex v) {
  const VertexSet nbrs = g.neighbors(v) & alive;
  for (Vertex a : nbrs)
    if (g.neighbors(a).intersects(nbrs)) return false;
  std::vector<VertexSet> hoods;
  for (Vertex a : nbrs) hoods.push_back(g.neighbors(a) & alive);
  std::sort(hoods.begin(), hoods.end(), [](const VertexSet& x, const VertexSet& y) { return x.size() < y.size(); });
  for (std::size_t i = 1; i < hoods.size(); ++i)
    if (!hoods[i - 1].is_subset_of(hoods[i])) return false;
  return true;
}

}  // namespace

bool is_chordal_bipartite(const Graph& g) {
  if (!is_bipartite(g)) return false;
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    Vertex found = -1;
    for (Vertex v : alive) {
      if (weakly_simplicial_within(g, alive, v)) {
        found = v;
        break;
      }
    }
    if (found < 0) return false;
    alive.erase(found);
  }
  return true;
}

bool is_chordal_bipartite_exhaustive(const Graph& g, int guard) { return is_bipartite(g) && chordality(g, guard) <= 4; }

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.n();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
  long head = 0;
  long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[static_cast<std::size_t>(i)]);
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

  SplitPartition part{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) (i < m ? part.clique : part.independent).insert(order[static_cast<std::size_t>(i)]);
  for (Vertex v : part.independent) {
    if (part.clique.is_subset_of(g.neighbors(v))) {
      part.independent.erase(v);
      part.clique.insert(v);
      break;
    }
  }
  return part;
}

std::optional<CobipartitePartition> cobipartite_partition(const Graph& g) {
  auto colour = bipartition(g.complement());
  if (!colour) return std::nullopt;
  CobipartitePartition part{VertexSet(g.n()), VertexSet(g.n())};
  for (Vertex v = 0; v < g.n(); ++v) ((*colour)[static_cast<std::size_t>(v)] == 0 ? part.first : part.second).insert(v);
  return part;
}

bool is_distance_hereditary(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("is_distance_hereditary: graph is disconnected");
  VertexSet alive = g.vertices();
  while (alive.size() > 1) {
    Vertex prune = -1;
    for (Vertex v : alive) {
      const VertexSet nv = g.neighbors(v) & alive;
      if (nv.size() == 1) {
        prune = v;
        break;
      }
      for (Vertex w : alive) {
        if (w == v) continue;
        VertexSet a = nv;
        VertexSet b = g.neighbors(w) & alive;
        if (a.contains(w)) a.erase(w);
        if (b.contains(v)) b.erase(v);
        if (a == b) {
          prune = v;
          break;
        }
      }
      if (prune >= 0) break;
    }
    if (prune < 0) return false;
    alive.erase(prune);
  }
  return true;
}

GraphClassReport classify(const Graph& g, int guard) {
  GraphClassReport r;
  r.is_chordal = is_chordal(g);
  r.is_chordal_bipartite = is_chordal_bipartite(g);
  r.is_split = is_split(g);
  r.is_cobipartite = is_cobipartite(g);
  r.is_distance_hereditary = true;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() <= 2) continue;
    if (!is_distance_hereditary(induced_subgraph(g, comp).graph)) {
      r.is_distance_hereditary = false;
      break;
    }
  }
  if (r.is_chordal) {
    r.chordality_le5 = Tristate::yes;
  } else if (g.n() <= guard) {
    r.chordality_le5 = chordality(g, guard) <= 5 ? Tristate::yes : Tristate::no;
  } else {
    r.chordality_le5 = Tristate::unverified;
  }
  return r;
}

}  // namespace mcvc
