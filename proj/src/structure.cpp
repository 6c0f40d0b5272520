#include "mcvc/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace mcvc {

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& subset) {
  std::vector<VertexSet> out;
  VertexSet unseen = subset;
  while (!unseen.empty()) {
    Vertex start = unseen.first();
    VertexSet comp(g.n());
    comp.insert(start);
    unseen.erase(start);
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v) & unseen) {
        unseen.erase(w);
        comp.insert(w);
        stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_set(const Graph& g, const VertexSet& subset) {
  if (subset.size() <= 1) return true;
  Vertex start = subset.first();
  VertexSet seen(g.n());
  seen.insert(start);
  std::vector<Vertex> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : (g.neighbors(v) & subset) - seen) {
      seen.insert(w);
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == subset.size();
}

VertexSet articulation_points(const Graph& g, const VertexSet& subset) {
  VertexSet out(g.n());
  const auto base = connected_components(g, subset).size();
  for (Vertex v : subset) {
    if ((g.neighbors(v) & subset).size() < 2) continue;
    VertexSet rest = subset;
    rest.erase(v);
    if (connected_components(g, rest).size() > base) out.insert(v);
  }
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cut_vertices: graph is disconnected");
  return articulation_points(g, g.vertices());
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (cover.contains(v)) continue;
    if (!g.neighbors(v).is_subset_of(cover)) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& subset) {
  for (Vertex v : subset)
    if (g.neighbors(v).intersects(subset)) return false;
  return true;
}

bool is_minimal_cvc(const Graph& g, const VertexSet& cover) {
  if (!is_vertex_cover(g, cover) || !is_connected_set(g, cover)) return false;
  for (Vertex v : cover) {
    if (!g.neighbors(v).is_subset_of(cover)) continue;
    // every neighbour is inside the cover, so v must hold G[U] together
    if ((g.neighbors(v) & cover).size() < 2) return false;
    VertexSet rest = cover;
    rest.erase(v);
    if (is_connected_set(g, rest)) return false;
  }
  return true;
}

int chordality(const Graph& g, int guard) {
  if (g.n() > guard) {
    throw SizeGuardError("chordality: instance too large (n = " + std::to_string(g.n()) + " > " +
                         std::to_string(guard) + ")");
  }
  int best = 0;
  const int n = g.n();
  // Grow induced paths s = p_0, p_1, ..., p_k whose vertices all exceed s;
  // each induced cycle is found from its smallest vertex.
  std::function<void(Vertex, Vertex, const VertexSet&, int)> extend = [&](Vertex s, Vertex last,
                                                                          const VertexSet& blocked, int length) {
    for (Vertex w : g.neighbors(last) - blocked) {
      if (w < s) continue;
      if (g.has_edge(w, s)) {
        best = std::max(best, length + 1);
        continue;
      }
      VertexSet next = blocked | g.neighbors(last);
      next.insert(last);
      next.insert(w);
      extend(s, w, next, length + 1);
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex p1 : g.neighbors(s)) {
      if (p1 < s) continue;
      VertexSet blocked(n);
      blocked.insert(s);
      blocked.insert(p1);
      extend(s, p1, blocked, 2);
    }
  }
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      q.push(w);
    }
  }
  return dist;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::vector<VertexSet> BfsLayering::boundaries(int min_level) const {
  std::vector<VertexSet> out;
  for (std::size_t i = static_cast<std::size_t>(std::max(min_level, 1)); i < upper.size(); ++i)
    for (const auto& comp : upper[i])
      if (std::find(out.begin(), out.end(), comp.boundary) == out.end()) out.push_back(comp.boundary);
  std::sort(out.begin(), out.end());
  return out;
}

BfsLayering bfs_layering(const Graph& g, Vertex root) {
  if (!is_connected(g)) throw PreconditionError("bfs_layering: graph is disconnected");
  if (root < 0 || root >= g.n()) throw std::out_of_range("bfs_layering: root out of range");
  BfsLayering layering;
  layering.root = root;
  auto dist = bfs_distances(g, root);
  const int depth = *std::max_element(dist.begin(), dist.end());
  layering.levels.assign(static_cast<std::size_t>(depth + 1), VertexSet(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    layering.levels[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].insert(v);

  layering.upper.resize(static_cast<std::size_t>(depth + 1));
  VertexSet above(g.n());
  for (int i = depth; i >= 1; --i) {
    above |= layering.levels[static_cast<std::size_t>(i)];
    for (auto& comp : connected_components(g, above)) {
      UpperComponent h;
      h.level = i;
      h.boundary = g.open_neighborhood(comp);
      h.interface = comp & layering.levels[static_cast<std::size_t>(i)];
      h.vertices = std::move(comp);
      layering.upper[static_cast<std::size_t>(i)].push_back(std::move(h));
    }
  }
  return layering;
}

bool is_weakly_simplicial(const Graph& g, Vertex v) {
  const VertexSet& nbrs = g.neighbors(v);
  if (!is_independent_set(g, nbrs)) return false;
  std::vector<Vertex> order = nbrs.to_vector();
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!g.neighbors(order[i - 1]).is_subset_of(g.neighbors(order[i]))) return false;
  return true;
}

VertexSet weakly_simplicial_vertices(const Graph& g) {
  VertexSet out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (is_weakly_simplicial(g, v)) out.insert(v);
  return out;
}

}  // namespace mcvc
