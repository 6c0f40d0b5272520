#include "mcvc/graph.hpp"

#include <stdexcept>

namespace mcvc {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("Graph::cycle: need at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

int Graph::m() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) {
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_.at(static_cast<std::size_t>(u)).erase(v);
  adj_.at(static_cast<std::size_t>(v)).erase(u);
}

VertexSet Graph::closed_neighborhood(const VertexSet& set) const {
  VertexSet out = set;
  for (Vertex v : set) out |= neighbors(v);
  return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& set) const { return closed_neighborhood(set) - set; }

VertexSet Graph::isolated_vertices() const {
  VertexSet out(n());
  for (Vertex v = 0; v < n(); ++v)
    if (neighbors(v).empty()) out.insert(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph c(n());
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v = u + 1; v < n(); ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

VertexSet InducedSubgraph::lift(const VertexSet& child_set) const {
  VertexSet out(static_cast<int>(to_child.size()));
  for (Vertex v : child_set) out.insert(to_parent.at(static_cast<std::size_t>(v)));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.n()) throw std::out_of_range("induced_subgraph: subset universe does not match graph");
  InducedSubgraph sub;
  sub.to_child.assign(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v : subset) {
    sub.to_child[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i]) & subset) {
      Vertex j = sub.to_child[static_cast<std::size_t>(w)];
      if (static_cast<std::size_t>(j) > i) sub.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return sub;
}

}  // namespace mcvc
