#include "mcvc/minor_graph.hpp"

#include <stdexcept>

namespace mcvc {

MinorGraph MinorGraph::trivial(const Graph& original) {
  MinorGraph m;
  m.graph_ = original;
  m.origin_n_ = original.n();
  m.bags_.reserve(static_cast<std::size_t>(original.n()));
  for (Vertex v = 0; v < original.n(); ++v) m.bags_.emplace_back(original.n(), std::initializer_list<Vertex>{v});
  m.rebuild_owner();
  return m;
}

void MinorGraph::rebuild_owner() {
  owner_.assign(static_cast<std::size_t>(origin_n_), -1);
  for (std::size_t s = 0; s < bags_.size(); ++s)
    for (Vertex v : bags_[s]) owner_[static_cast<std::size_t>(v)] = static_cast<Vertex>(s);
}

MinorGraph MinorGraph::contract_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size() || !graph_.has_edge(u, v)) {
    throw std::invalid_argument("MinorGraph::contract_edge: not an edge of the minor");
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  auto relabel = [&](Vertex x) { return x == drop ? keep : (x > drop ? x - 1 : x); };

  MinorGraph out;
  out.origin_n_ = origin_n_;
  out.graph_ = Graph(size() - 1);
  for (auto [a, b] : graph_.edges()) {
    Vertex ra = relabel(a);
    Vertex rb = relabel(b);
    if (ra != rb) out.graph_.add_edge(ra, rb);
  }
  out.bags_ = bags_;
  out.bags_[static_cast<std::size_t>(keep)] |= bags_[static_cast<std::size_t>(drop)];
  out.bags_.erase(out.bags_.begin() + drop);
  out.rebuild_owner();
  return out;
}

MinorGraph MinorGraph::remove_vertices(const VertexSet& supers) const {
  auto sub = induced_subgraph(graph_, supers.complement());
  MinorGraph out;
  out.origin_n_ = origin_n_;
  out.graph_ = std::move(sub.graph);
  for (Vertex s : sub.to_parent) out.bags_.push_back(bags_[static_cast<std::size_t>(s)]);
  out.rebuild_owner();
  return out;
}

}  // namespace mcvc
