#include "mcvc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace mcvc {
namespace {

using Mask = std::uint64_t;

void check_guard(const Graph& g, int guard, const char* who) {
  if (g.n() > guard || g.n() > 30) {
    throw SizeGuardError(std::string(who) + ": instance too large (n = " + std::to_string(g.n()) + ")");
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

bool covers_all_edges(const std::vector<Mask>& adj, Mask set) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if ((set >> v) & 1U) continue;
    if ((adj[v] & ~set) != 0) return false;
  }
  return true;
}

Mask reach_within(const std::vector<Mask>& adj, Mask set, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(const std::vector<Mask>& adj, Mask set) {
  if ((set & (set - 1)) == 0) return true;
  return reach_within(adj, set, __builtin_ctzll(set)) == set;
}

// Keeps the members of `property` that have no proper subset in `property`.
std::vector<VertexSet> inclusion_minimal(int n, const std::vector<std::uint8_t>& property) {
  const Mask total = Mask{1} << n;
  // below[m]: some proper subset of m has the property
  std::vector<std::uint8_t> below(static_cast<std::size_t>(total), 0);
  std::vector<VertexSet> out;
  for (Mask m = 0; m < total; ++m) {
    std::uint8_t any = 0;
    for (Mask bits = m; bits && !any; bits &= bits - 1) {
      Mask sub = m & ~(bits & (~bits + 1));
      any = property[static_cast<std::size_t>(sub)] | below[static_cast<std::size_t>(sub)];
    }
    below[static_cast<std::size_t>(m)] = any;
    if (property[static_cast<std::size_t>(m)] && !any) out.push_back(VertexSet::from_mask(n, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> oracle_enum_cvc_minimal(const Graph& g, int guard) {
  check_guard(g, guard, "oracle_enum_cvc_minimal");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<std::uint8_t> cvc(static_cast<std::size_t>(Mask{1} << n), 0);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    cvc[static_cast<std::size_t>(m)] = covers_all_edges(adj, m) && connected_within(adj, m);
  return inclusion_minimal(n, cvc);
}

std::vector<VertexSet> oracle_enum_mvc(const Graph& g, int guard) {
  check_guard(g, guard, "oracle_enum_mvc");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<std::uint8_t> vc(static_cast<std::size_t>(Mask{1} << n), 0);
  for (Mask m = 0; m < (Mask{1} << n); ++m) vc[static_cast<std::size_t>(m)] = covers_all_edges(adj, m);
  return inclusion_minimal(n, vc);
}

bool oracle_is_distance_hereditary(const Graph& g, int guard) {
  check_guard(g, guard, "oracle_is_distance_hereditary");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  auto distances_within = [&](Mask set, int src) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    Mask seen = Mask{1} << src;
    Mask frontier = seen;
    for (int d = 1; frontier; ++d) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
      next &= set & ~seen;
      for (Mask f = next; f; f &= f - 1) dist[static_cast<std::size_t>(__builtin_ctzll(f))] = d;
      seen |= next;
      frontier = next;
    }
    return dist;
  };
  const Mask all = (Mask{1} << n) - 1;
  std::vector<std::vector<int>> full;
  for (int v = 0; v < n; ++v) full.push_back(distances_within(all, v));
  for (Mask m = 1; m <= all; ++m) {
    if ((m & (m - 1)) == 0 || !connected_within(adj, m)) continue;
    for (Mask a = m; a; a &= a - 1) {
      const int src = __builtin_ctzll(a);
      const auto d = distances_within(m, src);
      for (Mask b = m; b; b &= b - 1) {
        const int dst = __builtin_ctzll(b);
        if (d[static_cast<std::size_t>(dst)] != full[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)])
          return false;
      }
    }
  }
  return true;
}

}  // namespace mcvc
