#include "mcvc/generators.hpp"

#include <random>
#include <stdexcept>

namespace mcvc {
namespace {

void require_positive(int k, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be at least 1");
}

}  // namespace

Graph gen_triangles(int k) {
  require_positive(k, "gen_triangles");
  Graph g(3 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(3 * i, 3 * i + 1);
    g.add_edge(3 * i, 3 * i + 2);
    g.add_edge(3 * i + 1, 3 * i + 2);
  }
  return g;
}

Graph gen_apex_triangles(int k) {
  require_positive(k, "gen_apex_triangles");
  Graph g(3 * k + 1);
  for (auto [u, v] : gen_triangles(k).edges()) g.add_edge(u, v);
  for (Vertex v = 0; v < 3 * k; ++v) g.add_edge(v, 3 * k);
  return g;
}

Graph gen_block_chain(int k) {
  require_positive(k, "gen_block_chain");
  Graph g(6 * k + 1);
  auto x = [k](int j) { return 5 * k + j - 1; };
  auto link = [&](int j, int block) {
    for (int t = 0; t < 5; ++t) g.add_edge(x(j), 5 * (block - 1) + t);
  };
  for (int j = 1; j <= k + 1; ++j) {
    if (j >= 2) link(j, j - 1);
    if (j <= k) link(j, j);
  }
  return g;
}

Graph gen_broom_tree(int k) {
  require_positive(k, "gen_broom_tree");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(2 * k, 2 * i);
  }
  return g;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace mcvc
