#include "mcvc/recognizers.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcvc/generators.hpp"
#include "mcvc/graph_io.hpp"
#include "mcvc/oracle.hpp"
#include "mcvc/structure.hpp"
#include "test_support.hpp"

namespace mcvc {
namespace {

using testing::graph_from_code;

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    if (!(s - VertexSet(g.n(), {u})).is_subset_of(g.neighbors(u))) return false;
  return true;
}

// Exhaustive partition searches.
bool brute_bipartite(const Graph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    auto side = VertexSet::from_mask(g.n(), mask);
    if (is_independent_set(g, side) && is_independent_set(g, side.complement())) return true;
  }
  return false;
}

bool brute_split(const Graph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    auto side = VertexSet::from_mask(g.n(), mask);
    if (is_clique(g, side) && is_independent_set(g, side.complement())) return true;
  }
  return false;
}

bool brute_cobipartite(const Graph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    auto side = VertexSet::from_mask(g.n(), mask);
    if (is_clique(g, side) && is_clique(g, side.complement())) return true;
  }
  return false;
}

Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}); }

void expect_witnesses(const Graph& g) {
  if (auto sp = split_partition(g)) {
    EXPECT_TRUE(is_clique(g, sp->clique));
    EXPECT_TRUE(is_independent_set(g, sp->independent));
    EXPECT_EQ(sp->clique | sp->independent, g.vertices());
    EXPECT_FALSE(sp->clique.intersects(sp->independent));
  }
  if (auto cp = cobipartite_partition(g)) {
    EXPECT_TRUE(is_clique(g, cp->first));
    EXPECT_TRUE(is_clique(g, cp->second));
    EXPECT_EQ(cp->first | cp->second, g.vertices());
    EXPECT_FALSE(cp->first.intersects(cp->second));
  }
}

void check_against_definitions(const Graph& g) {
  const int chord = chordality(g);
  const std::string id = serialize_graph(g, GraphFormat::graph6);
  ASSERT_EQ(is_chordal(g), chord <= 3) << id;
  const bool bip = brute_bipartite(g);
  ASSERT_EQ(is_bipartite(g), bip) << id;
  ASSERT_EQ(is_chordal_bipartite(g), bip && chord <= 4) << id;
  ASSERT_EQ(is_chordal_bipartite_exhaustive(g), bip && chord <= 4) << id;
  ASSERT_EQ(is_split(g), brute_split(g)) << id;
  ASSERT_EQ(is_cobipartite(g), brute_cobipartite(g)) << id;
  expect_witnesses(g);
}

TEST(Recognizers, ChordalExamples) {
  std::mt19937_64 rng(2);
  EXPECT_TRUE(is_chordal(testing::random_tree(15, rng)));
  EXPECT_FALSE(is_chordal(Graph::cycle(4)));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_chordal(gen_apex_triangles(k)));
}

TEST(Recognizers, ChordalBipartiteExamples) {
  EXPECT_FALSE(is_chordal_bipartite(Graph::cycle(6)));
  EXPECT_TRUE(is_chordal_bipartite(Graph::cycle(4)));
  EXPECT_TRUE(is_chordal_bipartite(gen_block_chain(1)));
  EXPECT_EQ(chordality(gen_block_chain(1)), 4);
}

TEST(Recognizers, SplitExamples) {
  auto k4 = split_partition(Graph::complete(4));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->clique, VertexSet::full(4));
  EXPECT_TRUE(k4->independent.empty());
  EXPECT_FALSE(is_split(Graph::cycle(4)));
  auto star = split_partition(Graph::star(3));
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(star->clique.size(), 2);
  EXPECT_TRUE(star->clique.contains(0));
}

TEST(Recognizers, CobipartiteExamples) {
  EXPECT_TRUE(is_cobipartite(Graph::complete(4)));
  EXPECT_FALSE(is_cobipartite(Graph::cycle(5)));
  EXPECT_TRUE(is_cobipartite(Graph::cycle(4)));
}

TEST(Recognizers, DistanceHereditaryExamples) {
  std::mt19937_64 rng(4);
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_distance_hereditary(gen_apex_triangles(k)));
  EXPECT_FALSE(is_distance_hereditary(Graph::cycle(5)));
  EXPECT_TRUE(is_distance_hereditary(testing::random_tree(20, rng)));
  EXPECT_FALSE(is_distance_hereditary(house()));
  EXPECT_THROW(is_distance_hereditary(gen_triangles(2)), PreconditionError);
}

TEST(Recognizers, ClassifyExamples) {
  auto k4 = classify(Graph::complete(4));
  EXPECT_TRUE(k4.is_chordal);
  EXPECT_TRUE(k4.is_split);
  EXPECT_TRUE(k4.is_cobipartite);
  EXPECT_TRUE(k4.is_distance_hereditary);
  EXPECT_EQ(k4.chordality_le5, Tristate::yes);

  auto c6 = classify(Graph::cycle(6));
  EXPECT_FALSE(c6.is_chordal || c6.is_chordal_bipartite || c6.is_split || c6.is_cobipartite ||
               c6.is_distance_hereditary);
  EXPECT_EQ(c6.chordality_le5, Tristate::no);

  auto c5 = classify(Graph::cycle(5));
  EXPECT_FALSE(c5.is_chordal || c5.is_chordal_bipartite || c5.is_split || c5.is_cobipartite ||
               c5.is_distance_hereditary);
  EXPECT_EQ(c5.chordality_le5, Tristate::yes);

  EXPECT_EQ(classify(Graph::cycle(30)).chordality_le5, Tristate::unverified);
  EXPECT_EQ(classify(Graph::path(30)).chordality_le5, Tristate::yes);
}

TEST(Recognizers, ClassifyInvariants) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = testing::random_graph(testing::uniform_int(rng, 1, 9), testing::uniform_real(rng, 0.1, 0.9), rng);
    auto r = classify(g);
    if (r.is_chordal) ASSERT_EQ(r.chordality_le5, Tristate::yes);
    if (r.is_split) ASSERT_TRUE(r.is_chordal);
  }
}

TEST(Recognizers, AllGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code)
      check_against_definitions(graph_from_code(n, code));
}

TEST(Recognizers, RandomGraphsUpToEightVertices) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10000; ++trial) {
    Graph g = testing::random_graph(testing::uniform_int(rng, 1, 8), testing::uniform_real(rng, 0.05, 0.95), rng);
    check_against_definitions(g);
  }
}

TEST(Recognizers, DistanceHereditaryMatchesDefinition) {
  for (int n = 1; n <= 7; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      Graph g = graph_from_code(n, code);
      // at n = 7 one labelling per isomorphism class suffices
      if (n == 7 && !testing::degrees_non_increasing(g)) continue;
      if (!is_connected(g)) continue;
      ASSERT_EQ(is_distance_hereditary(g), oracle_is_distance_hereditary(g)) << serialize_graph(g, GraphFormat::graph6);
    }
}

TEST(Recognizers, ClassGeneratorsLandInTheirClass) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(rng, 2, 14);
    EXPECT_TRUE(is_chordal(testing::random_chordal(n, rng)));
    EXPECT_TRUE(is_distance_hereditary(testing::random_distance_hereditary(n, rng)));
    EXPECT_TRUE(is_split(testing::random_split(n, rng)));
    EXPECT_TRUE(is_cobipartite(testing::random_cobipartite(n, rng)));
    if (n >= 4) EXPECT_LE(chordality(testing::random_chordality5(n, rng)), 5);
    EXPECT_TRUE(is_chordal_bipartite_exhaustive(testing::random_chordal_bipartite(n, rng)));
  }
}

// Each side of a chordal bipartite graph has a weakly simplicial vertex.
TEST(Recognizers, ChordalBipartiteSidesHaveWeaklySimplicialVertices) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::random_chordal_bipartite(testing::uniform_int(rng, 2, 14), rng);
    if (!is_connected(g)) continue;
    auto colours = bipartition(g);
    ASSERT_TRUE(colours.has_value());
    VertexSet left(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
      if ((*colours)[static_cast<std::size_t>(v)] == 0) left.insert(v);
    auto ws = weakly_simplicial_vertices(g);
    EXPECT_TRUE(ws.intersects(left)) << serialize_graph(g, GraphFormat::graph6);
    EXPECT_TRUE(ws.intersects(left.complement())) << serialize_graph(g, GraphFormat::graph6);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace mcvc
