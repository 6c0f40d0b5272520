#include "mcvc/mvc_enum.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcvc/generators.hpp"
#include "mcvc/graph_io.hpp"
#include "mcvc/oracle.hpp"
#include "mcvc/structure.hpp"
#include "test_support.hpp"

namespace mcvc {
namespace {

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent_set(g, s)) return false;
  for (Vertex v : s.complement())
    if (!g.neighbors(v).intersects(s)) return false;
  return true;
}

void check(const Graph& g) {
  auto report = enum_minimal_vertex_covers(g);
  const std::string id = serialize_graph(g, GraphFormat::graph6);
  ASSERT_EQ(report.covers, oracle_enum_mvc(g)) << id;
  ASSERT_EQ(report.count, report.covers.size());
  ASSERT_EQ(report.duplicates, 0U) << id;
  ASSERT_GE(report.leaves, report.count);
  if (g.n() > 0) ASSERT_LE(report.count, moon_moser_bound(g.n())) << id;
  for (const auto& u : report.covers) {
    ASSERT_TRUE(is_maximal_independent(g, u.complement())) << id;
    for (Vertex v : u) ASSERT_FALSE(is_vertex_cover(g, u - VertexSet(g.n(), {v}))) << id;
  }
}

TEST(MvcEnum, Examples) {
  auto k3 = enum_minimal_vertex_covers(Graph::complete(3));
  EXPECT_EQ(k3.covers, (std::vector<VertexSet>{VertexSet(3, {0, 1}), VertexSet(3, {0, 2}), VertexSet(3, {1, 2})}));
  for (int k = 1; k <= 5; ++k) {
    std::uint64_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= 3;
    EXPECT_EQ(enum_minimal_vertex_covers(gen_triangles(k)).count, expected);
  }
  auto edgeless = enum_minimal_vertex_covers(Graph(5));
  ASSERT_EQ(edgeless.covers.size(), 1U);
  EXPECT_TRUE(edgeless.covers[0].empty());
}

TEST(MvcEnum, CountOnly) {
  EnumOptions opts;
  opts.collect = false;
  auto r = enum_minimal_vertex_covers(gen_triangles(3), opts);
  EXPECT_EQ(r.count, 27U);
  EXPECT_TRUE(r.covers.empty());
}

TEST(MvcEnum, MoonMoserBound) {
  EXPECT_EQ(moon_moser_bound(1), 1U);
  EXPECT_EQ(moon_moser_bound(2), 2U);
  EXPECT_EQ(moon_moser_bound(4), 4U);
  EXPECT_EQ(moon_moser_bound(5), 6U);
  EXPECT_EQ(moon_moser_bound(6), 9U);
  EXPECT_EQ(moon_moser_bound(7), 12U);
  EXPECT_EQ(moon_moser_bound(8), 18U);
  EXPECT_EQ(moon_moser_bound(9), 27U);
  EXPECT_THROW(moon_moser_bound(0), std::invalid_argument);
  EXPECT_THROW(moon_moser_bound(200), std::overflow_error);
}

TEST(MvcEnum, MatchesOracleOnAllGraphsUpToSixVertices) {
  check(Graph(0));
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code)
      check(testing::graph_from_code(n, code));
}

TEST(MvcEnum, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial)
    check(testing::random_graph(testing::uniform_int(rng, 1, 10), testing::uniform_real(rng, 0.05, 0.95), rng));
}

TEST(MvcEnum, DisconnectedInputs) {
  check(gen_triangles(3));
  Graph g = gen_triangles(2);
  g = Graph(8, g.edges());
  check(g);
}

}  // namespace
}  // namespace mcvc
