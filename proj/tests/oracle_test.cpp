#include "mcvc/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcvc/generators.hpp"
#include "test_support.hpp"

namespace mcvc {
namespace {

TEST(Oracle, MinimalConnectedCovers) {
  EXPECT_EQ(oracle_enum_cvc_minimal(Graph::complete(3)).size(), 3U);
  EXPECT_EQ(oracle_enum_cvc_minimal(Graph::path(3)), std::vector<VertexSet>{VertexSet(3, {1})});
  EXPECT_EQ(oracle_enum_cvc_minimal(gen_apex_triangles(2)).size(), 9U);
  EXPECT_EQ(oracle_enum_cvc_minimal(gen_apex_triangles(3)).size(), 27U);
  EXPECT_TRUE(oracle_enum_cvc_minimal(gen_triangles(2)).empty());
  EXPECT_EQ(oracle_enum_cvc_minimal(Graph::cycle(5)).size(), 5U);
  EXPECT_EQ(oracle_enum_cvc_minimal(Graph::cycle(4)).size(), 4U);
  EXPECT_EQ(oracle_enum_cvc_minimal(Graph::cycle(6)).size(), 6U);
  EXPECT_EQ(oracle_enum_cvc_minimal(gen_block_chain(1)).size(), 7U);
  // k = 1 is K4: the triangle avoiding the apex is also minimal
  EXPECT_EQ(oracle_enum_cvc_minimal(gen_apex_triangles(1)).size(), 4U);
}

TEST(Oracle, MinimalVertexCovers) {
  EXPECT_EQ(oracle_enum_mvc(Graph::complete(3)).size(), 3U);
  EXPECT_EQ(oracle_enum_mvc(gen_block_chain(1)),
            (std::vector<VertexSet>{VertexSet(7, {0, 1, 2, 3, 4}), VertexSet(7, {5, 6})}));
  EXPECT_EQ(oracle_enum_mvc(gen_triangles(2)).size(), 9U);
  EXPECT_EQ(oracle_enum_mvc(Graph(3)), std::vector<VertexSet>{VertexSet(3)});
}

TEST(Oracle, DistanceHereditary) {
  std::mt19937_64 rng(3);
  EXPECT_FALSE(oracle_is_distance_hereditary(Graph::cycle(5)));
  EXPECT_TRUE(oracle_is_distance_hereditary(testing::random_tree(10, rng)));
  EXPECT_FALSE(oracle_is_distance_hereditary(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})));
  EXPECT_TRUE(oracle_is_distance_hereditary(Graph::cycle(4)));
  EXPECT_TRUE(oracle_is_distance_hereditary(gen_apex_triangles(3)));
}

TEST(Oracle, SizeGuards) {
  EXPECT_THROW(oracle_enum_cvc_minimal(Graph::path(25)), SizeGuardError);
  EXPECT_THROW(oracle_enum_mvc(Graph::path(25)), SizeGuardError);
  EXPECT_THROW(oracle_is_distance_hereditary(Graph::path(13)), SizeGuardError);
  EXPECT_THROW(oracle_enum_mvc(Graph::path(9), 8), SizeGuardError);
}

}  // namespace
}  // namespace mcvc
