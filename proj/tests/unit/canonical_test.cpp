#include <gtest/gtest.h>

#include "hlindex/canonical.hpp"
#include "hlindex/generators.hpp"
#include "test_graphs.hpp"

namespace hl {
namespace {

TEST(Canonical, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 6 + seed % 12;
    cfg.seed = seed;
    auto g = random_bipartite_subcubic(cfg);
    auto h = testing::shuffled(g, seed * 7919);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(are_isomorphic(g, h));
  }
}

TEST(Canonical, SeparatesNonIsomorphic) {
  EXPECT_FALSE(are_isomorphic(path_graph(4), testing::star(3)));
  auto two_triangles = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_NE(canonical_form(cycle_graph(6)), canonical_form(two_triangles));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}

TEST(Canonical, LabelingIsAPermutation) {
  auto labels = canonical_labeling(heawood());
  std::sort(labels.begin(), labels.end());
  for (Vertex i = 0; i < 14; ++i) EXPECT_EQ(labels[i], i);
  EXPECT_TRUE(canonical_labeling(Graph::empty(0)).empty());
}

TEST(Heawood, Recognition) {
  EXPECT_TRUE(is_heawood(heawood()));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EXPECT_TRUE(is_heawood(testing::shuffled(heawood(), seed)));
  }
  EXPECT_FALSE(is_heawood(cycle_graph(14)));
  // 3-regular bipartite on 14 vertices with 4-cycles.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 7; ++i) {
    for (Vertex o : {0u, 1u, 2u}) edges.emplace_back(i, 7 + (i + o) % 7);
  }
  EXPECT_FALSE(is_heawood(Graph::from_edge_list(14, edges)));
}

}  // namespace
}  // namespace hl
