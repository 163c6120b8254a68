#include <gtest/gtest.h>

#include "hlindex/generators.hpp"
#include "hlindex/imbalance.hpp"
#include "test_graphs.hpp"

namespace hl {
namespace {

using testing::c6;

TEST(SeparatedSet, PairwiseFar) {
  GeneratorConfig cfg;
  cfg.n = 120;
  cfg.seed = 3;
  auto g = random_bipartite_subcubic(cfg);
  for (std::size_t sep : {2u, 4u, 7u}) {
    auto v0 = separated_set(g, sep);
    ASSERT_FALSE(v0.empty());
    for (std::size_t i = 0; i < v0.size(); ++i) {
      auto dist = distances_from(g, VertexSet{v0[i]});
      for (std::size_t j = i + 1; j < v0.size(); ++j) EXPECT_GE(dist[v0[j]], sep);
    }
  }
}

TEST(SeparatedSet, OnePerComponent) {
  Graph g = c6();
  for (int i = 1; i < 5; ++i) g = disjoint_union(g, c6());
  EXPECT_EQ(separated_set(g, 38).size(), 5u);
}

TEST(Pipeline, Hexagon) {
  auto rep = fraction_pipeline(c6());
  EXPECT_EQ(rep.v0_set.size(), 1u);
  EXPECT_EQ(rep.a + rep.b, 1u);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_GE(rep.implied_count, 1u);
  EXPECT_EQ(rep.eigen_interval_count, 4u);
  EXPECT_TRUE(rep.conforming);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.epsilon * Rational(1099511627776), 1);
  EXPECT_EQ(rep.delta * 2, rep.epsilon);
}

TEST(Pipeline, TwentyHexagons) {
  Graph g = c6();
  for (int i = 1; i < 20; ++i) g = disjoint_union(g, c6());
  PipelineConfig cfg;
  cfg.jobs = 4;
  auto rep = fraction_pipeline(g, cfg);
  EXPECT_EQ(rep.v0_set.size(), 20u);
  EXPECT_EQ(rep.a + rep.b, 20u);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_TRUE(rep.all_succeeded);
  EXPECT_TRUE(rep.total_ok);
  EXPECT_TRUE(rep.sum_ok);
  EXPECT_EQ(rep.eigen_interval_count, 80u);
  EXPECT_GE(rep.eigen_interval_count, rep.implied_count);
  EXPECT_TRUE(rep.ok());
}

TEST(Pipeline, HeawoodComponentIsRefused) {
  auto g = disjoint_union(heawood(), c6());
  auto rep = fraction_pipeline(g);
  ASSERT_EQ(rep.v0_set.size(), 2u);
  std::size_t refused = 0;
  for (const auto& o : rep.outcomes) refused += o.result.outcome == SearchOutcome::refused;
  EXPECT_EQ(refused, 1u);
  EXPECT_EQ(rep.a + rep.b, 1u);
  EXPECT_EQ(rep.failures, 1u);
  EXPECT_FALSE(rep.all_succeeded);
  EXPECT_EQ(rep.eigen_interval_count, 4u);
  EXPECT_TRUE(rep.ok());
}

TEST(Pipeline, ShrunkenParametersAreNonConforming) {
  GeneratorConfig gc;
  gc.n = 60;
  gc.seed = 11;
  gc.saturate = true;
  auto g = random_bipartite_subcubic(gc);
  PipelineConfig cfg;
  cfg.separation = 6;
  cfg.search.radius = 3;
  cfg.jobs = 2;
  auto rep = fraction_pipeline(g, cfg);
  EXPECT_FALSE(rep.conforming);
  EXPECT_EQ(rep.a + rep.b + rep.failures, rep.v0_set.size());
  EXPECT_TRUE(rep.ok());
}

TEST(Pipeline, JobsDoNotChangeTheResult) {
  GeneratorConfig gc;
  gc.n = 80;
  gc.seed = 21;
  gc.saturate = true;
  gc.girth_floor = 6;
  auto g = random_bipartite_subcubic(gc);
  PipelineConfig one;
  one.separation = 5;
  one.search.radius = 4;
  PipelineConfig many = one;
  many.jobs = 4;
  auto r1 = fraction_pipeline(g, one);
  auto r4 = fraction_pipeline(g, many);
  EXPECT_EQ(r1.v0_set, r4.v0_set);
  EXPECT_EQ(r1.a, r4.a);
  EXPECT_EQ(r1.b, r4.b);
  EXPECT_EQ(r1.final_imb, r4.final_imb);
}

TEST(Pipeline, RandomGraphsSatisfyInequalities) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorConfig gc;
    gc.n = 40 + 10 * seed;
    gc.seed = seed;
    gc.saturate = seed % 2 == 0;
    auto g = random_bipartite_subcubic(gc);
    PipelineConfig cfg;
    cfg.separation = 6;
    cfg.search.radius = 4;
    auto rep = fraction_pipeline(g, cfg);
    EXPECT_TRUE(rep.ok()) << seed;
    EXPECT_GE(rep.eigen_interval_count, rep.implied_count) << seed;
  }
}

TEST(Pipeline, RejectsNonBipartite) {
  EXPECT_THROW(fraction_pipeline(cycle_graph(5)), std::invalid_argument);
}

}  // namespace
}  // namespace hl
