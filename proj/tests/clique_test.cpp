#include "skewlab/clique.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using skewlab::CliqueEngine;
using skewlab::CliqueInstance;

const CliqueEngine kEngines[] = {CliqueEngine::enumeration, CliqueEngine::coloring,
                                 CliqueEngine::complement_mis};

CliqueInstance cycle(std::size_t n) {
  CliqueInstance inst(n);
  for (std::size_t i = 0; i < n; ++i) inst.relate(i, (i + 1) % n);
  return inst;
}

TEST(MaxClique, Examples) {
  CliqueInstance tri(3);
  tri.relate(0, 1);
  tri.relate(1, 2);
  tri.relate(0, 2);
  for (const auto e : kEngines) {
    EXPECT_EQ(skewlab::max_clique(tri, {e, 0}).size, 3u);
    EXPECT_EQ(skewlab::max_clique(CliqueInstance(7), {e, 0}).size, 1u);
    EXPECT_EQ(skewlab::max_clique(cycle(5), {e, 0}).size, 2u);
  }
  EXPECT_EQ(skewlab::max_clique(CliqueInstance(7)).members, (std::vector<std::size_t>{0}));
}

TEST(MaxClique, SelfRelationIgnored) {
  CliqueInstance inst(2);
  inst.relate(0, 0);
  EXPECT_FALSE(inst.related(0, 0));
  EXPECT_EQ(skewlab::max_clique(inst).size, 1u);
}

TEST(MaxClique, Caps) {
  EXPECT_THROW(CliqueInstance(0), std::invalid_argument);
  EXPECT_THROW(CliqueInstance(4097), std::invalid_argument);
}

// Every engine returns the exhaustive optimum and the lexicographically
// first optimal clique on random instances up to 20 elements, across
// densities and thread counts.
TEST(MaxClique, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    std::bernoulli_distribution coin(p);
    CliqueInstance inst(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng)) inst.relate(i, j);
      }
    }
    const auto related = [&](std::size_t i, std::size_t j) { return inst.related(i, j); };
    const auto optima = oracle::maximum_cliques_by_subsets(n, related);
    ASSERT_FALSE(optima.empty());
    const auto lex_first = *std::min_element(optima.begin(), optima.end());
    for (const auto e : kEngines) {
      for (const unsigned threads : {0u, 3u}) {
        const auto r = skewlab::max_clique(inst, {e, threads});
        ASSERT_EQ(r.size, lex_first.size()) << "trial " << trial << " engine " << skewlab::to_string(e);
        ASSERT_EQ(r.members, lex_first) << "trial " << trial << " engine " << skewlab::to_string(e);
        ASSERT_TRUE(inst.is_clique(r.members));
      }
    }
  }
}

// Larger random instances: engines must agree with each other and return
// valid witnesses; parallel size equals sequential size.
TEST(MaxClique, EnginesAgreeOnLargerInstances) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t n = 40 + rng() % 60;
    const double p = (trial % 3 == 0) ? 0.3 : (trial % 3 == 1 ? 0.6 : 0.85);
    std::bernoulli_distribution coin(p);
    CliqueInstance inst(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng)) inst.relate(i, j);
      }
    }
    const auto a = skewlab::max_clique(inst, {CliqueEngine::coloring, 0});
    const auto b = skewlab::max_clique(inst, {CliqueEngine::complement_mis, 0});
    const auto c = skewlab::max_clique(inst, {CliqueEngine::coloring, 4});
    const auto d = skewlab::max_clique(inst, {CliqueEngine::complement_mis, 4});
    ASSERT_EQ(a.size, b.size) << trial;
    ASSERT_EQ(a.size, c.size) << trial;
    ASSERT_EQ(a.size, d.size) << trial;
    EXPECT_EQ(a.members, b.members);
    EXPECT_EQ(a.members, c.members);
    EXPECT_TRUE(inst.is_clique(a.members));
    EXPECT_EQ(a.members.size(), a.size);
  }
}

TEST(MaxClique, AutomaticEngineChoice) {
  EXPECT_EQ(skewlab::max_clique(cycle(10)).engine, CliqueEngine::enumeration);
  EXPECT_EQ(skewlab::max_clique(cycle(30)).engine, CliqueEngine::coloring);
  const auto dense = cycle(30).complement();
  EXPECT_GT(dense.density(), 0.5);
  const auto r = skewlab::max_clique(dense);
  EXPECT_EQ(r.engine, CliqueEngine::complement_mis);
  EXPECT_EQ(r.size, 15u);  // alpha(C_30) = 15
}

TEST(CliqueInstance, FromGraphDropsLoops) {
  skewlab::Graph g(3);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  const auto inst = CliqueInstance::from_graph(g);
  EXPECT_FALSE(inst.related(0, 0));
  EXPECT_TRUE(inst.related(1, 0));
  EXPECT_DOUBLE_EQ(inst.density(), 1.0 / 3.0);
}

}  // namespace
