#include "skewlab/solver.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using skewlab::BitString;
using skewlab::CliqueEngine;
using skewlab::CliqueOptions;

void expect_pairwise_skewincident(const skewlab::ExtremalResult& r) {
  ASSERT_EQ(r.witness.size(), r.size);
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
      ASSERT_TRUE(oracle::skewincident(oracle::digits(r.witness[i]), oracle::digits(r.witness[j])))
          << r.witness[i] << ' ' << r.witness[j];
    }
  }
}

TEST(ExactM, Examples) {
  EXPECT_EQ(skewlab::exact_M(1).size, 1u);
  const auto m2 = skewlab::exact_M(2);
  EXPECT_EQ(m2.size, 3u);
  EXPECT_EQ(m2.witness, (std::vector<std::string>{"01", "10", "11"}));
  EXPECT_EQ(m2.method(), "enumeration");
  EXPECT_EQ(skewlab::exact_M(3).size, 5u);
}

TEST(ExactM, MatchesSubsetOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto r = skewlab::exact_M(n);
    EXPECT_EQ(r.size, oracle::exact_M(n)) << n;
    expect_pairwise_skewincident(r);
  }
}

TEST(ExactM, WitnessIsLexicographicallyFirstOptimum) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto strings = oracle::all_strings(n);
    const auto optima = oracle::maximum_cliques_by_subsets(
        strings.size(), [&](std::size_t i, std::size_t j) {
          return oracle::skewincident(strings[i], strings[j]);
        });
    ASSERT_FALSE(optima.empty());
    const auto first = *std::min_element(optima.begin(), optima.end());
    EXPECT_EQ(skewlab::exact_M(n).elements, first) << n;
  }
}

TEST(ExactM, KnownValuesAndEngines) {
  const std::vector<std::size_t> expected{1, 3, 5, 11, 22, 46, 94, 193};
  for (unsigned n = 1; n <= 8; ++n) {
    const auto r = skewlab::exact_M(n);
    EXPECT_EQ(r.size, expected[n - 1]) << n;
    expect_pairwise_skewincident(r);
  }
  const auto coloring = skewlab::exact_M(6, false, {CliqueEngine::coloring, 0});
  const auto mis = skewlab::exact_M(6, false, {CliqueEngine::complement_mis, 0});
  EXPECT_EQ(coloring.size, 46u);
  EXPECT_EQ(mis.size, 46u);
  EXPECT_EQ(coloring.witness, mis.witness);
  EXPECT_EQ(coloring.method(), "branch-and-bound");
}

TEST(ExactM, SizeIsScheduleIndependent) {
  for (unsigned n = 5; n <= 7; ++n) {
    const auto seq = skewlab::exact_M(n, false, {CliqueEngine::automatic, 0});
    const auto par = skewlab::exact_M(n, false, {CliqueEngine::automatic, 4});
    EXPECT_EQ(seq.size, par.size);
    expect_pairwise_skewincident(par);
  }
}

TEST(ExactM, Caps) {
  EXPECT_THROW(skewlab::exact_M(0), std::invalid_argument);
  EXPECT_THROW(skewlab::exact_M(9), std::invalid_argument);
  EXPECT_THROW(skewlab::exact_M(13, true), std::invalid_argument);
}

TEST(ExactMG, PathEqualsStrings) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto g = skewlab::exact_MG(skewlab::path(n));
    const auto s = skewlab::exact_M(n);
    EXPECT_EQ(g.size, s.size) << n;
    EXPECT_EQ(g.witness, s.witness) << n;
  }
  EXPECT_THROW(skewlab::exact_MG(skewlab::path(13)), std::invalid_argument);
}

TEST(ExactMG, MatchesSubsetOracleOnSmallGraphs) {
  const std::vector<skewlab::Graph> graphs{skewlab::complete(3), skewlab::all_loops(2),
                                           skewlab::skew_alphabet(), skewlab::edgeless(3),
                                           skewlab::path(3)};
  for (const auto& g : graphs) {
    const std::size_t v = g.vertex_count();
    const std::size_t count = std::size_t{1} << v;
    auto neighbors = [&](std::size_t a, std::size_t b) {
      for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = 0; w < v; ++w) {
          if (((a >> u) & 1U) && ((b >> w) & 1U) && g.adjacent(u, w)) return true;
        }
      }
      return false;
    };
    EXPECT_EQ(skewlab::exact_MG(g).size, oracle::max_clique_by_subsets(count, neighbors));
  }
}

TEST(Multipartite, Examples) {
  EXPECT_EQ(skewlab::multipartite_M(skewlab::Partition({2, 2})), 11);
  EXPECT_EQ(skewlab::multipartite_M(skewlab::Partition({1, 1, 1})), 7);
  EXPECT_EQ(skewlab::exact_MG(skewlab::complete_multipartite(skewlab::Partition({2, 2}))).size, 11u);
  EXPECT_EQ(skewlab::exact_MG(skewlab::complete_multipartite(skewlab::Partition({1, 1, 1}))).size,
            7u);
}

TEST(Multipartite, BipartiteFormulaAgrees) {
  for (unsigned m = 1; m <= 10; ++m) {
    for (unsigned n = 1; n <= 10; ++n) {
      EXPECT_EQ(skewlab::bipartite_M(m, n), skewlab::multipartite_M(skewlab::Partition({m, n})));
    }
  }
}

// Each witness holds at most one subset of each part (the parts are the
// maximal stable sets), and distinct subsets are pairwise neighbors.
TEST(Multipartite, ExactSearchMatchesFormula) {
  for (unsigned total = 1; total <= 6; ++total) {
    for (const auto& p : skewlab::partitions_of(total)) {
      const auto g = skewlab::complete_multipartite(p);
      const auto r = skewlab::exact_MG(g);
      ASSERT_EQ(skewlab::BigInt(r.size), skewlab::multipartite_M(p)) << total;
      std::vector<std::size_t> part_of;
      for (std::size_t k = 0; k < p.parts().size(); ++k) {
        for (unsigned i = 0; i < p.parts()[k]; ++i) part_of.push_back(k);
      }
      std::vector<int> inside(p.parts().size(), 0);
      for (const auto& w : r.witness) {
        const auto s = skewlab::subset_of(w);
        if (!s.empty() && std::all_of(s.begin(), s.end(),
                                      [&](std::size_t v) { return part_of[v] == part_of[s[0]]; })) {
          ++inside[part_of[s[0]]];
        }
      }
      for (const int c : inside) EXPECT_LE(c, 1);
    }
  }
}

TEST(Attractive, Reductions) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto a = skewlab::exact_attractive(skewlab::path(n), skewlab::skew_alphabet(), n);
    const auto m = skewlab::exact_M(n);
    EXPECT_EQ(a.size, m.size) << n;
    EXPECT_EQ(a.witness, m.witness) << n;
    EXPECT_EQ(skewlab::exact_attractive(skewlab::all_loops(n), skewlab::complete(2), n).size,
              std::size_t{1} << n);
  }
  EXPECT_EQ(skewlab::exact_attractive(skewlab::all_loops(2), skewlab::complete(2), 2).size, 4u);
  EXPECT_EQ(skewlab::exact_attractive(skewlab::edgeless(3), skewlab::complete(3), 3).size, 1u);
  EXPECT_EQ(skewlab::exact_attractive(skewlab::edgeless(2), skewlab::all_loops(2), 2).size, 1u);
}

TEST(Attractive, MatchesBruteForce) {
  // F = path on 2 vertices plus a loop at 0; G = path on 3 vertices.
  skewlab::Graph f(2);
  f.add_edge(0, 1);
  f.add_edge(0, 0);
  const auto g = skewlab::path(3);
  const unsigned n = 2;
  std::vector<std::array<std::size_t, 2>> maps;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) maps.push_back({a, b});
  }
  auto attract = [&](std::size_t x, std::size_t y) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        if (f.adjacent(i, j) && g.adjacent(maps[x][i], maps[y][j])) return true;
      }
    }
    return false;
  };
  const auto r = skewlab::exact_attractive(f, g, n);
  EXPECT_EQ(r.size, oracle::max_clique_by_subsets(maps.size(), attract));
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < r.elements.size(); ++j) {
      EXPECT_TRUE(attract(r.elements[i], r.elements[j]));
    }
  }
}

TEST(Attractive, Errors) {
  EXPECT_THROW(skewlab::exact_attractive(skewlab::path(2), skewlab::complete(2), 3),
               std::invalid_argument);
  EXPECT_THROW(skewlab::exact_attractive(skewlab::path(13), skewlab::complete(2), 13),
               std::invalid_argument);
  EXPECT_THROW(skewlab::exact_attractive(skewlab::path(2), skewlab::complete(2), 0),
               std::invalid_argument);
}

TEST(Sandwich, Examples) {
  const auto r1 = skewlab::sandwich_check(1);
  EXPECT_EQ(r1.lower, 0);
  EXPECT_EQ(r1.exact, 1u);
  EXPECT_EQ(r1.upper, 1);
  const auto r2 = skewlab::sandwich_check(2);
  EXPECT_EQ(r2.lower, 1);
  EXPECT_EQ(r2.exact, 3u);
  EXPECT_EQ(r2.upper, 3);
  const auto r3 = skewlab::sandwich_check(3);
  EXPECT_EQ(r3.lower, 3);
  EXPECT_EQ(r3.exact, 5u);
  EXPECT_EQ(r3.upper, 6);
  for (unsigned n = 1; n <= 7; ++n) EXPECT_TRUE(skewlab::sandwich_check(n).holds()) << n;
  EXPECT_THROW(skewlab::sandwich_check(9), std::invalid_argument);
}

// The Fibonacci strings in an extremal family form an antichain.
TEST(ExactM, FibonacciMembersFormAntichain) {
  for (unsigned n = 2; n <= 7; ++n) {
    const auto r = skewlab::exact_M(n);
    std::vector<BitString> fib;
    for (const auto& w : r.witness) {
      const auto x = BitString::parse(w);
      if (skewlab::is_fibonacci(x)) fib.push_back(x);
    }
    for (std::size_t i = 0; i < fib.size(); ++i) {
      for (std::size_t j = i + 1; j < fib.size(); ++j) {
        EXPECT_FALSE(skewlab::comparable(fib[i], fib[j])) << n;
      }
    }
  }
}

TEST(ExtremalJson, Keys) {
  const auto r = skewlab::exact_M(2);
  const auto j = skewlab::to_json(r, false);
  EXPECT_EQ(j.dump(), R"({"method":"enumeration","size":3,"witness":["01","10","11"]})");
  EXPECT_TRUE(skewlab::to_json(r).contains("elapsed_ms"));
}

}  // namespace
