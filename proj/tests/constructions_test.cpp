#include "skewlab/constructions.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewlab/counting.hpp"

namespace {

using skewlab::BitString;
using skewlab::Family;

std::vector<std::string> literals(const Family& f) {
  std::vector<std::string> out;
  for (const auto& x : f) out.push_back(x.to_string());
  return out;
}

Family family_of(std::initializer_list<const char*> items) {
  std::vector<BitString> m;
  for (const auto* s : items) m.push_back(BitString::parse(s));
  return Family(m.front().length(), m);
}

// B intersected with F_n must be an antichain for any pairwise skewincident B.
void expect_fibonacci_part_is_antichain(const Family& b) {
  std::vector<BitString> fib;
  for (const auto& x : b) {
    if (skewlab::is_fibonacci(x)) fib.push_back(x);
  }
  for (std::size_t i = 0; i < fib.size(); ++i) {
    for (std::size_t j = i + 1; j < fib.size(); ++j) {
      EXPECT_FALSE(skewlab::comparable(fib[i], fib[j]))
          << fib[i].to_string() << " vs " << fib[j].to_string();
    }
  }
}

TEST(EnumerateC, Examples) {
  EXPECT_EQ(literals(skewlab::enumerate_C(2)), (std::vector<std::string>{"11"}));
  EXPECT_EQ(literals(skewlab::enumerate_C(3)), (std::vector<std::string>{"011", "110", "111"}));
  EXPECT_TRUE(skewlab::enumerate_C(1).empty());
  EXPECT_THROW(skewlab::enumerate_C(0), std::invalid_argument);
  EXPECT_THROW(skewlab::enumerate_C(25), std::invalid_argument);
}

TEST(EnumerateC, MatchesDefinitionAndCount) {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto c = skewlab::enumerate_C(n);
    ASSERT_EQ(skewlab::BigInt(c.size()), skewlab::count_C(n)) << n;
    for (const auto& x : c) ASSERT_GT(skewlab::gamma(x), n);
  }
  for (unsigned n = 1; n <= 10; ++n) {
    std::vector<std::string> expected;
    for (const auto& d : oracle::all_strings(n)) {
      if (oracle::gamma(d) > static_cast<int>(n)) expected.push_back(oracle::literal(d));
    }
    EXPECT_EQ(literals(skewlab::enumerate_C(n)), expected);
  }
}

TEST(EnumerateC, PairwiseSkewincidentUpTo12) {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto c = skewlab::enumerate_C(n);
    EXPECT_TRUE(skewlab::verify_pairwise_skewincident(c).ok()) << n;
    expect_fibonacci_part_is_antichain(c);
  }
}

TEST(VerifyPairwise, Examples) {
  EXPECT_TRUE(skewlab::verify_pairwise_skewincident(family_of({"10", "01", "11"})).ok());
  const auto bad = skewlab::verify_pairwise_skewincident(family_of({"10", "00"}));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.counterexample->first.to_string(), "00");
  EXPECT_EQ(bad.counterexample->second.to_string(), "10");
  EXPECT_TRUE(skewlab::verify_pairwise_skewincident(Family(4)).ok());
  EXPECT_TRUE(skewlab::verify_pairwise_skewincident(family_of({"0000"})).ok());
}

TEST(VerifyPairwise, FirstCounterexampleInPairOrder) {
  // 010 and 100 fail; 001 and 100 fail too (001 is first member).
  const auto f = family_of({"111", "100", "010", "001"});
  const auto v = skewlab::verify_pairwise_skewincident(f);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.counterexample->first.to_string(), "001");
  EXPECT_EQ(v.counterexample->second.to_string(), "100");
}

TEST(VerifyPairwise, ParallelReportsSamePair) {
  auto f = skewlab::enumerate_C(11);
  for (const auto* s : {"10000000000", "00000000001"}) f.insert(BitString::parse(s));
  const auto seq = skewlab::verify_pairwise_skewincident(f, 0);
  const auto par = skewlab::verify_pairwise_skewincident(f, 4);
  ASSERT_FALSE(seq.ok());
  ASSERT_FALSE(par.ok());
  EXPECT_EQ(*seq.counterexample, *par.counterexample);
  EXPECT_TRUE(skewlab::verify_pairwise_skewincident(skewlab::enumerate_C(12), 4).ok());
}

TEST(DisjointnessArgument, Examples) {
  auto s = [](const char* t) { return BitString::parse(t); };
  EXPECT_TRUE(skewlab::verify_disjointness_argument(s("111"), s("111")));
  EXPECT_TRUE(skewlab::verify_disjointness_argument(s("110"), s("011")));
  EXPECT_TRUE(skewlab::verify_disjointness_argument(s("101"), s("010")));
  EXPECT_THROW((void)skewlab::verify_disjointness_argument(s("1"), s("10")),
               skewlab::incompatible_operands);
}

TEST(DisjointnessArgument, HoldsOnAllPairs) {
  for (unsigned n = 1; n <= 12; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        if (!skewlab::verify_disjointness_argument(BitString(n, a), BitString(n, b))) {
          FAIL() << "n=" << n << " " << a << " " << b;
        }
      }
    }
  }
}

TEST(GreedyExtension, ExtendsC2) {
  const auto g = skewlab::greedy_maximal_extension(skewlab::enumerate_C(2));
  EXPECT_EQ(literals(g), (std::vector<std::string>{"01", "10", "11"}));
}

TEST(GreedyExtension, FixedPointOnMaximalFamily) {
  const auto g = skewlab::greedy_maximal_extension(skewlab::enumerate_C(6));
  EXPECT_EQ(skewlab::greedy_maximal_extension(g), g);
}

TEST(GreedyExtension, RejectsInvalidInput) {
  try {
    (void)skewlab::greedy_maximal_extension(family_of({"10", "00"}));
    FAIL() << "expected not_pairwise_skewincident";
  } catch (const skewlab::not_pairwise_skewincident& e) {
    EXPECT_EQ(e.pair().first.to_string(), "00");
    EXPECT_EQ(e.pair().second.to_string(), "10");
  }
}

// Greedy output is a valid family, contains the input, and no outside string
// can be added (checked by brute force).
TEST(GreedyExtension, MaximalAndMonotone) {
  for (unsigned n = 1; n <= 9; ++n) {
    const auto c = skewlab::enumerate_C(n);
    const auto g = skewlab::greedy_maximal_extension(c);
    ASSERT_TRUE(skewlab::verify_pairwise_skewincident(g).ok());
    for (const auto& x : c) EXPECT_TRUE(g.contains(x));
    const auto members = oracle::all_strings(n);
    for (const auto& d : members) {
      const auto y = BitString::parse(oracle::literal(d));
      if (g.contains(y)) continue;
      bool fits = true;
      for (const auto& x : g) fits = fits && oracle::skewincident(oracle::digits(x.to_string()), d);
      EXPECT_FALSE(fits) << "n=" << n << " could still add " << y.to_string();
    }
    expect_fibonacci_part_is_antichain(g);
    if (n >= 2) {
      EXPECT_GT(g.size(), c.size()) << "n=" << n;
    }
  }
}

TEST(GreedyExtension, EmptyFamilyBecomesSingleton) {
  const auto g = skewlab::greedy_maximal_extension(Family(3));
  EXPECT_EQ(literals(g), (std::vector<std::string>{"000"}));
}

TEST(EnumerateFibonacci, Examples) {
  EXPECT_EQ(literals(skewlab::enumerate_fibonacci(2)), (std::vector<std::string>{"00", "01", "10"}));
  EXPECT_EQ(literals(skewlab::enumerate_fibonacci(3)),
            (std::vector<std::string>{"000", "001", "010", "100", "101"}));
  EXPECT_EQ(literals(skewlab::enumerate_fibonacci(1)), (std::vector<std::string>{"0", "1"}));
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_EQ(skewlab::BigInt(skewlab::enumerate_fibonacci(n).size()), skewlab::fibonacci_count(n));
  }
}

}  // namespace
