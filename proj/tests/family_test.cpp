#include "skewlab/family.hpp"

#include <random>

#include <gtest/gtest.h>

namespace {

using skewlab::BitString;
using skewlab::Family;

TEST(Family, SortsAndRejectsDuplicates) {
  const Family f(2, {BitString::parse("11"), BitString::parse("01"), BitString::parse("10")});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.members()[0].to_string(), "01");
  EXPECT_EQ(f.members()[2].to_string(), "11");
  EXPECT_TRUE(f.contains(BitString::parse("10")));
  EXPECT_FALSE(f.contains(BitString::parse("00")));
  EXPECT_THROW(Family(2, {BitString::parse("11"), BitString::parse("11")}), std::invalid_argument);
  EXPECT_THROW(Family(2, {BitString::parse("111")}), std::invalid_argument);
}

TEST(Family, Insert) {
  Family f(3);
  EXPECT_TRUE(f.insert(BitString::parse("101")));
  EXPECT_FALSE(f.insert(BitString::parse("101")));
  EXPECT_TRUE(f.insert(BitString::parse("001")));
  EXPECT_EQ(f.members().front().to_string(), "001");
  EXPECT_THROW(f.insert(BitString::parse("1")), skewlab::incompatible_operands);
}

TEST(FamilyIo, LinesFormat) {
  const auto f = skewlab::parse_lines("0110\r\n\n1000\n0001\n");
  EXPECT_EQ(f.length(), 4u);
  EXPECT_EQ(skewlab::to_lines(f), "0001\n0110\n1000\n");
  EXPECT_THROW(skewlab::parse_lines(""), std::invalid_argument);
  EXPECT_TRUE(skewlab::parse_lines("", 5).empty());
  EXPECT_THROW(skewlab::parse_lines("01\n011\n"), std::invalid_argument);
  EXPECT_THROW(skewlab::parse_lines("0x1\n"), std::invalid_argument);
}

TEST(FamilyIo, JsonFormat) {
  const auto f = skewlab::family_from_json(nlohmann::json::parse(R"(["110","011","111"])"));
  EXPECT_EQ(skewlab::to_json(f).dump(), R"(["011","110","111"])");
  EXPECT_THROW(skewlab::family_from_json(nlohmann::json::parse(R"({"a":1})")), std::invalid_argument);
  EXPECT_THROW(skewlab::family_from_json(nlohmann::json::parse(R"([1,2])")), std::invalid_argument);
}

// Both serializations read back to the same family.
TEST(FamilyIo, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 64);
    Family f(n);
    const int members = static_cast<int>(rng() % 40);
    for (int k = 0; k < members; ++k) f.insert(BitString(n, rng() & skewlab::detail::low_mask(n)));
    EXPECT_EQ(skewlab::parse_lines(skewlab::to_lines(f), n), f);
    EXPECT_EQ(skewlab::family_from_json(nlohmann::json::parse(skewlab::to_json(f).dump()), n), f);
  }
}

}  // namespace
