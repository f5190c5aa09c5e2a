#pragma once

// Materialized families: the lower-bound family C_n = {x : gamma(x) > n},
// the Fibonacci strings F_n, pairwise verification and greedy maximal
// extension. Enumeration is capped at n <= 24.

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/bitstring.hpp"
#include "skewlab/family.hpp"
#include "skewlab/parallel.hpp"

namespace skewlab {

inline constexpr unsigned max_enumeration_length = 24;

using StringPair = std::pair<BitString, BitString>;

/// Thrown when an operation requires a pairwise-skewincident family.
class not_pairwise_skewincident : public std::invalid_argument {
 public:
  explicit not_pairwise_skewincident(StringPair pair)
      : std::invalid_argument("family is not pairwise skewincident: " + pair.first.to_string() +
                              " and " + pair.second.to_string()),
        pair_(std::move(pair)) {}

  const StringPair& pair() const noexcept { return pair_; }

 private:
  StringPair pair_;
};

namespace detail {

inline void check_enumeration_length(unsigned n) {
  if (n < 1 || n > max_enumeration_length) {
    throw std::invalid_argument("n must be in [1, 24] for enumeration, got " + std::to_string(n));
  }
}

template <typename Keep>
Family enumerate_where(unsigned n, Keep keep) {
  check_enumeration_length(n);
  std::vector<BitString> members;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto x = BitString::from_rank(n, r);
    if (keep(x)) members.push_back(x);
  }
  return Family(n, std::move(members));
}

}  // namespace detail

/// C_n, in lexicographic order.
inline Family enumerate_C(unsigned n) {
  return detail::enumerate_where(n, [n](const BitString& x) { return gamma(x) > n; });
}

/// F_n, in lexicographic order.
inline Family enumerate_fibonacci(unsigned n) {
  return detail::enumerate_where(n, [](const BitString& x) { return is_fibonacci(x); });
}

/// Outcome of a pairwise check: ok, or the first offending pair in
/// lexicographic pair order.
struct PairwiseVerdict {
  std::optional<StringPair> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// Checks every unordered pair of distinct members. Self-pairs are not
/// required to be skewincident. Rows of the pair triangle may be split
/// across `threads` workers; the reported pair is the same either way.
inline PairwiseVerdict verify_pairwise_skewincident(const Family& f, unsigned threads = 0) {
  const auto& m = f.members();
  const std::size_t size = m.size();
  std::vector<std::uint64_t> bits(size), infl(size);
  for (std::size_t i = 0; i < size; ++i) {
    bits[i] = m[i].bits();
    infl[i] = influence(m[i]).bits();
  }

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t rows_per_block = 64;
  const std::size_t blocks = (size + rows_per_block - 1) / rows_per_block;
  std::atomic<std::size_t> first_bad_row{none};
  std::vector<std::pair<std::size_t, std::size_t>> block_result(blocks, {none, none});

  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t lo = b * rows_per_block;
    const std::size_t hi = std::min(size, lo + rows_per_block);
    for (std::size_t i = lo; i < hi; ++i) {
      if (i > first_bad_row.load(std::memory_order_relaxed)) return;
      for (std::size_t j = i + 1; j < size; ++j) {
        if ((bits[i] & infl[j]) == 0) {
          block_result[b] = {i, j};
          std::size_t seen = first_bad_row.load();
          while (i < seen && !first_bad_row.compare_exchange_weak(seen, i)) {
          }
          return;
        }
      }
    }
  });

  for (const auto& [i, j] : block_result) {
    if (i != none) return PairwiseVerdict{StringPair{m[i], m[j]}};
  }
  return PairwiseVerdict{};
}

/// The counting step behind C_n: whenever gamma(x) + gamma(y) > 2n the two
/// strings must be skewincident. Returns whether that implication holds.
inline bool verify_disjointness_argument(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  if (gamma(x) + gamma(y) <= 2 * x.length()) return true;
  return skewincident(x, y);
}

/// Adds, smallest first, every string that is skewincident with all current
/// members until no candidate remains. A candidate rejected once stays
/// rejected as the family grows, so a single ascending sweep suffices.
/// Throws not_pairwise_skewincident if the input is not a valid family.
inline Family greedy_maximal_extension(const Family& f) {
  const unsigned n = f.length();
  detail::check_enumeration_length(n);
  if (auto verdict = verify_pairwise_skewincident(f); !verdict.ok()) {
    throw not_pairwise_skewincident(*verdict.counterexample);
  }

  Family out = f;
  std::vector<std::uint64_t> member_bits;
  member_bits.reserve(f.size());
  for (const auto& x : f) member_bits.push_back(x.bits());

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto y = BitString::from_rank(n, r);
    if (out.contains(y)) continue;
    const std::uint64_t iy = influence(y).bits();
    bool fits = true;
    for (const auto b : member_bits) {
      if ((b & iy) == 0) {
        fits = false;
        break;
      }
    }
    if (fits) {
      out.insert(y);
      member_bits.push_back(y.bits());
    }
  }
  return out;
}

}  // namespace skewlab
