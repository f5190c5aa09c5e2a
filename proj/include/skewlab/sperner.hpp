#pragma once

// Maximum antichains (Sperner families) among the Fibonacci strings F_n under
// coordinatewise dominance.
//
// m_n is computed through Dilworth duality: a minimum chain cover of the
// order equals f_n minus a maximum matching in the split graph whose edges
// are the strict comparabilities x < y (the full order, not just its cover
// relation). The antichain is read off the Konig vertex cover of that
// matching. An independent route solves maximum independent set in the
// comparability graph with the clique engine.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlab/bitstring.hpp"
#include "skewlab/clique.hpp"
#include "skewlab/constructions.hpp"
#include "skewlab/counting.hpp"
#include "skewlab/family.hpp"
#include "skewlab/matching.hpp"

namespace skewlab {

inline constexpr unsigned max_poset_length = 20;
inline constexpr unsigned max_antichain_oracle_length = 10;

/// F_n ordered by coordinatewise dominance. Elements are in lexicographic
/// order, so index 0 is the all-zero string.
class FibonacciPoset {
 public:
  explicit FibonacciPoset(unsigned n) : n_(n) {
    if (n < 1 || n > max_poset_length) {
      throw std::invalid_argument("Fibonacci poset needs n in [1, 20], got " + std::to_string(n));
    }
    elements_ = enumerate_fibonacci(n).members();
  }

  unsigned length() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<BitString>& elements() const noexcept { return elements_; }
  const BitString& element(std::size_t i) const { return elements_.at(i); }

  bool less_equal(std::size_t i, std::size_t j) const {
    return dominated_by(elements_.at(i), elements_.at(j));
  }

  bool less(std::size_t i, std::size_t j) const { return i != j && less_equal(i, j); }

 private:
  unsigned n_;
  std::vector<BitString> elements_;
};

inline FibonacciPoset build_fibonacci_poset(unsigned n) { return FibonacciPoset(n); }

struct AntichainResult {
  unsigned n = 0;
  std::size_t size = 0;            // m_n
  std::size_t matching_size = 0;   // f_n - m_n
  Family witness{1};               // a maximum antichain
  std::vector<std::vector<BitString>> chains;  // a minimum chain cover, each chain ascending
};

inline AntichainResult max_antichain(unsigned n) {
  const FibonacciPoset poset(n);
  const auto& el = poset.elements();
  const std::size_t size = el.size();

  BipartiteMatching matching(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint64_t xi = el[i].bits();
    for (std::size_t j = 0; j < size; ++j) {
      const std::uint64_t xj = el[j].bits();
      if (i != j && (xi & ~xj) == 0) matching.add_edge(i, j);
    }
  }
  const std::size_t matched = matching.solve();

  AntichainResult out;
  out.n = n;
  out.matching_size = matched;
  out.size = size - matched;

  const auto reach = matching.alternating_reach();
  std::vector<BitString> antichain;
  for (std::size_t i = 0; i < size; ++i) {
    if (reach.left[i] && !reach.right[i]) antichain.push_back(el[i]);
  }
  out.witness = Family(n, std::move(antichain));
  if (out.witness.size() != out.size) {
    throw std::logic_error("antichain extraction does not match the chain cover size");
  }

  // Chains start at elements nothing is matched into.
  for (std::size_t i = 0; i < size; ++i) {
    if (matching.match_of_right(i) != BipartiteMatching::unmatched) continue;
    std::vector<BitString> chain;
    for (std::size_t k = i; k != BipartiteMatching::unmatched; k = matching.match_of_left(k)) {
      chain.push_back(el[k]);
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

/// m_n as a maximum independent set of the comparability graph, solved as a
/// maximum clique of the incomparability relation.
inline std::size_t max_antichain_oracle(unsigned n, const CliqueOptions& options = {}) {
  if (n < 1 || n > max_antichain_oracle_length) {
    throw std::invalid_argument("antichain oracle needs n in [1, 10], got " + std::to_string(n));
  }
  const FibonacciPoset poset(n);
  const auto inst = CliqueInstance::from_predicate(poset.size(), [&](std::size_t i, std::size_t j) {
    return !comparable(poset.element(i), poset.element(j));
  });
  return max_clique(inst, options).size;
}

/// Drops position n.
inline BitString drop_last(const BitString& x) {
  if (x.length() < 2) throw std::invalid_argument("cannot shorten a length-1 string");
  return BitString(x.length() - 1, x.bits() & detail::low_mask(x.length() - 1));
}

struct ProjectionReport {
  unsigned n = 0;
  std::size_t antichain = 0;  // m_n
  BigInt fib_prev;            // f_{n-1}
  BigInt fib;                 // f_n
  bool antichain_le_fib_prev = false;      // m_n <= f_{n-1}
  bool fib_ratio_le_two_thirds = false;    // 3 f_{n-1} <= 2 f_n
  bool projections_distinct = false;
  bool projections_fibonacci = false;

  bool holds() const noexcept {
    return antichain_le_fib_prev && fib_ratio_le_two_thirds && projections_distinct &&
           projections_fibonacci;
  }
};

/// Checks m_n <= f_{n-1} <= (2/3) f_n, and that deleting the last coordinate
/// maps a maximum antichain injectively into F_{n-1}.
inline ProjectionReport projection_bound_check(unsigned n) {
  if (n < 2 || n > max_poset_length) {
    throw std::invalid_argument("projection check needs n in [2, 20], got " + std::to_string(n));
  }
  const auto result = max_antichain(n);
  ProjectionReport r;
  r.n = n;
  r.antichain = result.size;
  r.fib_prev = fibonacci_count(n - 1);
  r.fib = fibonacci_count(n);
  r.antichain_le_fib_prev = BigInt(r.antichain) <= r.fib_prev;
  r.fib_ratio_le_two_thirds = 3 * r.fib_prev <= 2 * r.fib;

  std::vector<BitString> shortened;
  r.projections_fibonacci = true;
  for (const auto& x : result.witness) {
    const auto y = drop_last(x);
    r.projections_fibonacci = r.projections_fibonacci && is_fibonacci(y);
    shortened.push_back(y);
  }
  std::sort(shortened.begin(), shortened.end());
  r.projections_distinct = std::adjacent_find(shortened.begin(), shortened.end()) == shortened.end();
  return r;
}

}  // namespace skewlab
