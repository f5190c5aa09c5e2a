#pragma once

// Exact counting over {0,1}^n without materializing strings: the law of
// gamma under the uniform distribution, |C_n| = #{x : gamma(x) > n}, tail
// probabilities, Fibonacci counts, exponential-bound scans, and a seeded
// Monte Carlo estimate of the tail.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewlab/bitstring.hpp"
#include "skewlab/parallel.hpp"
#include "skewlab/rng.hpp"

namespace skewlab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// numerator / 2^log2_denominator, always stored in lowest terms.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, unsigned log2_denominator)
      : numerator_(std::move(numerator)), log2_denominator_(log2_denominator) {
    normalize();
  }

  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned log2_denominator() const noexcept { return log2_denominator_; }
  BigInt denominator() const { return pow2(log2_denominator_); }

  long double to_long_double() const {
    return static_cast<long double>(numerator_) / std::ldexp(1.0L, static_cast<int>(log2_denominator_));
  }

  /// "p/q" in lowest terms; integers print as "p/1".
  std::string to_string() const { return numerator_.str() + "/" + denominator().str(); }

  /// Inverse of to_string(). Rejects denominators that are not powers of two.
  static DyadicRational parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
      throw std::invalid_argument("rational must look like p/q: '" + text + "'");
    }
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q <= 0 || (q & (q - 1)) != 0) {
      throw std::invalid_argument("denominator is not a power of two: '" + text + "'");
    }
    return DyadicRational(std::move(p), static_cast<unsigned>(boost::multiprecision::msb(q)));
  }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;

 private:
  void normalize() {
    if (numerator_ == 0) {
      log2_denominator_ = 0;
      return;
    }
    const auto twos = static_cast<unsigned>(boost::multiprecision::lsb(abs(numerator_)));
    const unsigned shift = std::min(twos, log2_denominator_);
    numerator_ >>= shift;
    log2_denominator_ -= shift;
  }

  BigInt numerator_{0};
  unsigned log2_denominator_{0};
};

inline constexpr unsigned max_counting_length = 512;

namespace detail {
inline void check_counting_length(unsigned n) {
  if (n < 1 || n > max_counting_length) {
    throw std::invalid_argument("n must be in [1, 512] for exact counting, got " +
                                std::to_string(n));
  }
}
}  // namespace detail

/// Exact number of strings in {0,1}^n with each gamma value v in [0, 2n].
class GammaDistribution {
 public:
  GammaDistribution(unsigned n, std::vector<BigInt> counts)
      : n_(n), counts_(std::move(counts)) {
    if (counts_.size() != 2 * static_cast<std::size_t>(n_) + 1) {
      throw std::invalid_argument("gamma distribution needs 2n+1 counts");
    }
  }

  unsigned n() const noexcept { return n_; }
  unsigned max_value() const noexcept { return 2 * n_; }

  /// Zero outside [0, 2n].
  BigInt count(long long v) const {
    if (v < 0 || v > static_cast<long long>(max_value())) return 0;
    return counts_[static_cast<std::size_t>(v)];
  }

  const std::vector<BigInt>& counts() const noexcept { return counts_; }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  /// Sum of v * count(v).
  BigInt first_moment() const {
    BigInt s = 0;
    for (std::size_t v = 0; v < counts_.size(); ++v) s += counts_[v] * v;
    return s;
  }

  /// Number of strings with gamma > threshold.
  BigInt count_above(long long threshold) const {
    BigInt s = 0;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      if (static_cast<long long>(v) > threshold) s += counts_[v];
    }
    return s;
  }

  friend bool operator==(const GammaDistribution&, const GammaDistribution&) = default;

 private:
  unsigned n_;
  std::vector<BigInt> counts_;
};

/// Left-to-right windowed DP. After placing positions 1..i the state is
/// (x_{i-1}, x_i, gamma_1 + ... + gamma_{i-1}) with x_0 = 0. Placing c at
/// position i+1 finalizes gamma_i = x_i + [x_{i-1} = 1 or c = 1]; the last
/// position is finalized with gamma_n = x_n + [x_{n-1} = 1].
inline GammaDistribution gamma_distribution(unsigned n) {
  detail::check_counting_length(n);
  const std::size_t width = 2 * static_cast<std::size_t>(n) + 1;
  auto at = [width](unsigned prev, unsigned cur, std::size_t acc) {
    return (prev * 2 + cur) * width + acc;
  };
  std::vector<BigInt> table(4 * width, BigInt(0));
  std::vector<BigInt> next(4 * width, BigInt(0));
  table[at(0, 0, 0)] = 1;
  table[at(0, 1, 0)] = 1;

  for (unsigned placed = 1; placed < n; ++placed) {
    // Finalized positions 1..placed-1 contribute at most 2 each.
    const std::size_t reach = 2 * static_cast<std::size_t>(placed - 1);
    for (auto& v : next) v = 0;
    for (unsigned prev = 0; prev < 2; ++prev) {
      for (unsigned cur = 0; cur < 2; ++cur) {
        for (std::size_t acc = 0; acc <= reach; ++acc) {
          const BigInt& ways = table[at(prev, cur, acc)];
          if (ways.is_zero()) continue;
          for (unsigned c = 0; c < 2; ++c) {
            const std::size_t gain = cur + ((prev | c) ? 1U : 0U);
            next[at(cur, c, acc + gain)] += ways;
          }
        }
      }
    }
    table.swap(next);
  }

  std::vector<BigInt> counts(width, BigInt(0));
  for (unsigned prev = 0; prev < 2; ++prev) {
    for (unsigned cur = 0; cur < 2; ++cur) {
      for (std::size_t acc = 0; acc < width; ++acc) {
        const BigInt& ways = table[at(prev, cur, acc)];
        if (ways.is_zero()) continue;
        counts[acc + cur + prev] += ways;
      }
    }
  }
  return GammaDistribution(n, std::move(counts));
}

/// |C_n| = number of strings with gamma(x) > n.
inline BigInt count_C(unsigned n) { return gamma_distribution(n).count_above(n); }

/// Pr{gamma(X^n) <= n} = (2^n - |C_n|) / 2^n.
inline DyadicRational tail_probability(unsigned n) {
  detail::check_counting_length(n);
  return DyadicRational(pow2(n) - count_C(n), n);
}

/// E gamma(X^n) as an exact rational.
inline DyadicRational expected_gamma(unsigned n) {
  return DyadicRational(gamma_distribution(n).first_moment(), n);
}

/// f_n: number of length-n strings without two consecutive ones
/// (f_1 = 2, f_2 = 3, f_n = f_{n-1} + f_{n-2}).
inline BigInt fibonacci_count(unsigned n) {
  if (n < 1) throw std::invalid_argument("fibonacci_count needs n >= 1");
  BigInt prev = 1;  // f_0: the empty string
  BigInt cur = 2;
  for (unsigned k = 1; k < n; ++k) {
    BigInt sum = prev + cur;
    prev = std::move(cur);
    cur = std::move(sum);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Exponential bounds 2^{r n} with rational r = num/den
// ---------------------------------------------------------------------------

struct RateExponent {
  unsigned num;
  unsigned den;

  long double value() const noexcept { return static_cast<long double>(num) / den; }

  /// 2^{r n} in extended precision, for display only.
  long double power_of_two(unsigned n) const noexcept {
    return std::exp2(value() * static_cast<long double>(n));
  }
};

/// Rate in the lower bound 2^n - 2^{0.96 n}.
inline constexpr RateExponent lower_rate{24, 25};
/// Rate in the upper bound 2^n - 2^{0.69 n}.
inline constexpr RateExponent upper_rate{69, 100};
/// Growth rate claimed for f_n.
inline constexpr RateExponent fibonacci_rate{347, 500};

/// value <= 2^{r n}, decided exactly as value^den <= 2^{num n}.
inline bool at_most_power(const BigInt& value, RateExponent r, unsigned n) {
  if (value <= 0) return true;
  return pow(value, r.den) <= pow2(r.num * n);
}

/// value >= 2^{r n}, exactly.
inline bool at_least_power(const BigInt& value, RateExponent r, unsigned n) {
  if (value <= 0) return false;
  return pow(value, r.den) >= pow2(r.num * n);
}

/// value > 2^{r n}, exactly.
inline bool above_power(const BigInt& value, RateExponent r, unsigned n) {
  if (value <= 0) return false;
  return pow(value, r.den) > pow2(r.num * n);
}

/// 2^n - |C_n| <= 2^{0.96 n}.
inline bool lower_bound_holds(unsigned n) {
  return at_most_power(pow2(n) - count_C(n), lower_rate, n);
}

/// Smallest N such that the lower-bound inequality holds for every n in
/// [N, max_n]; nullopt if it fails at max_n itself.
inline std::optional<unsigned> crossover_scan(unsigned max_n) {
  if (max_n < 2 || max_n > max_counting_length) {
    throw std::invalid_argument("crossover scan needs max_n in [2, 512]");
  }
  for (unsigned n = max_n; n >= 1; --n) {
    if (!lower_bound_holds(n)) {
      if (n == max_n) return std::nullopt;
      return n + 1;
    }
  }
  return 1;
}

/// Smallest N such that f_n >= 2^{0.694 n} for every n in [N, max_n].
inline std::optional<unsigned> fibonacci_growth_scan(unsigned max_n) {
  if (max_n < 1) throw std::invalid_argument("fibonacci growth scan needs max_n >= 1");
  std::optional<unsigned> last_failure;
  BigInt prev = 1;
  BigInt cur = 2;
  for (unsigned n = 1; n <= max_n; ++n) {
    if (!at_least_power(cur, fibonacci_rate, n)) last_failure = n;
    BigInt sum = prev + cur;
    prev = std::move(cur);
    cur = std::move(sum);
  }
  if (!last_failure) return 1;
  if (*last_failure == max_n) return std::nullopt;
  return *last_failure + 1;
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

struct TailEstimate {
  unsigned n;
  std::uint64_t samples;
  std::uint64_t seed;
  std::uint64_t hits;  // samples with gamma <= n
  double estimate;
  double standard_error;

  /// |estimate - exact| <= k * standard_error.
  bool within(double exact, double k = 3.0) const {
    return std::abs(estimate - exact) <= k * standard_error;
  }
};

/// Samples per independent stream.
inline constexpr std::uint64_t monte_carlo_chunk = 1U << 16;

/// Estimates Pr{gamma(X^n) <= n} from `samples` uniform strings.
///
/// Stream layout: a root SplitMix64 seeded with `seed` emits one child seed
/// per chunk of 65536 samples; chunk k draws its strings, one generator
/// output per string masked to the low n bits, from SplitMix64(child_k).
/// The estimate depends only on (n, samples, seed), never on `threads`.
inline TailEstimate monte_carlo_tail(unsigned n, std::uint64_t samples, std::uint64_t seed,
                                     unsigned threads = 0) {
  if (n < 1 || n > BitString::max_length) {
    throw std::invalid_argument("monte_carlo_tail needs n in [1, 64]");
  }
  if (samples == 0) throw std::invalid_argument("monte_carlo_tail needs samples >= 1");

  const std::uint64_t chunks = (samples + monte_carlo_chunk - 1) / monte_carlo_chunk;
  std::vector<std::uint64_t> chunk_seeds(chunks);
  SplitMix64 root(seed);
  for (auto& s : chunk_seeds) s = root();

  std::vector<std::uint64_t> chunk_hits(chunks, 0);
  const std::uint64_t mask = detail::low_mask(n);
  parallel_for(chunks, threads, [&](std::size_t k) {
    SplitMix64 gen(chunk_seeds[k]);
    const std::uint64_t begin = k * monte_carlo_chunk;
    const std::uint64_t end = std::min(samples, begin + monte_carlo_chunk);
    std::uint64_t hits = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      if (gamma(BitString(n, gen() & mask)) <= n) ++hits;
    }
    chunk_hits[k] = hits;
  });

  std::uint64_t hits = 0;
  for (auto h : chunk_hits) hits += h;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return TailEstimate{n, samples, seed, hits, p, se};
}

}  // namespace skewlab
