#pragma once

#include <cstdint>
#include <limits>

namespace skewlab {

/// SplitMix64 (Steele, Lea and Flood, 2014): a 64-bit state advanced by the
/// golden-ratio increment 0x9e3779b97f4a7c15 and finalized with the
/// variant-13 mixer of MurmurHash3:
///
///   z = (state += 0x9e3779b97f4a7c15)
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
///
/// Splitting a stream means seeding a child generator with one output of
/// the parent. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr SplitMix64 split() noexcept { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

}  // namespace skewlab
