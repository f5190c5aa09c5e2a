#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace skewlab {

/// Fixed-size bitset over [0, size), stored in 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& words() noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (const auto tail = size_ & 63; tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (const auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  /// this &= ~other
  Bitset& subtract(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace skewlab
