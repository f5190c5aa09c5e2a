#pragma once

// Fixed-length binary strings (n <= 64) and the elementary predicates on them.
//
// Positions are 1-based: position i of a length-n string is stored in bit
// i-1 of a single machine word. The text form puts position 1 first, so
// "110" has positions 1 and 2 set. Lexicographic order on the text form is
// exposed as rank(): the string read as a big-endian binary number.

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewlab {

/// Raised when two strings of different length meet in a binary predicate.
class incompatible_operands : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

constexpr std::uint64_t low_mask(unsigned n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t reverse_bits(std::uint64_t v) noexcept {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  return (v >> 32) | (v << 32);
}

// Reverses the low n bits of v.
constexpr std::uint64_t reverse_low(std::uint64_t v, unsigned n) noexcept {
  return n == 0 ? 0 : reverse_bits(v) >> (64 - n);
}

}  // namespace detail

class BitString {
 public:
  static constexpr unsigned max_length = 64;

  /// Builds a string from its storage word (position i in bit i-1).
  /// Throws std::invalid_argument if length is outside [1, 64] or any bit
  /// at or above `length` is set.
  BitString(unsigned length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length < 1 || length > max_length) {
      throw std::invalid_argument("BitString length must be in [1, 64], got " +
                                  std::to_string(length));
    }
    if ((bits & ~detail::low_mask(length)) != 0) {
      throw std::invalid_argument("BitString has bits set beyond its length");
    }
  }

  /// All-zero string of the given length.
  static BitString zeros(unsigned length) { return BitString(length, 0); }

  /// The string whose text form is `rank` written in binary with `length`
  /// digits (position 1 is the most significant digit).
  static BitString from_rank(unsigned length, std::uint64_t rank) {
    if (length < 1 || length > max_length) {
      throw std::invalid_argument("BitString length must be in [1, 64], got " +
                                  std::to_string(length));
    }
    if ((rank & ~detail::low_mask(length)) != 0) {
      throw std::invalid_argument("rank out of range for string length");
    }
    return BitString(length, detail::reverse_low(rank, length));
  }

  /// Parses a literal such as "0110". Only '0' and '1' are accepted.
  static BitString parse(std::string_view literal) {
    if (literal.empty() || literal.size() > max_length) {
      throw std::invalid_argument("bit literal must have 1 to 64 characters");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < literal.size(); ++i) {
      const char c = literal[i];
      if (c == '1') {
        bits |= std::uint64_t{1} << i;
      } else if (c != '0') {
        throw std::invalid_argument("invalid character in bit literal: '" +
                                    std::string(literal) + "'");
      }
    }
    return BitString(static_cast<unsigned>(literal.size()), bits);
  }

  unsigned length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t mask() const noexcept { return detail::low_mask(length_); }

  /// Lexicographic rank of the text form, in [0, 2^n).
  std::uint64_t rank() const noexcept { return detail::reverse_low(bits_, length_); }

  /// Value at 1-based position.
  bool at(unsigned position) const {
    check_position(position);
    return (bits_ >> (position - 1)) & 1U;
  }

  BitString with_flipped(unsigned position) const {
    check_position(position);
    return BitString(length_, bits_ ^ (std::uint64_t{1} << (position - 1)));
  }

  BitString reversed() const { return BitString(length_, rank()); }

  /// Support set S(x) as sorted 1-based positions.
  std::vector<unsigned> support() const {
    std::vector<unsigned> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
      if ((bits_ >> i) & 1U) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

  /// Orders by length, then lexicographically on the text form.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.rank() <=> b.rank();
  }

 private:
  void check_position(unsigned position) const {
    if (position < 1 || position > length_) {
      throw std::out_of_range("position " + std::to_string(position) +
                              " outside [1, " + std::to_string(length_) + "]");
    }
  }

  unsigned length_;
  std::uint64_t bits_;
};

inline void require_same_length(const BitString& x, const BitString& y) {
  if (x.length() != y.length()) {
    throw incompatible_operands("strings of length " + std::to_string(x.length()) +
                                " and " + std::to_string(y.length()) +
                                " cannot be compared");
  }
}

/// w(x): number of set positions.
inline unsigned weight(const BitString& x) noexcept {
  return static_cast<unsigned>(std::popcount(x.bits()));
}

/// i(x): position j is set iff position j-1 or j+1 of x is set.
inline BitString influence(const BitString& x) {
  const std::uint64_t b = x.bits();
  return BitString(x.length(), ((b << 1) | (b >> 1)) & x.mask());
}

/// gamma(x) = w(x) + w(i(x)), in [0, 2n].
inline unsigned gamma(const BitString& x) { return weight(x) + weight(influence(x)); }

/// True iff some i in [n-1] has x_i = y_{i+1} = 1 or x_{i+1} = y_i = 1.
/// Equivalent to S(x) meeting S(i(y)).
inline bool skewincident(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  return (x.bits() & influence(y).bits()) != 0;
}

/// Coordinatewise x <= y.
inline bool dominated_by(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  return (x.bits() & ~y.bits()) == 0;
}

inline bool comparable(const BitString& x, const BitString& y) {
  return dominated_by(x, y) || dominated_by(y, x);
}

/// No two consecutive positions are both set.
inline bool is_fibonacci(const BitString& x) noexcept {
  return (x.bits() & (x.bits() >> 1)) == 0;
}

}  // namespace skewlab
