#pragma once

// A set of distinct binary strings sharing one length, kept in lexicographic
// order of their text form, plus its two serialized forms: newline-delimited
// bit literals and a JSON array of literals.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewlab/bitstring.hpp"

namespace skewlab {

class Family {
 public:
  explicit Family(unsigned length) : length_(length) {
    if (length < 1 || length > BitString::max_length) {
      throw std::invalid_argument("family length must be in [1, 64]");
    }
  }

  /// Throws std::invalid_argument on a duplicate or a length mismatch.
  Family(unsigned length, std::vector<BitString> members) : Family(length) {
    for (const auto& m : members) {
      if (m.length() != length) {
        throw std::invalid_argument("family member " + m.to_string() +
                                    " does not have length " + std::to_string(length));
      }
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::invalid_argument("family members must be distinct");
    }
    members_ = std::move(members);
  }

  unsigned length() const noexcept { return length_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<BitString>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const BitString& x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  /// Inserts x keeping order; returns false if already present.
  bool insert(const BitString& x) {
    if (x.length() != length_) {
      throw incompatible_operands("cannot insert a string of length " +
                                  std::to_string(x.length()) + " into a family of length " +
                                  std::to_string(length_));
    }
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it != members_.end() && *it == x) return false;
    members_.insert(it, x);
    return true;
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  unsigned length_;
  std::vector<BitString> members_;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline void write_lines(std::ostream& os, const Family& f) {
  for (const auto& m : f) os << m.to_string() << '\n';
}

inline std::string to_lines(const Family& f) {
  std::ostringstream os;
  write_lines(os, f);
  return os.str();
}

/// Reads newline-delimited literals. Blank lines and trailing '\r' are
/// ignored. An empty input needs `length` to know the family length.
inline Family read_lines(std::istream& is, std::optional<unsigned> length = std::nullopt) {
  std::vector<BitString> members;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    members.push_back(BitString::parse(line));
  }
  if (!length) {
    if (members.empty()) throw std::invalid_argument("empty family input has no length");
    length = members.front().length();
  }
  return Family(*length, std::move(members));
}

inline Family parse_lines(const std::string& text, std::optional<unsigned> length = std::nullopt) {
  std::istringstream is(text);
  return read_lines(is, length);
}

inline nlohmann::json to_json(const Family& f) {
  auto arr = nlohmann::json::array();
  for (const auto& m : f) arr.push_back(m.to_string());
  return arr;
}

inline Family family_from_json(const nlohmann::json& j,
                               std::optional<unsigned> length = std::nullopt) {
  if (!j.is_array()) throw std::invalid_argument("family JSON must be an array of bit literals");
  std::vector<BitString> members;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("family JSON entries must be strings");
    members.push_back(BitString::parse(e.get<std::string>()));
  }
  if (!length) {
    if (members.empty()) throw std::invalid_argument("empty family input has no length");
    length = members.front().length();
  }
  return Family(*length, std::move(members));
}

}  // namespace skewlab
