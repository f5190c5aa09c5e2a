#pragma once

// Finite undirected graphs with loops, stored as a dense bit matrix, and the
// generators used by the neighbor-family and attractive-couple problems.
// Vertices are numbered 0..vertex_count-1.

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/bitset.hpp"

namespace skewlab {

inline constexpr std::size_t max_graph_vertices = 4096;

class Graph {
 public:
  explicit Graph(std::size_t vertex_count) : rows_() {
    if (vertex_count < 1 || vertex_count > max_graph_vertices) {
      throw std::invalid_argument("graph vertex count must be in [1, 4096], got " +
                                  std::to_string(vertex_count));
    }
    rows_.assign(vertex_count, Bitset(vertex_count));
  }

  std::size_t vertex_count() const noexcept { return rows_.size(); }

  /// Adds the undirected edge {u, v}; u == v adds a loop.
  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u].set(v);
    rows_[v].set(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
  }

  /// Neighborhood of u; contains u itself iff u carries a loop.
  const Bitset& neighbors(std::size_t u) const {
    check_vertex(u);
    return rows_[u];
  }

  std::size_t degree(std::size_t u) const { return neighbors(u).count(); }

  bool has_loop(std::size_t u) const { return adjacent(u, u); }

  bool is_simple() const {
    for (std::size_t u = 0; u < rows_.size(); ++u) {
      if (rows_[u].test(u)) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    for (std::size_t u = 0; u < rows_.size(); ++u) {
      bool ok = true;
      rows_[u].for_each([&](std::size_t v) { ok = ok && rows_[v].test(u); });
      if (!ok) return false;
    }
    return true;
  }

  /// Edges as (u, v) with u <= v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < rows_.size(); ++u) {
      rows_[u].for_each([&](std::size_t v) {
        if (u <= v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  /// True iff no two members are adjacent (a member with a loop fails).
  bool is_stable(const std::vector<std::size_t>& vertices) const {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      for (std::size_t b = a; b < vertices.size(); ++b) {
        if (adjacent(vertices[a], vertices[b])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t u) const {
    if (u >= rows_.size()) {
      throw std::out_of_range("vertex " + std::to_string(u) + " out of range for graph on " +
                              std::to_string(rows_.size()) + " vertices");
    }
  }

  std::vector<Bitset> rows_;
};

/// Part sizes n_1, ..., n_r of a complete multipartite graph.
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
    for (const auto p : parts_) {
      if (p < 1) throw std::invalid_argument("partition parts must be positive");
    }
  }

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  unsigned total() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of `total` into positive parts, parts non-increasing.
inline std::vector<Partition> partitions_of(unsigned total) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  auto recurse = [&](auto& self, unsigned remaining, unsigned largest) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (total >= 1) recurse(recurse, total, total);
  return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// P_n: vertices 0..n-1, edges {i, i+1}.
inline Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Parts occupy consecutive vertex ranges in the given order; vertices are
/// adjacent iff they lie in different parts.
inline Graph complete_multipartite(const Partition& p) {
  Graph g(p.total());
  std::vector<std::size_t> part_of;
  for (std::size_t k = 0; k < p.part_count(); ++k) {
    part_of.insert(part_of.end(), p.parts()[k], k);
  }
  for (std::size_t u = 0; u < part_of.size(); ++u) {
    for (std::size_t v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

/// A loop at every vertex and no other edge.
inline Graph all_loops(std::size_t n) {
  if (n < 1) throw std::invalid_argument("all_loops needs n >= 1");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, i);
  return g;
}

/// Vertices {0, 1} with a loop at 1 as the only edge.
inline Graph skew_alphabet() {
  Graph g(2);
  g.add_edge(1, 1);
  return g;
}

inline Graph edgeless(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  return complete_multipartite(Partition(std::vector<unsigned>(n, 1)));
}

// ---------------------------------------------------------------------------
// Text format
//
//   <vertex count>
//   u v          one line per edge, 0-based; u == v is a loop
//
// A file may list each edge once, or every non-loop edge in both
// orientations. Listing only some edges both ways is asymmetric and rejected.
// ---------------------------------------------------------------------------

inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph read_graph(std::istream& is) {
  auto fail = [](const std::string& why, std::size_t line_no) {
    throw std::invalid_argument("graph input line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_index = [&](const std::string& token, std::size_t line_no) -> std::size_t {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 9) {
      fail("expected a non-negative integer, got '" + token + "'", line_no);
    }
    return static_cast<std::size_t>(std::stoul(token));
  };

  std::string line;
  std::size_t line_no = 0;
  std::size_t vertex_count = 0;
  bool have_count = false;
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_count) {
      if (tokens.size() != 1) fail("first line must hold the vertex count", line_no);
      vertex_count = parse_index(tokens[0], line_no);
      if (vertex_count < 1 || vertex_count > max_graph_vertices) {
        fail("vertex count must be in [1, 4096]", line_no);
      }
      have_count = true;
      continue;
    }
    if (tokens.size() != 2) fail("edge lines must hold exactly two vertices", line_no);
    const auto u = parse_index(tokens[0], line_no);
    const auto v = parse_index(tokens[1], line_no);
    if (u >= vertex_count || v >= vertex_count) fail("vertex out of range", line_no);
    if (!arcs.emplace(u, v).second) fail("duplicate edge", line_no);
  }
  if (!have_count) throw std::invalid_argument("graph input is empty");

  std::size_t paired = 0;
  std::size_t unpaired = 0;
  for (const auto& [u, v] : arcs) {
    if (u == v) continue;
    (arcs.count({v, u}) ? paired : unpaired) += 1;
  }
  if (paired > 0 && unpaired > 0) {
    throw std::invalid_argument(
        "graph input is asymmetric: some edges are listed in both orientations, others in one");
  }

  Graph g(vertex_count);
  for (const auto& [u, v] : arcs) g.add_edge(u, v);
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace skewlab

namespace skewlab {

/// Graph named by a short spec:
///   path:N  loops:N  complete:N  edgeless:N  multipartite:a,b,...  skew
///   file:PATH   (text format above)
inline Graph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto count = [&]() -> std::size_t {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6) {
      throw std::invalid_argument("graph spec '" + spec + "' needs a positive count");
    }
    return std::stoul(arg);
  };
  if (kind == "skew" && arg.empty()) return skew_alphabet();
  if (kind == "path") return path(count());
  if (kind == "loops") return all_loops(count());
  if (kind == "complete") return complete(count());
  if (kind == "edgeless") return edgeless(count());
  if (kind == "multipartite") {
    std::vector<unsigned> parts;
    std::stringstream ss(arg);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4) {
        throw std::invalid_argument("bad part size in graph spec '" + spec + "'");
      }
      parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return complete_multipartite(Partition(parts));
  }
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open graph file '" + arg + "'");
    return read_graph(in);
  }
  throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

}  // namespace skewlab
