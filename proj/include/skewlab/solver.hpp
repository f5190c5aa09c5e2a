#pragma once

// Exact extremal values built on the clique engine:
//   M(n)        largest family of pairwise skewincident strings of length n
//   M(G)        largest family of distinct vertex subsets of G, pairwise
//               neighbors (some a in A and b in B are adjacent)
//   attractive  largest family of maps [n] -> V(G), pairwise attractive
//               through a position graph F
// Only distinct pairs must be related; whether an element relates to itself
// never matters.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewlab/bitstring.hpp"
#include "skewlab/clique.hpp"
#include "skewlab/counting.hpp"
#include "skewlab/graph.hpp"
#include "skewlab/sperner.hpp"

namespace skewlab {

struct ExtremalResult {
  std::size_t size = 0;
  std::vector<std::string> witness;   // element descriptors, in element order
  std::vector<std::size_t> elements;  // element indices of the witness
  CliqueEngine engine = CliqueEngine::enumeration;
  double elapsed_ms = 0.0;

  /// "enumeration" or "branch-and-bound".
  std::string method() const {
    return engine == CliqueEngine::enumeration ? "enumeration" : "branch-and-bound";
  }
};

/// {size, witness, method, elapsed_ms}; elapsed_ms can be left out for
/// byte-stable output.
inline nlohmann::json to_json(const ExtremalResult& r, bool with_timing = true) {
  nlohmann::json j;
  j["size"] = r.size;
  j["witness"] = r.witness;
  j["method"] = r.method();
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace detail {

template <typename Describe>
ExtremalResult solve_extremal(const CliqueInstance& inst, const CliqueOptions& options,
                              Describe&& describe) {
  const auto clique = max_clique(inst, options);
  ExtremalResult r;
  r.size = clique.size;
  r.elements = clique.members;
  r.engine = clique.engine;
  r.elapsed_ms = clique.elapsed_ms;
  for (const auto e : clique.members) r.witness.push_back(describe(e));
  return r;
}

}  // namespace detail

inline constexpr unsigned default_max_M_length = 8;
inline constexpr unsigned override_max_M_length = 12;
inline constexpr std::size_t max_MG_vertices = 12;

/// Element r is BitString::from_rank(n, r). Lengths above 8 need
/// allow_large (up to 12, i.e. 4096 elements).
inline ExtremalResult exact_M(unsigned n, bool allow_large = false,
                              const CliqueOptions& options = {}) {
  const unsigned cap = allow_large ? override_max_M_length : default_max_M_length;
  if (n < 1 || n > cap) {
    throw std::invalid_argument("exact_M needs n in [1, " + std::to_string(cap) + "], got " +
                                std::to_string(n) +
                                (allow_large ? "" : " (larger n requires the override flag)"));
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint64_t> bits(count), infl(count);
  for (std::size_t r = 0; r < count; ++r) {
    const auto x = BitString::from_rank(n, r);
    bits[r] = x.bits();
    infl[r] = influence(x).bits();
  }
  const auto inst = CliqueInstance::from_predicate(
      count, [&](std::size_t a, std::size_t b) { return (bits[a] & infl[b]) != 0; });
  return detail::solve_extremal(inst, options, [n](std::size_t r) {
    return BitString::from_rank(n, r).to_string();
  });
}

/// Element r is the vertex subset whose indicator (position i = vertex i-1)
/// has lexicographic rank r, so M(P_n) elements line up with M(n) strings.
inline ExtremalResult exact_MG(const Graph& g, const CliqueOptions& options = {}) {
  const std::size_t v = g.vertex_count();
  if (v > max_MG_vertices) {
    throw std::invalid_argument("exact_MG needs at most 12 vertices, got " + std::to_string(v));
  }
  const auto width = static_cast<unsigned>(v);
  std::vector<std::uint64_t> nbr_word(v, 0);
  for (std::size_t u = 0; u < v; ++u) nbr_word[u] = g.neighbors(u).words()[0];

  const std::size_t count = std::size_t{1} << v;
  std::vector<std::uint64_t> subset(count), reach(count);
  for (std::size_t r = 0; r < count; ++r) {
    subset[r] = BitString::from_rank(width, r).bits();
    std::uint64_t n = 0;
    for (std::uint64_t s = subset[r]; s != 0; s &= s - 1) n |= nbr_word[std::countr_zero(s)];
    reach[r] = n;
  }
  const auto inst = CliqueInstance::from_predicate(
      count, [&](std::size_t a, std::size_t b) { return (subset[a] & reach[b]) != 0; });
  return detail::solve_extremal(inst, options, [width](std::size_t r) {
    return BitString::from_rank(width, r).to_string();
  });
}

/// Vertex subset (0-based vertices) named by an exact_MG descriptor.
inline std::vector<std::size_t> subset_of(const std::string& descriptor) {
  const auto x = BitString::parse(descriptor);
  std::vector<std::size_t> out;
  for (const auto p : x.support()) out.push_back(p - 1);
  return out;
}

/// 2^{sum n_i} - sum 2^{n_i} + 2r - 1.
inline BigInt multipartite_M(const Partition& p) {
  BigInt value = pow2(p.total());
  for (const auto part : p.parts()) value -= pow2(part);
  value += 2 * static_cast<unsigned>(p.part_count()) - 1;
  return value;
}

/// (2^m - 1)(2^n - 1) + 2.
inline BigInt bipartite_M(unsigned m, unsigned n) { return (pow2(m) - 1) * (pow2(n) - 1) + 2; }

/// Maps a: [n] -> V(G), indexed in base |V(G)| with position 1 most
/// significant. a and b attract iff some i, j adjacent in F (restricted to
/// its first n vertices; a loop lets i = j) have a(i) adjacent to b(j) in G.
inline ExtremalResult exact_attractive(const Graph& f_graph, const Graph& g_graph, unsigned n,
                                       const CliqueOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("exact_attractive needs n >= 1");
  if (f_graph.vertex_count() < n) {
    throw std::invalid_argument("position graph has fewer than n vertices");
  }
  const std::size_t q = g_graph.vertex_count();
  std::size_t count = 1;
  for (unsigned k = 0; k < n; ++k) {
    if (count > max_clique_elements / q) {
      throw std::invalid_argument("|V(G)|^n exceeds 4096 maps");
    }
    count *= q;
  }

  auto digits_of = [&](std::size_t index) {
    std::vector<std::size_t> d(n);
    for (unsigned k = n; k-- > 0;) {
      d[k] = index % q;
      index /= q;
    }
    return d;
  };

  std::vector<std::vector<std::size_t>> maps(count);
  for (std::size_t e = 0; e < count; ++e) maps[e] = digits_of(e);

  // reach[e][j]: G-vertices adjacent to a(i) for some i F-adjacent to j.
  std::vector<std::vector<Bitset>> reach(count, std::vector<Bitset>(n, Bitset(q)));
  for (std::size_t e = 0; e < count; ++e) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < n; ++i) {
        if (f_graph.adjacent(i, j)) reach[e][j] |= g_graph.neighbors(maps[e][i]);
      }
    }
  }
  const auto inst = CliqueInstance::from_predicate(count, [&](std::size_t a, std::size_t b) {
    for (unsigned j = 0; j < n; ++j) {
      if (reach[a][j].test(maps[b][j])) return true;
    }
    return false;
  });
  return detail::solve_extremal(inst, options, [&](std::size_t e) {
    std::string s;
    for (std::size_t k = 0; k < n; ++k) {
      if (q <= 10) {
        s += static_cast<char>('0' + maps[e][k]);
      } else {
        if (k > 0) s += ',';
        s += std::to_string(maps[e][k]);
      }
    }
    return s;
  });
}

struct SandwichReport {
  unsigned n = 0;
  BigInt lower;   // |C_n|
  std::size_t exact = 0;  // M(n)
  BigInt fibonacci;       // f_n
  std::size_t antichain = 0;  // m_n
  BigInt upper;   // 2^n - (f_n - m_n)

  bool holds() const { return lower <= exact && BigInt(exact) <= upper; }
};

/// |C_n| <= M(n) <= 2^n - (f_n - m_n).
inline SandwichReport sandwich_check(unsigned n, const CliqueOptions& options = {}) {
  if (n < 1 || n > default_max_M_length) {
    throw std::invalid_argument("sandwich check needs n in [1, 8], got " + std::to_string(n));
  }
  SandwichReport r;
  r.n = n;
  r.lower = count_C(n);
  r.exact = exact_M(n, false, options).size;
  r.fibonacci = fibonacci_count(n);
  r.antichain = max_antichain(n).size;
  r.upper = pow2(n) - (r.fibonacci - r.antichain);
  return r;
}

}  // namespace skewlab
