#pragma once

// Exact maximum clique over a symmetric relation on elements 0..N-1.
//
// Two exact engines share one interface:
//   * coloring branch-and-bound: greedy sequential coloring of the candidate
//     set bounds the clique that can still be added (bitset rows, vertices
//     ordered by descending degree, ties by index);
//   * complement MIS: for relations denser than 50% the complement is sparse
//     and a maximum independent set is found there, branching on a vertex of
//     maximum complement degree after removing degree-0/1 vertices and bounding
//     by a greedy clique cover of the complement.
// Tiny instances (N <= 16) are solved by plain enumeration.
//
// After the size w is known the witness is rebuilt as the lexicographically
// first w-clique (sorted element indices compared lexicographically) using
// decision searches, so it does not depend on the engine or thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlab/bitset.hpp"
#include "skewlab/graph.hpp"
#include "skewlab/parallel.hpp"

namespace skewlab {

inline constexpr std::size_t max_clique_elements = 4096;

/// Symmetric relation on element indices; self-relation is ignored.
class CliqueInstance {
 public:
  /// Builds the relation by evaluating related(i, j) for every i < j.
  template <typename Related>
  static CliqueInstance from_predicate(std::size_t element_count, Related&& related) {
    CliqueInstance inst(element_count);
    for (std::size_t i = 0; i < element_count; ++i) {
      for (std::size_t j = i + 1; j < element_count; ++j) {
        if (related(i, j)) inst.relate(i, j);
      }
    }
    return inst;
  }

  /// Adjacency of g, loops dropped.
  static CliqueInstance from_graph(const Graph& g) {
    CliqueInstance inst(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
      if (u != v) inst.relate(u, v);
    }
    return inst;
  }

  explicit CliqueInstance(std::size_t element_count) {
    if (element_count < 1 || element_count > max_clique_elements) {
      throw std::invalid_argument("clique instance needs 1 to 4096 elements, got " +
                                  std::to_string(element_count));
    }
    rows_.assign(element_count, Bitset(element_count));
  }

  std::size_t element_count() const noexcept { return rows_.size(); }

  void relate(std::size_t i, std::size_t j) {
    if (i >= rows_.size() || j >= rows_.size()) throw std::out_of_range("element out of range");
    if (i == j) return;
    rows_[i].set(j);
    rows_[j].set(i);
  }

  bool related(std::size_t i, std::size_t j) const { return i != j && rows_[i].test(j); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }

  std::size_t degree(std::size_t i) const { return rows_[i].count(); }

  /// Fraction of unordered distinct pairs that are related.
  double density() const {
    const std::size_t n = rows_.size();
    if (n < 2) return 0.0;
    std::size_t twice_edges = 0;
    for (const auto& r : rows_) twice_edges += r.count();
    return static_cast<double>(twice_edges) / (static_cast<double>(n) * static_cast<double>(n - 1));
  }

  /// Pair complement on distinct elements.
  CliqueInstance complement() const {
    CliqueInstance c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      c.rows_[i].set_all();
      c.rows_[i].subtract(rows_[i]);
      c.rows_[i].reset(i);
    }
    return c;
  }

  bool is_clique(const std::vector<std::size_t>& members) const {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!related(members[a], members[b])) return false;
      }
    }
    return true;
  }

 private:
  std::vector<Bitset> rows_;
};

enum class CliqueEngine { automatic, enumeration, coloring, complement_mis };

inline std::string to_string(CliqueEngine e) {
  switch (e) {
    case CliqueEngine::automatic: return "automatic";
    case CliqueEngine::enumeration: return "enumeration";
    case CliqueEngine::coloring: return "coloring";
    case CliqueEngine::complement_mis: return "complement-mis";
  }
  return "unknown";
}

struct CliqueOptions {
  CliqueEngine engine = CliqueEngine::automatic;
  /// Workers for the top-level branches of the size search; 0 = sequential.
  unsigned threads = 0;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> members;  // lexicographically first optimum, sorted
  CliqueEngine engine = CliqueEngine::enumeration;
  double elapsed_ms = 0.0;
};

inline constexpr std::size_t enumeration_limit = 16;
inline constexpr double complement_density_threshold = 0.5;

namespace detail {

// Sentinel meaning "no target: search for the true maximum".
inline constexpr std::size_t no_target = static_cast<std::size_t>(-1);

// Shared incumbent; only grows.
class Incumbent {
 public:
  explicit Incumbent(std::size_t initial) : value_(initial) {}
  std::size_t get() const noexcept { return value_.load(std::memory_order_relaxed); }
  void offer(std::size_t v) noexcept {
    std::size_t seen = value_.load(std::memory_order_relaxed);
    while (v > seen && !value_.compare_exchange_weak(seen, v, std::memory_order_relaxed)) {
    }
  }

 private:
  std::atomic<std::size_t> value_;
};

// Exhaustive search, include-first, over candidates in index order. The first
// maximum met in this order is the lexicographically first one.
class EnumerationSearch {
 public:
  explicit EnumerationSearch(const CliqueInstance& inst) : inst_(inst) {}

  std::vector<std::size_t> best_in(const Bitset& candidates) {
    best_.clear();
    current_.clear();
    recurse(candidates.to_vector(), 0);
    return best_;
  }

 private:
  void recurse(const std::vector<std::size_t>& cand, std::size_t from) {
    if (current_.size() + (cand.size() - from) <= best_.size()) return;
    if (from == cand.size()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    const std::size_t v = cand[from];
    bool fits = true;
    for (const auto u : current_) fits = fits && inst_.related(u, v);
    if (fits) {
      current_.push_back(v);
      recurse(cand, from + 1);
      current_.pop_back();
    }
    recurse(cand, from + 1);
  }

  const CliqueInstance& inst_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

// Coloring branch-and-bound in a relabelled index space where position k holds
// the k-th vertex of the descending-degree order.
class ColoringSearch {
 public:
  explicit ColoringSearch(const CliqueInstance& inst) : n_(inst.element_count()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> deg(n_);
    for (std::size_t i = 0; i < n_; ++i) deg[i] = inst.degree(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    position_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) position_[order_[k]] = k;
    rows_.assign(n_, Bitset(n_));
    for (std::size_t k = 0; k < n_; ++k) {
      inst.row(order_[k]).for_each([&](std::size_t j) { rows_[k].set(position_[j]); });
    }
  }

  /// Largest clique size inside `candidates` (original indices), stopping as
  /// soon as `target` is reached.
  std::size_t max_size(const Bitset& candidates, std::size_t target, unsigned threads) const {
    Bitset p(n_);
    candidates.for_each([&](std::size_t i) { p.set(position_[i]); });
    if (!p.any()) return 0;
    Incumbent best(0);
    if (threads <= 1) {
      expand(0, p, best, target);
      return best.get();
    }
    // Split the root into its colored branches, highest color first.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> bounds;
    color(p, verts, bounds);
    std::vector<Bitset> branch_sets(verts.size());
    Bitset remaining = p;
    for (std::size_t k = verts.size(); k-- > 0;) {
      branch_sets[k] = remaining;
      branch_sets[k] &= rows_[verts[k]];
      remaining.reset(verts[k]);
    }
    parallel_for(verts.size(), threads, [&](std::size_t idx) {
      const std::size_t k = verts.size() - 1 - idx;
      if (bounds[k] <= best.get() || best.get() >= target) return;
      if (!branch_sets[k].any()) {
        best.offer(1);
        return;
      }
      expand(1, branch_sets[k], best, target);
    });
    return best.get();
  }

 private:
  void color(const Bitset& p, std::vector<std::size_t>& verts,
             std::vector<std::size_t>& bounds) const {
    Bitset uncolored = p;
    std::size_t c = 0;
    while (uncolored.any()) {
      ++c;
      Bitset q = uncolored;
      auto& words = q.words();
      for (std::size_t w = 0; w < words.size(); ++w) {
        while (words[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(words[w]));
          q.reset(v);
          q.subtract(rows_[v]);
          uncolored.reset(v);
          verts.push_back(v);
          bounds.push_back(c);
        }
      }
    }
  }

  void expand(std::size_t depth, Bitset p, Incumbent& best, std::size_t target) const {
    std::vector<std::size_t> verts;
    std::vector<std::size_t> bounds;
    color(p, verts, bounds);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (depth + bounds[k] <= best.get() || best.get() >= target) return;
      const std::size_t v = verts[k];
      Bitset next = p;
      next &= rows_[v];
      if (!next.any()) {
        best.offer(depth + 1);
      } else {
        expand(depth + 1, std::move(next), best, target);
      }
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<Bitset> rows_;
};

// Maximum independent set of the complement relation.
class ComplementMisSearch {
 public:
  explicit ComplementMisSearch(const CliqueInstance& inst)
      : comp_(inst.complement()) {}

  std::size_t max_size(const Bitset& candidates, std::size_t target, unsigned threads) const {
    if (!candidates.any()) return 0;
    Incumbent best(0);
    if (threads <= 1) {
      search(candidates, 0, best, target);
      return best.get();
    }
    // Root split: branch k takes the k-th candidate and discards all earlier
    // ones. Together the branches cover every independent set.
    Bitset p = candidates;
    std::size_t taken = reduce(p);
    if (!p.any()) return taken;
    const auto verts = p.to_vector();
    parallel_for(verts.size(), threads, [&](std::size_t k) {
      if (best.get() >= target) return;
      Bitset branch = p;
      for (std::size_t e = 0; e < k; ++e) branch.reset(verts[e]);
      branch.subtract(comp_.row(verts[k]));
      branch.reset(verts[k]);
      search(branch, taken + 1, best, target);
    });
    return best.get();
  }

 private:
  // Takes degree-0 and degree-1 vertices (safe for maximum size).
  std::size_t reduce(Bitset& p) const {
    std::size_t taken = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto v : p.to_vector()) {
        if (!p.test(v)) continue;
        Bitset nb = comp_.row(v);
        nb &= p;
        if (nb.count() <= 1) {
          p.subtract(nb);
          p.reset(v);
          ++taken;
          changed = true;
        }
      }
    }
    return taken;
  }

  // Greedy partition of p into cliques of the complement.
  std::size_t clique_cover(const Bitset& p) const {
    Bitset uncovered = p;
    std::size_t cliques = 0;
    while (uncovered.any()) {
      ++cliques;
      Bitset cand = uncovered;
      while (cand.any()) {
        const std::size_t v = first(cand);
        uncovered.reset(v);
        cand.reset(v);
        cand &= comp_.row(v);
      }
    }
    return cliques;
  }

  static std::size_t first(const Bitset& b) {
    const auto& w = b.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
    }
    return b.size();
  }

  void search(Bitset p, std::size_t size, Incumbent& best, std::size_t target) const {
    size += reduce(p);
    if (!p.any()) {
      best.offer(size);
      return;
    }
    if (best.get() >= target) return;
    if (size + clique_cover(p) <= best.get()) return;

    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    p.for_each([&](std::size_t v) {
      Bitset nb = comp_.row(v);
      nb &= p;
      const std::size_t d = nb.count();
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    });

    Bitset take = p;
    take.subtract(comp_.row(pivot));
    take.reset(pivot);
    search(std::move(take), size + 1, best, target);
    if (best.get() >= target) return;
    p.reset(pivot);
    search(std::move(p), size, best, target);
  }

  CliqueInstance comp_;
};

}  // namespace detail

/// Exact maximum clique with a lexicographically first witness.
inline CliqueResult max_clique(const CliqueInstance& inst, const CliqueOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = inst.element_count();
  CliqueEngine engine = options.engine;
  if (engine == CliqueEngine::automatic) {
    if (n <= enumeration_limit) {
      engine = CliqueEngine::enumeration;
    } else if (inst.density() > complement_density_threshold) {
      engine = CliqueEngine::complement_mis;
    } else {
      engine = CliqueEngine::coloring;
    }
  }

  Bitset all(n);
  all.set_all();
  CliqueResult result;
  result.engine = engine;

  if (engine == CliqueEngine::enumeration) {
    result.members = detail::EnumerationSearch(inst).best_in(all);
    result.size = result.members.size();
  } else {
    std::function<std::size_t(const Bitset&, std::size_t, unsigned)> decide;
    std::optional<detail::ColoringSearch> coloring;
    std::optional<detail::ComplementMisSearch> mis;
    if (engine == CliqueEngine::coloring) {
      coloring.emplace(inst);
      decide = [&](const Bitset& c, std::size_t t, unsigned th) { return coloring->max_size(c, t, th); };
    } else {
      mis.emplace(inst);
      decide = [&](const Bitset& c, std::size_t t, unsigned th) { return mis->max_size(c, t, th); };
    }
    result.size = decide(all, detail::no_target, options.threads);

    // Lexicographically first witness: keep the smallest candidate that still
    // admits a completion to the optimum.
    Bitset cand = all;
    std::size_t need = result.size;
    for (std::size_t v = 0; v < n && need > 0; ++v) {
      if (!cand.test(v)) continue;
      Bitset rest = cand;
      rest &= inst.row(v);
      for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
      if (need == 1 || decide(rest, need - 1, 0) >= need - 1) {
        result.members.push_back(v);
        cand = std::move(rest);
        --need;
      } else {
        cand.reset(v);
      }
    }
    if (need != 0) throw std::logic_error("clique witness reconstruction failed");
  }

  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace skewlab
