#pragma once

// Hopcroft-Karp maximum matching on a bipartite graph with left vertices
// 0..L-1 and right vertices 0..R-1, plus the Konig vertex cover read off a
// maximum matching.

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace skewlab {

class BipartiteMatching {
 public:
  static constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

  BipartiteMatching(std::size_t left, std::size_t right)
      : adj_(left), match_left_(left, unmatched), match_right_(right, unmatched) {}

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= match_right_.size()) {
      throw std::out_of_range("bipartite edge endpoint out of range");
    }
    adj_[u].push_back(v);
  }

  std::size_t left_size() const noexcept { return adj_.size(); }
  std::size_t right_size() const noexcept { return match_right_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }

  /// Runs Hopcroft-Karp and returns the matching size. Left vertices and
  /// their edge lists are scanned in insertion order, so the result is
  /// deterministic.
  std::size_t solve() {
    std::size_t size = 0;
    while (layer()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == unmatched && augment(u)) ++size;
      }
    }
    return size;
  }

  std::size_t match_of_left(std::size_t u) const { return match_left_[u]; }
  std::size_t match_of_right(std::size_t v) const { return match_right_[v]; }

  struct Reach {
    std::vector<bool> left;
    std::vector<bool> right;
  };

  /// Vertices reachable from unmatched left vertices along alternating
  /// paths. With a maximum matching, (left not reached) + (right reached)
  /// is a minimum vertex cover.
  Reach alternating_reach() const {
    Reach r{std::vector<bool>(adj_.size(), false), std::vector<bool>(match_right_.size(), false)};
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == unmatched) {
        r.left[u] = true;
        stack.push_back(u);
      }
    }
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto v : adj_[u]) {
        if (r.right[v]) continue;
        r.right[v] = true;
        const std::size_t w = match_right_[v];
        if (w != unmatched && !r.left[w]) {
          r.left[w] = true;
          stack.push_back(w);
        }
      }
    }
    return r;
  }

 private:
  static constexpr std::size_t infinity = std::numeric_limits<std::size_t>::max();

  bool layer() {
    dist_.assign(adj_.size(), infinity);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == unmatched) {
        dist_[u] = 0;
        q.push(u);
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (const auto v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == unmatched) {
          found = true;
        } else if (dist_[w] == infinity) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS from u; flips the path when a free right vertex is hit.
  bool augment(std::size_t root) {
    struct Frame {
      std::size_t u;
      std::size_t next_edge;
    };
    std::vector<Frame> stack{{root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_edge == adj_[f.u].size()) {
        dist_[f.u] = infinity;
        stack.pop_back();
        continue;
      }
      const std::size_t v = adj_[f.u][f.next_edge++];
      const std::size_t w = match_right_[v];
      if (w == unmatched) {
        // Flip every edge along the stack, innermost first.
        std::size_t right = v;
        for (std::size_t k = stack.size(); k-- > 0;) {
          const std::size_t u = stack[k].u;
          const std::size_t previous = match_left_[u];
          match_left_[u] = right;
          match_right_[right] = u;
          right = previous;
        }
        return true;
      }
      if (dist_[w] == dist_[f.u] + 1) stack.push_back({w, 0});
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace skewlab
