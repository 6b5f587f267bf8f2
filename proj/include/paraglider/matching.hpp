#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "paraglider/graph.hpp"

namespace paraglider {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  VertexSet covered;
  int size() const { return static_cast<int>(edges.size()); }
  int mate(int v) const {
    for (const auto& [a, b] : edges) {
      if (a == v) return b;
      if (b == v) return a;
    }
    return -1;
  }
};

namespace detail {

// Blossom-contraction augmenting search, array form.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g), n_(g.n()), match_(static_cast<std::size_t>(n_), -1),
        p_(static_cast<std::size_t>(n_)), base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)), blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<int> solve() {
    // Greedy seed keeps the augment count low.
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      const VertexSet& nb = g_.neighbors(v);
      for (int to = nb.first(); to != -1; to = nb.next(to))
        if (match_[idx(to)] == -1) {
          match_[idx(v)] = to;
          match_[idx(to)] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v)
      if (match_[idx(v)] == -1) try_augment(v);
    return match_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<bool> mark(static_cast<std::size_t>(n_), false);
    for (;;) {
      a = base_[idx(a)];
      mark[idx(a)] = true;
      if (match_[idx(a)] == -1) break;
      a = p_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (mark[idx(b)]) return b;
      b = p_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = true;
      blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      p_[idx(v)] = child;
      child = match_[idx(v)];
      v = p_[idx(child)];
    }
  }

  void try_augment(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    for (int v = 0; v < n_; ++v) base_[idx(v)] = v;
    used_[idx(root)] = true;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      const VertexSet& nb = g_.neighbors(v);
      for (int to = nb.first(); to != -1; to = nb.next(to)) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && p_[idx(match_[idx(to)])] != -1)) {
          int cur_base = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur_base;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                queue.push_back(i);
              }
            }
        } else if (p_[idx(to)] == -1) {
          p_[idx(to)] = v;
          if (match_[idx(to)] == -1) {
            // Augmenting path ends here; flip it.
            int u = to;
            while (u != -1) {
              int pv = p_[idx(u)];
              int ppv = match_[idx(pv)];
              match_[idx(u)] = pv;
              match_[idx(pv)] = u;
              u = ppv;
            }
            return;
          }
          used_[idx(match_[idx(to)])] = true;
          queue.push_back(match_[idx(to)]);
        }
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace detail

// Maximum matching in a general graph. Deterministic for a fixed input.
inline Matching max_matching(const Graph& g) {
  std::vector<int> mate = detail::BlossomSolver(g).solve();
  Matching m;
  for (int v = 0; v < g.n(); ++v) {
    int w = mate[static_cast<std::size_t>(v)];
    if (w > v) {
      m.edges.emplace_back(v, w);
      m.covered.set(v);
      m.covered.set(w);
    }
  }
  return m;
}

}  // namespace paraglider
