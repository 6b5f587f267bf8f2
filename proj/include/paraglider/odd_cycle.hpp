#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "paraglider/errors.hpp"
#include "paraglider/graph.hpp"

namespace paraglider {

namespace detail {

// Rotate/reflect a cycle so it starts at its smallest vertex and continues
// toward the lexicographically smaller side.
inline std::vector<int> normalize_cycle(const std::vector<int>& c) {
  const int len = static_cast<int>(c.size());
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int off = 0; off < len; ++off) {
      std::vector<int> cand(static_cast<std::size_t>(len));
      for (int k = 0; k < len; ++k) {
        int idx = dir == 0 ? (off + k) % len : (off - k % len + len) % len;
        cand[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(idx)];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace detail

// Shortest odd cycle as an ordered vertex sequence (consecutive vertices and
// the wrap-around pair are adjacent), or nullopt when the graph is bipartite.
// Deterministic: among all shortest odd cycles reachable through the BFS
// layering the lexicographically smallest normalized sequence is returned.
inline std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      VertexSet nxt;
      for (int v = frontier.first(); v != -1; v = frontier.next(v)) nxt |= g.neighbors(v);
      nxt -= seen;
      for (int v = nxt.first(); v != -1; v = nxt.next(v)) d[static_cast<std::size_t>(v)] = level;
      seen |= nxt;
      frontier = nxt;
    }
  }

  const auto edge_list = g.edges();
  int best_len = -1;
  for (int s = 0; s < n; ++s) {
    const auto& d = dist[static_cast<std::size_t>(s)];
    for (const auto& [u, v] : edge_list) {
      int du = d[static_cast<std::size_t>(u)], dv = d[static_cast<std::size_t>(v)];
      if (du < 0 || du != dv) continue;
      int len = 2 * du + 1;
      if (best_len < 0 || len < best_len) best_len = len;
    }
  }
  if (best_len < 0) return std::nullopt;

  // Walk from x back to s along BFS layers, smallest-id predecessor first.
  auto path_to_root = [&](int s, int x) {
    const auto& d = dist[static_cast<std::size_t>(s)];
    std::vector<int> path{x};
    while (x != s) {
      int want = d[static_cast<std::size_t>(x)] - 1;
      int pred = -1;
      const VertexSet& nb = g.neighbors(x);
      for (int y = nb.first(); y != -1; y = nb.next(y))
        if (d[static_cast<std::size_t>(y)] == want) {
          pred = y;
          break;
        }
      path.push_back(pred);
      x = pred;
    }
    return path;  // x, ..., s
  };

  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    const auto& d = dist[static_cast<std::size_t>(s)];
    for (const auto& [u, v] : edge_list) {
      int du = d[static_cast<std::size_t>(u)], dv = d[static_cast<std::size_t>(v)];
      if (du < 0 || du != dv || 2 * du + 1 != best_len) continue;
      std::vector<int> pu = path_to_root(s, u);  // u .. s
      std::vector<int> pv = path_to_root(s, v);  // v .. s
      std::vector<int> cyc(pu.rbegin(), pu.rend());   // s .. u
      cyc.insert(cyc.end(), pv.begin(), pv.end() - 1);  // v .. (below s)
      // At the global minimum the two paths share only s; anything else
      // would contain a shorter odd cycle.
      VertexSet used;
      bool simple = true;
      for (int x : cyc) {
        if (used.test(x)) {
          simple = false;
          break;
        }
        used.set(x);
      }
      if (!simple || static_cast<int>(cyc.size()) != best_len) continue;
      std::vector<int> norm = detail::normalize_cycle(cyc);
      if (best.empty() || norm < best) best = std::move(norm);
    }
  }
  if (best.empty())
    throw InternalContradictionError("odd cycle of known length could not be materialized");

  // A shortest odd cycle is necessarily chordless.
  const int len = static_cast<int>(best.size());
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b) {
      bool ring = b == a + 1 || (a == 0 && b == len - 1);
      if (g.has_edge(best[static_cast<std::size_t>(a)], best[static_cast<std::size_t>(b)]) != ring)
        throw InternalContradictionError("shortest odd cycle is not chordless");
    }
  return best;
}

inline bool is_bipartite(const Graph& g) { return !shortest_odd_cycle(g).has_value(); }

}  // namespace paraglider
