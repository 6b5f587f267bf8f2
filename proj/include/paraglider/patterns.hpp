#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "paraglider/graph.hpp"
#include "paraglider/odd_cycle.hpp"

namespace paraglider {

enum class Pattern {
  K3,
  ThreeK1,
  TwoK2,
  P2P3,
  C4,
  C5,
  C7,
  Claw,
  Paraglider,
  House,
  W4,
  Kite,
  Hammer,
  Butterfly,
  K1PlusP4,
  K1UnionK4,
  K5,
};

inline constexpr std::array<Pattern, 17> kAllPatterns = {
    Pattern::K3,     Pattern::ThreeK1,   Pattern::TwoK2,  Pattern::P2P3,      Pattern::C4,
    Pattern::C5,     Pattern::C7,        Pattern::Claw,   Pattern::Paraglider, Pattern::House,
    Pattern::W4,     Pattern::Kite,      Pattern::Hammer, Pattern::Butterfly, Pattern::K1PlusP4,
    Pattern::K1UnionK4, Pattern::K5,
};

inline std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::K3: return "K3";
    case Pattern::ThreeK1: return "3K1";
    case Pattern::TwoK2: return "2K2";
    case Pattern::P2P3: return "P2+P3";
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::C7: return "C7";
    case Pattern::Claw: return "claw";
    case Pattern::Paraglider: return "paraglider";
    case Pattern::House: return "house";
    case Pattern::W4: return "W4";
    case Pattern::Kite: return "kite";
    case Pattern::Hammer: return "hammer";
    case Pattern::Butterfly: return "butterfly";
    case Pattern::K1PlusP4: return "K1+P4";
    case Pattern::K1UnionK4: return "K1 u K4";
    case Pattern::K5: return "K5";
  }
  return "?";
}

// Fixed labelings. Cycles are numbered along the cycle; apex vertices come
// last. paraglider = C4 0-1-2-3 plus 4 adjacent to 0,1,2 (the complement of
// P2+P3); house = C4 plus 4 adjacent to the adjacent pair 0,1; kite = K4 plus
// a pendant at 3; hammer = triangle 0,1,2 with the path 2-3-4 attached;
// butterfly = triangles 0,1,2 and 2,3,4 glued at 2.
inline const Graph& pattern_graph(Pattern p) {
  static const auto make = [](int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  };
  static const Graph k3 = make(3, {{0, 1}, {0, 2}, {1, 2}});
  static const Graph threek1 = make(3, {});
  static const Graph twok2 = make(4, {{0, 1}, {2, 3}});
  static const Graph p2p3 = make(5, {{0, 1}, {2, 3}, {3, 4}});
  static const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  static const Graph c5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  static const Graph c7 =
      make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
  static const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
  static const Graph paraglider =
      make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}});
  static const Graph house = make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}});
  static const Graph w4 =
      make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  static const Graph kite =
      make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  static const Graph hammer = make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  static const Graph butterfly =
      make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  static const Graph k1p4 =
      make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  static const Graph k1uk4 =
      make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  static const Graph k5 = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                   {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  switch (p) {
    case Pattern::K3: return k3;
    case Pattern::ThreeK1: return threek1;
    case Pattern::TwoK2: return twok2;
    case Pattern::P2P3: return p2p3;
    case Pattern::C4: return c4;
    case Pattern::C5: return c5;
    case Pattern::C7: return c7;
    case Pattern::Claw: return claw;
    case Pattern::Paraglider: return paraglider;
    case Pattern::House: return house;
    case Pattern::W4: return w4;
    case Pattern::Kite: return kite;
    case Pattern::Hammer: return hammer;
    case Pattern::Butterfly: return butterfly;
    case Pattern::K1PlusP4: return k1p4;
    case Pattern::K1UnionK4: return k1uk4;
    case Pattern::K5: return k5;
  }
  return k3;
}

namespace detail {

// Placement order: first a maximum-degree vertex, then greedily the vertex
// with the most already-placed neighbors. Keeps the backtracking shallow.
inline std::vector<int> placement_order(const Graph& pat) {
  const int k = pat.n();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int u : order)
        if (pat.has_edge(u, v)) ++links;
      int deg = pat.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
  }
  return order;
}

inline bool extend_induced(const Graph& pat, const Graph& host, const std::vector<int>& order,
                           std::vector<int>& image, VertexSet& used, int depth) {
  const int k = pat.n();
  if (depth == k) return true;
  const int pv = order[static_cast<std::size_t>(depth)];
  VertexSet cand = host.vertices() - used;
  for (int d = 0; d < depth; ++d) {
    const int qv = order[static_cast<std::size_t>(d)];
    const int hq = image[static_cast<std::size_t>(qv)];
    if (pat.has_edge(pv, qv))
      cand &= host.neighbors(hq);
    else
      cand -= host.neighbors(hq);
  }
  const int need = pat.degree(pv);
  for (int h = cand.first(); h != -1; h = cand.next(h)) {
    if (host.degree(h) < need) continue;
    image[static_cast<std::size_t>(pv)] = h;
    used.set(h);
    if (extend_induced(pat, host, order, image, used, depth + 1)) return true;
    used.reset(h);
    image[static_cast<std::size_t>(pv)] = -1;
  }
  return false;
}

}  // namespace detail

// Vertices of host inducing a copy of pat, in pattern-vertex order, or
// nullopt. The search is deterministic.
inline std::optional<std::vector<int>> find_induced(const Graph& pat, const Graph& host) {
  if (pat.n() > host.n()) return std::nullopt;
  if (pat.n() == 0) return std::vector<int>{};
  std::vector<int> order = detail::placement_order(pat);
  std::vector<int> image(static_cast<std::size_t>(pat.n()), -1);
  VertexSet used;
  if (detail::extend_induced(pat, host, order, image, used, 0)) return image;
  return std::nullopt;
}

inline std::optional<std::vector<int>> has_induced(Pattern p, const Graph& host) {
  return find_induced(pattern_graph(p), host);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edge_count() == b.edge_count() && find_induced(a, b).has_value();
}

// Quasi-line: every neighborhood is the union of two cliques, i.e. the
// complement of every neighborhood subgraph is bipartite.
inline bool is_quasi_line(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    Graph nb = g.induced(g.neighbors(v));
    if (!is_bipartite(nb.complement())) return false;
  }
  return true;
}

struct ClassCheck {
  bool ok = true;
  std::string predicate;     // failed predicate when !ok
  std::vector<int> witness;  // offending vertices when available
};

// Membership test for the working class: connected, triangle-free,
// P2+P3-free, and imperfect (equivalently here: not bipartite).
inline ClassCheck check_class_H(const Graph& h) {
  if (!h.is_connected()) return {false, "connected", {}};
  if (auto w = has_induced(Pattern::K3, h)) return {false, "K3-free", *w};
  if (auto w = has_induced(Pattern::P2P3, h)) return {false, "P2+P3-free", *w};
  if (is_bipartite(h)) return {false, "imperfect", {}};
  return {};
}

inline bool in_class_H(const Graph& h) { return check_class_H(h).ok; }

// Target class: no independent triple, no induced paraglider.
inline ClassCheck check_target_class(const Graph& g) {
  if (auto w = has_induced(Pattern::ThreeK1, g)) return {false, "3K1-free", *w};
  if (auto w = has_induced(Pattern::Paraglider, g)) return {false, "paraglider-free", *w};
  return {};
}

inline bool is_target_class(const Graph& g) { return check_target_class(g).ok; }

}  // namespace paraglider
