#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "paraglider/errors.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/matching.hpp"

namespace paraglider {

struct Budget {
  int omega_cap = 40;  // also caps alpha
  int chi_cap = 16;    // also caps theta
};

// Partition of the vertex set into cliques.
struct CliqueCover {
  std::vector<std::vector<int>> parts;
  int size() const { return static_cast<int>(parts.size()); }
};

// Throws when the cover is not a partition into cliques of exactly V(g).
inline void validate_cover(const Graph& g, const CliqueCover& cover) {
  VertexSet seen;
  for (const auto& part : cover.parts) {
    if (part.empty()) throw InternalContradictionError("empty cover part");
    for (std::size_t a = 0; a < part.size(); ++a) {
      int v = part[a];
      if (v < 0 || v >= g.n() || seen.test(v))
        throw InternalContradictionError("cover part reuses or exceeds vertices");
      seen.set(v);
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!g.has_edge(v, part[b]))
          throw InternalContradictionError("cover part is not a clique");
    }
  }
  if (seen != g.vertices()) throw InternalContradictionError("cover misses vertices");
}

inline void validate_coloring(const Graph& g, const std::vector<int>& color, int k) {
  if (static_cast<int>(color.size()) != g.n())
    throw InternalContradictionError("coloring has wrong length");
  for (int v = 0; v < g.n(); ++v)
    if (color[static_cast<std::size_t>(v)] < 0 || color[static_cast<std::size_t>(v)] >= k)
      throw InternalContradictionError("color out of range");
  for (const auto& [u, v] : g.edges())
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)])
      throw InternalContradictionError("adjacent vertices share a color");
}

namespace detail {

// Tomita-style branch and bound with a greedy coloring bound.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : g_(g) {}

  VertexSet solve() {
    best_ = VertexSet{};
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet r, VertexSet p) {
    if (p.empty()) {
      if (r.count() > best_.count()) best_ = r;
      return;
    }
    // Greedy coloring of p; vertices are then tried from the last color down.
    std::vector<std::pair<int, int>> order;  // (vertex, color index)
    VertexSet uncolored = p;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet avail = uncolored;
      while (!avail.empty()) {
        int v = avail.first();
        avail.reset(v);
        avail -= g_.neighbors(v);
        uncolored.reset(v);
        order.emplace_back(v, color);
      }
    }
    VertexSet cand = p;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, c] = *it;
      if (r.count() + c <= best_.count()) return;
      VertexSet r2 = r;
      r2.set(v);
      expand(r2, cand & g_.neighbors(v));
      cand.reset(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

// k-colorability by backtracking: a maximum clique is pre-colored, then the
// most saturated vertex is chosen at each step; at most one fresh color is
// ever opened.
class ColorSolver {
 public:
  ColorSolver(const Graph& g, const std::vector<int>& clique) : g_(g), clique_(clique) {}

  bool try_k(int k, std::vector<int>& out) {
    if (static_cast<int>(clique_.size()) > k) return false;
    color_.assign(static_cast<std::size_t>(g_.n()), -1);
    int idx = 0;
    for (int v : clique_) color_[static_cast<std::size_t>(v)] = idx++;
    if (go(k, g_.n() - static_cast<int>(clique_.size()), idx)) {
      out = color_;
      return true;
    }
    return false;
  }

 private:
  bool go(int k, int remaining, int used) {
    if (remaining == 0) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    std::uint64_t pick_mask = 0;
    for (int v = 0; v < g_.n(); ++v) {
      if (color_[static_cast<std::size_t>(v)] != -1) continue;
      std::uint64_t mask = 0;
      const VertexSet& nb = g_.neighbors(v);
      for (int u = nb.first(); u != -1; u = nb.next(u)) {
        int c = color_[static_cast<std::size_t>(u)];
        if (c >= 0) mask |= std::uint64_t{1} << c;
      }
      int sat = std::popcount(mask);
      int deg = g_.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_mask = mask;
      }
    }
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (pick_mask & (std::uint64_t{1} << c)) continue;
      color_[static_cast<std::size_t>(pick)] = c;
      if (go(k, remaining - 1, std::max(used, c + 1))) return true;
      color_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& clique_;
  std::vector<int> color_;
};

}  // namespace detail

// Maximum clique as a vertex set. No size guard; callers guard.
inline VertexSet max_clique(const Graph& g) { return detail::CliqueSolver(g).solve(); }

inline std::vector<int> brute_omega_witness(const Graph& g, int cap = Budget{}.omega_cap) {
  if (g.n() > cap) throw SizeExceededError("omega", g.n(), cap);
  return max_clique(g).to_vector();
}

inline int brute_omega(const Graph& g, int cap = Budget{}.omega_cap) {
  return static_cast<int>(brute_omega_witness(g, cap).size());
}

inline std::vector<int> brute_alpha_witness(const Graph& g, int cap = Budget{}.omega_cap) {
  if (g.n() > cap) throw SizeExceededError("alpha", g.n(), cap);
  return max_clique(g.complement()).to_vector();
}

inline int brute_alpha(const Graph& g, int cap = Budget{}.omega_cap) {
  return static_cast<int>(brute_alpha_witness(g, cap).size());
}

// Chromatic number with a witness coloring, by iterative deepening from the
// clique lower bound.
inline std::pair<int, std::vector<int>> brute_chi_witness(const Graph& g,
                                                          int cap = Budget{}.chi_cap) {
  if (g.n() > cap) throw SizeExceededError("chi", g.n(), cap);
  if (g.n() == 0) return {0, {}};
  std::vector<int> clique = max_clique(g).to_vector();
  detail::ColorSolver solver(g, clique);
  for (int k = static_cast<int>(clique.size());; ++k) {
    std::vector<int> coloring;
    if (solver.try_k(k, coloring)) {
      validate_coloring(g, coloring, k);
      return {k, coloring};
    }
  }
}

inline int brute_chi(const Graph& g, int cap = Budget{}.chi_cap) {
  return brute_chi_witness(g, cap).first;
}

// Clique cover number via coloring the complement; parts are color classes.
inline std::pair<int, CliqueCover> brute_theta_witness(const Graph& g,
                                                       int cap = Budget{}.chi_cap) {
  if (g.n() > cap) throw SizeExceededError("theta", g.n(), cap);
  auto [k, coloring] = brute_chi_witness(g.complement(), cap);
  CliqueCover cover;
  cover.parts.assign(static_cast<std::size_t>(k), {});
  for (int v = 0; v < g.n(); ++v)
    cover.parts[static_cast<std::size_t>(coloring[static_cast<std::size_t>(v)])].push_back(v);
  validate_cover(g, cover);
  return {k, cover};
}

inline int brute_theta(const Graph& g, int cap = Budget{}.chi_cap) {
  return brute_theta_witness(g, cap).first;
}

struct InvariantReport {
  int omega = 0;
  int alpha = 0;
  int chi = 0;
  int theta = 0;
  std::vector<int> clique;
  std::vector<int> independent_set;
  std::vector<int> coloring;
  CliqueCover cover;
};

// All four invariants with witnesses. Errors name the first invariant whose
// cap is exceeded, in the order omega, alpha, chi, theta.
inline InvariantReport brute_invariants(const Graph& g, const Budget& budget = {}) {
  InvariantReport rep;
  rep.clique = brute_omega_witness(g, budget.omega_cap);
  rep.omega = static_cast<int>(rep.clique.size());
  rep.independent_set = brute_alpha_witness(g, budget.omega_cap);
  rep.alpha = static_cast<int>(rep.independent_set.size());
  std::tie(rep.chi, rep.coloring) = brute_chi_witness(g, budget.chi_cap);
  std::tie(rep.theta, rep.cover) = brute_theta_witness(g, budget.chi_cap);
  return rep;
}

// theta for triangle-free graphs: n minus a maximum matching; the cover is
// the matched pairs plus singletons. Throws with a witness on a triangle.
struct TriangleFreeTheta {
  int theta = 0;
  CliqueCover cover;
  Matching matching;
};

inline TriangleFreeTheta theta_triangle_free(const Graph& h) {
  for (const auto& [u, v] : h.edges()) {
    VertexSet common = h.neighbors(u) & h.neighbors(v);
    if (!common.empty()) throw ClassViolationError("K3", {u, v, common.first()});
  }
  TriangleFreeTheta out;
  out.matching = max_matching(h);
  for (const auto& [u, v] : out.matching.edges) out.cover.parts.push_back({u, v});
  VertexSet rest = h.vertices() - out.matching.covered;
  for (int v = rest.first(); v != -1; v = rest.next(v)) out.cover.parts.push_back({v});
  out.theta = out.cover.size();
  if (out.theta != h.n() - out.matching.size())
    throw InternalContradictionError("matching cover count mismatch");
  validate_cover(h, out.cover);
  return out;
}

}  // namespace paraglider
