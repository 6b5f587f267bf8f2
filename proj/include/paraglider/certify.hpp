#pragma once

// Odd-clique-minor search at tiny scale, and the certificate engine that
// matches a graph against the known sufficient conditions for
// oh(G) >= chi(G), where oh(G) is the largest t such that G has an odd
// K_t minor.
//
// An odd K_t minor is witnessed by t disjoint vertex sets, each connected
// through edges whose endpoints receive different colors under one global
// 2-coloring, such that every pair of sets is joined by an edge whose
// endpoints receive the same color.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "patterns.hpp"

namespace paraglider {

inline constexpr int kOddMinorMaxN = 12;

struct OddMinorModel {
  std::vector<VertexSet> parts;  // t disjoint branch sets
  VertexSet color1;              // vertices colored 1 (others colored 0)
  // one connecting edge per pair: (part i, part j, endpoint in i, endpoint in j)
  std::vector<std::tuple<int, int, int, int>> links;
};

// Independent re-check of a model against the definition.
inline bool validate_odd_minor_model(const Graph& g, const OddMinorModel& m, int t) {
  if (static_cast<int>(m.parts.size()) != t) return false;
  VertexSet seen;
  for (const auto& p : m.parts) {
    if (p.empty() || p.intersects(seen)) return false;
    seen |= p;
    // connectivity through bichromatic edges only
    VertexSet reach;
    reach.set(p.first());
    bool grown = true;
    while (grown) {
      grown = false;
      for (int u = reach.first(); u != -1; u = reach.next(u)) {
        VertexSet cand = (g.neighbors(u) & p) - reach;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
          if (m.color1.contains(u) != m.color1.contains(v)) {
            reach.set(v);
            grown = true;
          }
        }
      }
    }
    if (!(reach == p)) return false;
  }
  std::vector<std::vector<bool>> linked(m.parts.size(),
                                        std::vector<bool>(m.parts.size(), false));
  for (const auto& [i, j, u, v] : m.links) {
    if (i < 0 || j < 0 || i >= t || j >= t || i == j) return false;
    if (!m.parts[static_cast<std::size_t>(i)].contains(u)) return false;
    if (!m.parts[static_cast<std::size_t>(j)].contains(v)) return false;
    if (!g.has_edge(u, v)) return false;
    if (m.color1.contains(u) != m.color1.contains(v)) return false;
    linked[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    linked[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < m.parts.size(); ++i)
    for (std::size_t j = i + 1; j < m.parts.size(); ++j)
      if (!linked[i][j]) return false;
  return true;
}

namespace detail {

struct OddMinorSearch {
  const Graph& g;
  int t;
  std::uint32_t colors = 0;  // bit v = color of v
  std::vector<VertexSet> parts;
  std::vector<std::tuple<int, int, int, int>> links;

  bool same_color(int u, int v) const {
    return ((colors >> u) & 1u) == ((colors >> v) & 1u);
  }

  // A candidate part must reach every earlier part through a same-colored
  // edge; records one such edge per pair.
  bool link_all(const VertexSet& p, std::vector<std::tuple<int, int, int, int>>& out) const {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      bool found = false;
      for (int u = p.first(); u != -1 && !found; u = p.next(u)) {
        VertexSet cand = g.neighbors(u) & parts[j];
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
          if (same_color(u, v)) {
            out.push_back({static_cast<int>(j), static_cast<int>(parts.size()), v, u});
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
    return true;
  }

  // Enumerate parts in increasing order of their minimum vertex. `used`
  // holds vertices taken by earlier parts or skipped for good.
  bool place_next(int next_seed, VertexSet used) {
    if (static_cast<int>(parts.size()) == t) return true;
    if (g.n() - static_cast<int>(used.count()) < t - static_cast<int>(parts.size()))
      return false;
    for (int s = next_seed; s < g.n(); ++s) {
      if (used.contains(s)) continue;
      VertexSet avoid = used;
      for (int v = 0; v < s; ++v) avoid.set(v);
      VertexSet seedset;
      seedset.set(s);
      if (grow(seedset, VertexSet{}, avoid, s)) return true;
    }
    return false;
  }

  // Enumerate each set that contains the seed, avoids `avoid`, and is
  // connected through bichromatic edges, exactly once ("banned" pins the
  // expansion order).
  bool grow(VertexSet cur, VertexSet banned, const VertexSet& avoid, int seed) {
    std::vector<std::tuple<int, int, int, int>> newlinks;
    if (link_all(cur, newlinks)) {
      parts.push_back(cur);
      const std::size_t keep = links.size();
      links.insert(links.end(), newlinks.begin(), newlinks.end());
      // skipped vertices stay off-limits for later parts, so `avoid` rolls on
      if (place_next(seed + 1, avoid | cur)) return true;
      parts.pop_back();
      links.resize(keep);
    }
    VertexSet ext;
    for (int u = cur.first(); u != -1; u = cur.next(u)) {
      VertexSet cand = g.neighbors(u);
      for (int v = cand.first(); v != -1; v = cand.next(v))
        if (!same_color(u, v)) ext.set(v);
    }
    ext = ext - cur - banned - avoid;
    for (int v = ext.first(); v != -1; v = ext.next(v)) {
      VertexSet bigger = cur;
      bigger.set(v);
      if (grow(bigger, banned, avoid, seed)) return true;
      banned.set(v);
    }
    return false;
  }
};

}  // namespace detail

// Exhaustive search for an odd K_t minor; returns a validated model when one
// exists. Guarded to tiny graphs: outer loop over global 2-colorings, inner
// recursive placement of branch sets.
inline std::optional<OddMinorModel> has_odd_clique_minor(const Graph& g, int t) {
  if (g.n() > kOddMinorMaxN)
    throw SizeExceededError("odd-minor search", g.n(), kOddMinorMaxN);
  if (t <= 0) return OddMinorModel{};
  if (t > g.n()) return std::nullopt;

  auto finish = [&](const detail::OddMinorSearch& s) {
    OddMinorModel m;
    m.parts = s.parts;
    m.links = s.links;
    for (int v = 0; v < g.n(); ++v)
      if ((s.colors >> v) & 1u) m.color1.set(v);
    if (!validate_odd_minor_model(g, m, t))
      throw InternalContradictionError("odd-minor search produced an invalid model");
    return m;
  };

  // Fast path: a clique of size t is an odd K_t minor under one color.
  std::vector<int> clique = brute_omega_witness(g, kMaxVertices);
  if (static_cast<int>(clique.size()) >= t) {
    detail::OddMinorSearch s{g, t, 0, {}, {}};
    s.colors = 0;
    for (int k = 0; k < t; ++k) {
      VertexSet p;
      p.set(clique[static_cast<std::size_t>(k)]);
      std::vector<std::tuple<int, int, int, int>> lk;
      if (!s.link_all(p, lk))
        throw InternalContradictionError("clique fast path failed to link");
      s.parts.push_back(p);
      s.links.insert(s.links.end(), lk.begin(), lk.end());
    }
    return finish(s);
  }

  // Global color flips give equivalent models, so vertex 0's color is fixed.
  const std::uint32_t half = g.n() >= 1 ? (1u << (g.n() - 1)) : 1u;
  for (std::uint32_t c = 0; c < half; ++c) {
    detail::OddMinorSearch s{g, t, 0, {}, {}};
    s.colors = c << 1;
    if (s.place_next(0, VertexSet{})) return finish(s);
  }
  return std::nullopt;
}

// Largest t such that an odd K_t minor exists.
inline int oh_small(const Graph& g) {
  if (g.n() > kOddMinorMaxN)
    throw SizeExceededError("odd-minor search", g.n(), kOddMinorMaxN);
  int t = 0;
  while (t < g.n() && has_odd_clique_minor(g, t + 1)) ++t;
  return t;
}

// Upper bound for the Ramsey number R(3, k+1) as used by the small-order
// rule: 4k - 1 for k <= 6, 4k for k = 7.
inline std::optional<int> ramsey_r3_upper(int k) {
  if (k >= 1 && k <= 6) return 4 * k - 1;
  if (k == 7) return 4 * k;
  return std::nullopt;
}

struct Certificate {
  std::string rule;    // first applicable rule, or "none"
  std::string reason;  // populated when rule == "none"
  int n = 0;
  bool n_even = false;
  int alpha = -1;
  int omega = -1;
  int chi = -1;
  std::vector<std::string> facts;  // recorded preconditions, re-derivable

  static std::vector<std::pair<int, int>> ramsey_table() {
    std::vector<std::pair<int, int>> t;
    for (int k = 1; k <= 7; ++k) t.push_back({k, *ramsey_r3_upper(k)});
    return t;
  }
};

// Match the graph against the sufficient conditions for oh(G) >= chi(G),
// cheapest first. All conditions assume independence number at most two;
// otherwise the certificate comes back empty with the reason recorded.
inline Certificate certify_conjecture(const Graph& g) {
  Certificate c;
  c.n = g.n();
  c.n_even = (g.n() % 2 == 0);
  c.alpha = brute_alpha(g, kMaxVertices);
  std::ostringstream f;
  if (c.alpha > 2) {
    c.rule = "none";
    c.reason = "independence number exceeds 2";
    c.facts.push_back("alpha=" + std::to_string(c.alpha));
    return c;
  }
  c.omega = brute_omega(g, kMaxVertices);
  // With no independent triple the complement is triangle-free, so the
  // chromatic number equals n minus a maximum matching of the complement.
  c.chi = g.n() - max_matching(g.complement()).size();
  c.facts.push_back("alpha=" + std::to_string(c.alpha));
  c.facts.push_back("omega=" + std::to_string(c.omega));
  c.facts.push_back("chi=" + std::to_string(c.chi));
  c.facts.push_back(std::string("n=") + std::to_string(c.n) + (c.n_even ? " even" : " odd"));
  // Membership in the constructive class is recorded whenever it holds, even
  // if a cheaper rule ends up carrying the certificate.
  const bool in_target = is_target_class(g);
  if (in_target) c.facts.push_back("3K1-free and paraglider-free");

  if (c.n_even ? (c.omega <= 7 || c.n <= 32) : (c.omega <= 6 || c.n <= 25)) {
    c.rule = "small-order";
    c.facts.push_back(c.n_even ? "omega<=7 or n<=32 (n even)" : "omega<=6 or n<=25 (n odd)");
    return c;
  }
  if (c.n_even ? (4 * c.omega >= c.n) : (4 * c.omega >= c.n + 3)) {
    c.rule = "large-clique";
    c.facts.push_back(c.n_even ? "omega>=n/4 (n even)" : "omega>=(n+3)/4 (n odd)");
    return c;
  }
  if (c.n_even ? (c.chi <= 2 * c.omega) : (5 * c.chi <= 9 * c.omega)) {
    c.rule = "bounded-chi";
    c.facts.push_back(c.n_even ? "chi<=2*omega (n even)" : "chi<=9*omega/5 (n odd)");
    return c;
  }
  if (in_target) {
    c.rule = "target-class";
    return c;
  }
  if (is_quasi_line(g)) {
    c.rule = "quasi-line";
    c.facts.push_back("every neighborhood splits into two cliques");
    return c;
  }
  if (!has_induced(Pattern::House, g)) {
    c.rule = "house-free";
    c.facts.push_back("no induced house");
    return c;
  }
  if (!has_induced(Pattern::W4, g)) {
    c.rule = "w4-free";
    c.facts.push_back("no induced W4");
    return c;
  }
  c.rule = "none";
  c.reason = "no hypothesis applies";
  return c;
}

}  // namespace paraglider
