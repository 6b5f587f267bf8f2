#pragma once

// End-to-end acceptance checks. Each criterion exercises one guarantee of
// the library against an independent oracle and reports a single pass/fail
// line. The standalone acceptance binary and the `selftest` CLI subcommand
// both drive run_all().

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "paraglider/certify.hpp"
#include "paraglider/cover.hpp"
#include "paraglider/decompose.hpp"
#include "paraglider/exact.hpp"
#include "paraglider/families.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/matching.hpp"
#include "paraglider/patterns.hpp"

namespace paraglider::selftest {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

namespace detail {

// Edge-mask workspace for exhaustive sweeps over labelled graphs on at most
// seven vertices. Bit e of a mask is the e-th vertex pair in lexicographic
// order, so a graph is a single 32-bit integer.
struct MaskSpace {
  int n = 0;
  int num_pairs = 0;
  std::vector<std::pair<int, int>> pairs;
  std::array<std::array<int, 8>, 8> pair_index{};
  std::vector<std::uint32_t> triple_masks;
  // subset_pair_bits[k] lists every k-subset of the vertices as the global
  // bit index of each of its pairs, in the subset's own lexicographic order.
  std::array<std::vector<std::vector<int>>, 8> subset_pair_bits;
};

inline MaskSpace make_space(int n) {
  MaskSpace s;
  s.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s.pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(s.pairs.size());
      s.pairs.emplace_back(i, j);
    }
  s.num_pairs = static_cast<int>(s.pairs.size());
  auto bit_of = [&s](int i, int j) {
    return s.pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        s.triple_masks.push_back((1u << bit_of(a, b)) | (1u << bit_of(a, c)) |
                                 (1u << bit_of(b, c)));
  for (int k = 3; k <= n; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> bits;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          bits.push_back(bit_of(pick[static_cast<std::size_t>(a)],
                                pick[static_cast<std::size_t>(b)]));
      s.subset_pair_bits[static_cast<std::size_t>(k)].push_back(std::move(bits));
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return s;
}

inline Graph graph_of(const MaskSpace& s, std::uint32_t mask) {
  Graph g(s.n);
  for (int e = 0; e < s.num_pairs; ++e)
    if (mask >> e & 1u)
      g.add_edge(s.pairs[static_cast<std::size_t>(e)].first,
                 s.pairs[static_cast<std::size_t>(e)].second);
  return g;
}

inline bool mask_has_triangle(const MaskSpace& s, std::uint32_t mask) {
  for (std::uint32_t t : s.triple_masks)
    if ((mask & t) == t) return true;
  return false;
}

// Bitmap over all labelled graphs on k vertices: entry m is true when edge
// mask m is isomorphic to the pattern. Built by pushing the pattern through
// every vertex ordering, so lookups cost one array access.
inline std::vector<bool> pattern_mask_bitmap(Pattern p) {
  Graph pat = pattern_graph(p);
  int k = pat.n();
  MaskSpace local = make_space(k);
  std::vector<bool> seen(std::size_t{1} << local.num_pairs, false);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = pat.edges();
  do {
    std::uint32_t m = 0;
    for (auto [u, v] : edges) {
      int a = perm[static_cast<std::size_t>(u)];
      int b = perm[static_cast<std::size_t>(v)];
      if (a > b) std::swap(a, b);
      m |= 1u << local.pair_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    seen[m] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen;
}

inline std::uint32_t induced_mask(std::uint32_t host_mask, const std::vector<int>& pair_bits) {
  std::uint32_t m = 0;
  for (std::size_t b = 0; b < pair_bits.size(); ++b)
    if (host_mask >> pair_bits[b] & 1u) m |= 1u << b;
  return m;
}

inline bool subset_oracle_present(const MaskSpace& s, std::uint32_t host_mask, int k,
                                  const std::vector<bool>& bitmap) {
  if (k > s.n) return false;
  for (const auto& bits : s.subset_pair_bits[static_cast<std::size_t>(k)])
    if (bitmap[induced_mask(host_mask, bits)]) return true;
  return false;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Collects failures; keeps the first few messages so a red line stays short.
struct Checker {
  explicit Checker(std::ostringstream& sink) : out(sink) {}

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (++failures <= 4) {
      if (failures > 1) out << "; ";
      out << what;
    }
  }

  void summary(const std::string& text) {
    if (ok) out << text;
  }

  std::ostringstream& out;
  bool ok = true;
  int failures = 0;
};

template <class Fn>
CriterionResult timed(const std::string& name, double budget_seconds, Fn&& body) {
  CriterionResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream sink;
    Checker ck(sink);
    body(ck);
    r.pass = ck.ok;
    r.detail = sink.str();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected exception: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0.0 && r.seconds >= budget_seconds) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "exceeded %.0fs budget", budget_seconds);
    r.detail += buf;
  }
  return r;
}

}  // namespace detail

// Frozen invariants of the named families.
inline CriterionResult named_examples() {
  return detail::timed("named-examples", 1.0, [](detail::Checker& ck) {
    Graph hstar = make_hstar();
    ck.expect(brute_alpha(hstar) == 5, "alpha(hstar) != 5");
    ck.expect(theta_triangle_free(hstar).theta == 8, "theta(hstar) != 8");
    ck.expect(brute_theta(hstar) == 8, "brute theta(hstar) != 8");

    Graph bhat = make_bhat(2);
    ck.expect(brute_alpha(bhat) == 4, "alpha(bhat(2)) != 4");
    ck.expect(theta_triangle_free(bhat).theta == 6, "theta(bhat(2)) != 6");
    ck.expect(brute_theta(bhat) == 6, "brute theta(bhat(2)) != 6");

    ck.expect(theta_triangle_free(make_ht(1)).theta == 5, "theta(ht(1)) != 5");
    ck.expect(brute_theta(make_ht(1)) == 5, "brute theta(ht(1)) != 5");
    ck.expect(theta_triangle_free(make_ht(2)).theta == 8, "theta(ht(2)) != 8");
    ck.expect(brute_theta(make_ht(2)) == 8, "brute theta(ht(2)) != 8");

    for (int t = 1; t <= 5; ++t) {
      Graph h = make_ht(t);
      ck.expect(brute_alpha(h) == 2 * t + 2,
                "alpha(ht(" + std::to_string(t) + ")) != " + std::to_string(2 * t + 2));
    }
    ck.summary("five named families match their frozen invariants");
  });
}

// Every labelled graph on at most seven vertices that lies in the target
// class is coloured, and the colouring obeys the refined bound against a
// brute-force clique number; the matching identity matches brute chi.
inline CriterionResult exhaustive_small() {
  return detail::timed("exhaustive-small", 600.0, [](detail::Checker& ck) {
    auto para_bitmap = detail::pattern_mask_bitmap(Pattern::Paraglider);
    long long total = 0;
    long long members = 0;
    for (int n = 1; n <= 7 && ck.ok; ++n) {
      auto s = detail::make_space(n);
      std::uint32_t full = s.num_pairs == 0 ? 0u : ((1u << s.num_pairs) - 1u);
      for (std::uint32_t mask = 0;; ++mask) {
        ++total;
        std::uint32_t comp = full & ~mask;
        bool member = !detail::mask_has_triangle(s, comp) &&
                      !(n >= 5 && detail::subset_oracle_present(s, mask, 5, para_bitmap));
        if (member) {
          ++members;
          Graph g = detail::graph_of(s, mask);
          std::string where = " at n=" + std::to_string(n) + " mask=" + std::to_string(mask);
          ColoringResult col = color_graph(g);
          int w = brute_omega(g);
          ck.expect(col.num_colors <= std::max(w + 3, 2 * w - 2),
                    "colouring exceeds the refined bound" + where);
          ck.expect(3 * w >= n - 1, "clique number below ceil((n-1)/3)" + where);
          int chi = brute_chi(g);
          ck.expect(col.chi == chi, "reported chi is not exact" + where);
          ck.expect(theta_triangle_free(g.complement()).theta == chi,
                    "matching identity disagrees with brute chi" + where);
          if (!ck.ok) break;
        }
        if (mask == full) break;
      }
    }
    ck.summary(std::to_string(members) + " class members among " + std::to_string(total) +
               " labelled graphs on up to 7 vertices");
  });
}

// The production predicates agree with independent oracles on every labelled
// graph on at most seven vertices: the triangle-free cover identity against
// brute-force theta, and all pattern scans against plain subset enumeration.
inline CriterionResult oracle_equivalence() {
  return detail::timed("oracle-equivalence", 0.0, [](detail::Checker& ck) {
    long long identities = 0;
    for (int n = 1; n <= 7 && ck.ok; ++n) {
      auto s = detail::make_space(n);
      std::uint32_t full = s.num_pairs == 0 ? 0u : ((1u << s.num_pairs) - 1u);
      for (std::uint32_t mask = 0;; ++mask) {
        if (!detail::mask_has_triangle(s, mask)) {
          Graph h = detail::graph_of(s, mask);
          std::string where = " at n=" + std::to_string(n) + " mask=" + std::to_string(mask);
          auto tf = theta_triangle_free(h);
          ck.expect(tf.theta == h.n() - static_cast<int>(max_matching(h).size()),
                    "cover identity broken" + where);
          ck.expect(tf.theta == brute_theta(h), "theta disagrees with brute force" + where);
          ++identities;
          if (!ck.ok) break;
        }
        if (mask == full) break;
      }
    }

    struct Entry {
      Pattern p;
      int k;
      std::vector<bool> bitmap;
    };
    std::vector<Entry> entries;
    for (Pattern p : kAllPatterns) {
      int k = pattern_graph(p).n();
      entries.push_back({p, k, detail::pattern_mask_bitmap(p)});
    }
    long long scans = 0;
    std::vector<std::uint32_t> subs;
    for (int n = 1; n <= 7 && ck.ok; ++n) {
      auto s = detail::make_space(n);
      std::uint32_t full = s.num_pairs == 0 ? 0u : ((1u << s.num_pairs) - 1u);
      for (std::uint32_t mask = 0;; ++mask) {
        Graph g = detail::graph_of(s, mask);
        for (int k = 3; k <= n && ck.ok; ++k) {
          subs.clear();
          for (const auto& bits : s.subset_pair_bits[static_cast<std::size_t>(k)])
            subs.push_back(detail::induced_mask(mask, bits));
          for (const auto& e : entries) {
            if (e.k != k) continue;
            bool oracle = false;
            for (std::uint32_t m : subs)
              if (e.bitmap[m]) {
                oracle = true;
                break;
              }
            bool scan = has_induced(e.p, g).has_value();
            ck.expect(oracle == scan, "scan for " + pattern_name(e.p) +
                                          " disagrees with subset oracle at n=" +
                                          std::to_string(n) + " mask=" + std::to_string(mask));
            ++scans;
          }
        }
        if (!ck.ok || mask == full) break;
      }
    }
    ck.summary(std::to_string(identities) + " cover identities and " + std::to_string(scans) +
               " pattern scans agree with oracles");
  });
}

// Seeded generator output always decomposes cleanly, and the cover size obeys
// the bound matching its classification with a brute-force independence number.
inline CriterionResult random_structure() {
  return detail::timed("random-structure", 300.0, [](detail::Checker& ck) {
    int b1 = 0;
    int b2 = 0;
    int other = 0;
    int max_n = 0;
    for (std::uint64_t seed = 1; seed <= 500 && ck.ok; ++seed) {
      GenParams params;
      params.n_target = 10 + static_cast<int>(seed % 31);
      // Bias one seed in five toward each special regime so the pair and
      // ring cover routes see real traffic alongside the generic mix.
      if (seed % 5 == 0) {
        params.hb_range = {2, 2};
        params.s2_range = {1, 4};
        params.ha_range = {0, 2};
        // Small targets keep the pair blocks near their attachment columns,
        // where the deficient regime lives.
        if (seed % 2 == 0) params.n_target = 10 + static_cast<int>(seed % 4);
      } else if (seed % 5 == 1) {
        params.hb_range = {5, 5};
        params.ha_range = {0, 0};
        params.s2_range = {0, 0};
      }
      Graph h = random_class_member(seed, params);
      max_n = std::max(max_n, h.n());
      std::string where = " at seed " + std::to_string(seed);
      ck.expect(h.n() <= 40, "generated order exceeds 40" + where);
      ck.expect(in_class_H(h), "generator output left the class" + where);
      Decomposition d = decompose(h);
      StructureReport rep = validate_structure(d);
      if (!rep.all_ok()) {
        std::string names;
        for (const auto& r : rep.results)
          if (r.status == PropertyStatus::Violated) names += (names.empty() ? "" : ",") + r.name;
        ck.expect(false, "structure violations (" + names + ")" + where);
        break;
      }
      Classification cls = classify(d);
      CoverResult cov = build_cover(h);
      int a = brute_alpha(h, h.n());
      int bound = 0;
      std::string expect_name;
      switch (cls.label) {
        case ClassLabel::B1:
          bound = 2 * a - 2;
          expect_name = "2alpha-2";
          ++b1;
          break;
        case ClassLabel::B2:
          bound = 3 * a / 2 - 1;
          expect_name = "3alpha/2-1";
          ++b2;
          break;
        default:
          bound = a + 3;
          expect_name = "alpha+3";
          ++other;
          break;
      }
      ck.expect(static_cast<int>(cov.cover.size()) <= bound,
                "cover size exceeds the refined bound" + where);
      ck.expect(cov.bound_name == expect_name,
                "cover case and classification disagree" + where);
    }
    ck.summary("500 generated members validated (max n=" + std::to_string(max_n) + "; " +
               std::to_string(b1) + " deficient-pair, " + std::to_string(b2) +
               " joined-ring, " + std::to_string(other) + " other)");
  });
}

// Odd clique minors: every graph with independence number at most two on up
// to seven vertices (one representative per isomorphism class) admits an odd
// clique minor of order chi, hence also of order ceil(n/2); fixed small
// graphs have the expected odd Hadwiger number.
inline CriterionResult odd_minor() {
  return detail::timed("odd-minor", 900.0, [](detail::Checker& ck) {
    ck.expect(oh_small(pattern_graph(Pattern::C5)) == 3, "oh(C5) != 3");
    for (int t = 1; t <= 6; ++t)
      ck.expect(oh_small(detail::complete_graph(t)) == t,
                "oh(K" + std::to_string(t) + ") != " + std::to_string(t));

    long long reps = 0;
    for (int n = 1; n <= 7 && ck.ok; ++n) {
      auto s = detail::make_space(n);
      std::uint32_t full = s.num_pairs == 0 ? 0u : ((1u << s.num_pairs) - 1u);
      std::map<std::vector<int>, std::vector<Graph>> classes;
      for (std::uint32_t mask = 0;; ++mask) {
        std::uint32_t comp = full & ~mask;
        if (!detail::mask_has_triangle(s, comp)) {
          Graph g = detail::graph_of(s, mask);
          std::vector<int> key;
          for (int v = 0; v < n; ++v) key.push_back(g.neighbors(v).count());
          std::sort(key.begin(), key.end());
          int triangles = 0;
          for (std::uint32_t t : s.triple_masks)
            if ((mask & t) == t) ++triangles;
          key.push_back(triangles);
          auto& bucket = classes[key];
          bool known = false;
          for (const Graph& rep : bucket)
            if (is_isomorphic(g, rep)) {
              known = true;
              break;
            }
          if (!known) {
            bucket.push_back(g);
            ++reps;
            int chi = g.n() - static_cast<int>(max_matching(g.complement()).size());
            std::string where = " at n=" + std::to_string(n) + " mask=" + std::to_string(mask);
            ck.expect(has_odd_clique_minor(g, chi).has_value(),
                      "no odd clique minor of order chi" + where);
            ck.expect(has_odd_clique_minor(g, (n + 1) / 2).has_value(),
                      "no odd clique minor of order ceil(n/2)" + where);
            if (!ck.ok) break;
          }
        }
        if (mask == full) break;
      }
    }
    ck.summary(std::to_string(reps) +
               " isomorphism classes with independence number <= 2 verified");
  });
}

// The refined bounds are exactly attained on the tight families.
inline CriterionResult tight_families() {
  return detail::timed("tight-families", 0.0, [](detail::Checker& ck) {
    auto check = [&ck](const std::string& label, const Graph& h, int size,
                       const std::string& bound_name) {
      CoverResult cov = build_cover(h);
      ck.expect(cov.cover.size() == size,
                label + " cover has " + std::to_string(cov.cover.size()) + " parts, expected " +
                    std::to_string(size));
      ck.expect(cov.bound_name == bound_name, label + " claimed bound " + cov.bound_name +
                                                  ", expected " + bound_name);
      ck.expect(cov.cover.size() == cov.bound_value,
                label + " cover is not tight against its own bound");
    };
    check("bhat(2)", make_bhat(2), 6, "2alpha-2");
    check("ht(1)", make_ht(1), 5, "3alpha/2-1");
    check("ht(2)", make_ht(2), 8, "3alpha/2-1");
    check("hstar", make_hstar(), 8, "alpha+3");
    ck.summary("all four tight families attain their bound exactly");
  });
}

inline std::vector<CriterionResult> run_all(std::ostream& out) {
  auto emit = [&out](const CriterionResult& r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", r.seconds);
    out << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " (" << buf << "s)";
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n' << std::flush;
  };
  std::vector<CriterionResult> results;
  results.push_back(named_examples());
  emit(results.back());
  results.push_back(exhaustive_small());
  emit(results.back());
  results.push_back(oracle_equivalence());
  emit(results.back());
  results.push_back(random_structure());
  emit(results.back());
  results.push_back(odd_minor());
  emit(results.back());
  results.push_back(tight_families());
  emit(results.back());
  return results;
}

inline bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace paraglider::selftest
