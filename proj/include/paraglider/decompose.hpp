#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "paraglider/errors.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/odd_cycle.hpp"
#include "paraglider/patterns.hpp"

namespace paraglider {

inline int mod5(int i) { return ((i % 5) + 5) % 5; }

// Partition of a class member around an induced C5: S0 = {v1..v5} (stored as
// c5[0..4]), A[i] = vertices seeing exactly v_i on the cycle, B[i] = vertices
// seeing exactly {v_{i-1}, v_{i+1}}, S2 = vertices at distance two from S0.
struct Decomposition {
  Graph h;
  std::array<int, 5> c5{};
  std::array<VertexSet, 5> A{};
  std::array<VertexSet, 5> B{};
  VertexSet S2;

  VertexSet s0() const {
    VertexSet s;
    for (int v : c5) s.set(v);
    return s;
  }
  VertexSet all_a() const {
    VertexSet s;
    for (const auto& a : A) s |= a;
    return s;
  }
  VertexSet all_b() const {
    VertexSet s;
    for (const auto& b : B) s |= b;
    return s;
  }
  int h_a() const {
    int k = 0;
    for (const auto& a : A) k += a.empty() ? 0 : 1;
    return k;
  }
  int h_b() const {
    int k = 0;
    for (const auto& b : B) k += b.empty() ? 0 : 1;
    return k;
  }

  // One of the ten dihedral re-indexings of the same root cycle.
  Decomposition reindexed(int rotation, bool reflected) const {
    Decomposition d;
    d.h = h;
    d.S2 = S2;
    for (int k = 0; k < 5; ++k) {
      int src = reflected ? mod5(rotation - k) : mod5(rotation + k);
      d.c5[static_cast<std::size_t>(k)] = c5[static_cast<std::size_t>(src)];
      d.A[static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(src)];
      d.B[static_cast<std::size_t>(k)] = B[static_cast<std::size_t>(src)];
    }
    return d;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "c5:";
    for (int v : c5) out << " " << v;
    out << "\n";
    auto line = [&](const std::string& tag, const VertexSet& s) {
      out << tag << ":";
      for (int v = s.first(); v != -1; v = s.next(v)) out << " " << v;
      out << "\n";
    };
    for (int i = 0; i < 5; ++i) line("A" + std::to_string(i + 1), A[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 5; ++i) line("B" + std::to_string(i + 1), B[static_cast<std::size_t>(i)]);
    line("S2", S2);
    out << "h_A: " << h_a() << "\nh_B: " << h_b() << "\n";
    return out.str();
  }
};

// Decompose around a given induced C5 (vertices in cycle order).
inline Decomposition decompose_at(const Graph& h, const std::array<int, 5>& cycle) {
  for (int k = 0; k < 5; ++k) {
    for (int l = k + 1; l < 5; ++l) {
      bool ring = l == k + 1 || (k == 0 && l == 4);
      if (h.has_edge(cycle[static_cast<std::size_t>(k)], cycle[static_cast<std::size_t>(l)]) !=
          ring)
        throw MalformedStructureError("provided cycle is not an induced C5");
    }
  }
  Decomposition d;
  d.h = h;
  d.c5 = cycle;
  VertexSet s0 = d.s0();
  VertexSet s1;
  VertexSet rest = h.vertices() - s0;
  for (int x = rest.first(); x != -1; x = rest.next(x)) {
    VertexSet t = h.neighbors(x) & s0;
    int tc = t.count();
    if (tc == 0) continue;  // distance >= 2, sorted below
    s1.set(x);
    if (tc == 1) {
      for (int i = 0; i < 5; ++i)
        if (t.test(d.c5[static_cast<std::size_t>(i)])) d.A[static_cast<std::size_t>(i)].set(x);
      continue;
    }
    if (tc == 2) {
      int placed = -1;
      for (int i = 0; i < 5; ++i) {
        VertexSet pair;
        pair.set(d.c5[static_cast<std::size_t>(mod5(i - 1))]);
        pair.set(d.c5[static_cast<std::size_t>(mod5(i + 1))]);
        if (t == pair) {
          d.B[static_cast<std::size_t>(i)].set(x);
          placed = i;
          break;
        }
      }
      if (placed >= 0) continue;
    }
    throw MalformedStructureError("vertex " + std::to_string(x) +
                                  " has an impossible neighborhood on the root cycle");
  }
  // Everything else must sit at distance exactly two.
  VertexSet reach = s0 | s1;
  VertexSet d2;
  for (int x = s1.first(); x != -1; x = s1.next(x)) d2 |= h.neighbors(x);
  d2 -= reach;
  VertexSet far = h.vertices() - reach - d2;
  if (!far.empty())
    throw MalformedStructureError("vertex " + std::to_string(far.first()) +
                                  " is at distance three or more from the root cycle");
  d.S2 = d2;
  return d;
}

// Canonical decomposition: root at the deterministic shortest odd cycle.
inline Decomposition decompose(const Graph& h) {
  ClassCheck chk = check_class_H(h);
  if (!chk.ok)
    throw NotInClassError(chk.predicate, chk.witness,
                          "not a class member: " + chk.predicate + " fails");
  auto cyc = shortest_odd_cycle(h);
  if (!cyc || cyc->size() != 5)
    throw MalformedStructureError("class member without an induced C5");
  std::array<int, 5> cycle{};
  for (int k = 0; k < 5; ++k) cycle[static_cast<std::size_t>(k)] = (*cyc)[static_cast<std::size_t>(k)];
  return decompose_at(h, cycle);
}

// All induced C5s, each normalized (smallest vertex first, smaller neighbor
// second). Enumeration is capped defensively.
inline std::vector<std::array<int, 5>> all_c5s(const Graph& h, std::size_t cap = 200000) {
  std::vector<std::array<int, 5>> out;
  const int n = h.n();
  for (int v0 = 0; v0 < n; ++v0) {
    const VertexSet& n0 = h.neighbors(v0);
    for (int v1 = n0.first(); v1 != -1; v1 = n0.next(v1)) {
      if (v1 <= v0) continue;
      for (int v2 = h.neighbors(v1).first(); v2 != -1; v2 = h.neighbors(v1).next(v2)) {
        if (v2 <= v0 || v2 == v1 || h.has_edge(v0, v2)) continue;
        for (int v3 = h.neighbors(v2).first(); v3 != -1; v3 = h.neighbors(v2).next(v3)) {
          if (v3 <= v0 || v3 == v1 || h.has_edge(v0, v3) || h.has_edge(v1, v3)) continue;
          VertexSet closing = h.neighbors(v3) & h.neighbors(v0);
          for (int v4 = closing.first(); v4 != -1; v4 = closing.next(v4)) {
            if (v4 <= v0 || v4 == v1 || v4 == v2 || h.has_edge(v1, v4) || h.has_edge(v2, v4))
              continue;
            if (v1 > v4) continue;  // one direction per cycle
            out.push_back({v0, v1, v2, v3, v4});
            if (out.size() >= cap) return out;
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure validation

enum class PropertyStatus { Holds, Violated, PreconditionNotMet };

struct PropertyResult {
  std::string name;
  PropertyStatus status = PropertyStatus::Holds;
  std::string detail;
  std::vector<int> witness;
};

struct StructureReport {
  std::vector<PropertyResult> results;

  bool all_ok() const {
    for (const auto& r : results)
      if (r.status == PropertyStatus::Violated) return false;
    return true;
  }

  const PropertyResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& r : results) {
      out << r.name << ": ";
      switch (r.status) {
        case PropertyStatus::Holds: out << "holds"; break;
        case PropertyStatus::Violated: out << "VIOLATED"; break;
        case PropertyStatus::PreconditionNotMet: out << "precondition not met"; break;
      }
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      if (!r.witness.empty()) {
        out << " witness:";
        for (int v : r.witness) out << " " << v;
      }
      out << "\n";
    }
    return out.str();
  }
};

namespace detail {

inline std::optional<std::pair<int, int>> edge_between(const Graph& h, const VertexSet& x,
                                                       const VertexSet& y) {
  for (int u = x.first(); u != -1; u = x.next(u)) {
    VertexSet hit = h.neighbors(u) & y;
    if (!hit.empty()) return std::make_pair(u, hit.first());
  }
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> missing_between(const Graph& h, const VertexSet& x,
                                                          const VertexSet& y) {
  for (int u = x.first(); u != -1; u = x.next(u)) {
    VertexSet miss = y - h.neighbors(u);
    miss.reset(u);
    if (!miss.empty()) return std::make_pair(u, miss.first());
  }
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> edge_inside(const Graph& h, const VertexSet& x) {
  for (int u = x.first(); u != -1; u = x.next(u)) {
    VertexSet hit = h.neighbors(u) & x;
    int w = hit.next(u);
    if (w != -1) return std::make_pair(u, w);
    if (!hit.empty() && hit.first() < u) return std::make_pair(hit.first(), u);
  }
  return std::nullopt;
}

struct PropertyBuilder {
  PropertyResult r;
  bool pre_met = false;

  explicit PropertyBuilder(std::string name) { r.name = std::move(name); }

  void precondition_met() { pre_met = true; }

  void violate(const std::string& detail, std::vector<int> wit) {
    if (r.status == PropertyStatus::Violated) return;
    r.status = PropertyStatus::Violated;
    r.detail = detail;
    r.witness = std::move(wit);
  }

  PropertyResult finish(bool conditional) {
    if (r.status != PropertyStatus::Violated && conditional && !pre_met)
      r.status = PropertyStatus::PreconditionNotMet;
    return r;
  }
};

}  // namespace detail

// Check every structural property the decomposition of a class member must
// satisfy. Violations carry witnesses; conditional properties whose
// precondition never fires report that instead.
inline StructureReport validate_structure(const Decomposition& d) {
  const Graph& h = d.h;
  StructureReport rep;
  auto A = [&](int i) -> const VertexSet& { return d.A[static_cast<std::size_t>(mod5(i))]; };
  auto B = [&](int i) -> const VertexSet& { return d.B[static_cast<std::size_t>(mod5(i))]; };
  const int hA = d.h_a(), hB = d.h_b();
  const VertexSet allB = d.all_b();

  {
    detail::PropertyBuilder p("P1");
    for (int i = 0; i < 5; ++i)
      if (A(i).count() > 1)
        p.violate("|A" + std::to_string(i + 1) + "| > 1", A(i).to_vector());
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P2");
    for (int i = 0; i < 5; ++i)
      if (auto e = detail::edge_inside(h, B(i)))
        p.violate("edge inside B" + std::to_string(i + 1), {e->first, e->second});
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P3");
    for (int i = 0; i < 5; ++i) {
      if (auto e = detail::edge_between(h, A(i), A(i + 1)))
        p.violate("edge between consecutive A-sets", {e->first, e->second});
      if (!A(i).empty() && !A(i + 2).empty())
        if (auto m = detail::missing_between(h, A(i), A(i + 2)))
          p.violate("missing edge between A-sets at distance two", {m->first, m->second});
    }
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P4");
    for (int i = 0; i < 5; ++i) {
      if (auto e = detail::edge_between(h, A(i), B(i)))
        p.violate("edge between A_i and B_i", {e->first, e->second});
      if (!A(i).empty()) {
        if (auto m = detail::missing_between(h, A(i), B(i - 2)))
          p.violate("missing edge between A_i and B_{i-2}", {m->first, m->second});
        if (auto m = detail::missing_between(h, A(i), B(i + 2)))
          p.violate("missing edge between A_i and B_{i+2}", {m->first, m->second});
      }
    }
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P5");
    for (int i = 0; i < 5; ++i)
      for (int off : {-1, 1})
        if (auto e = detail::edge_between(h, A(i), B(i + off)))
          p.violate("edge between A_i and B_{i" + std::string(off < 0 ? "-1" : "+1") + "}",
                    {e->first, e->second});
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P6");
    for (int i = 0; i < 5; ++i)
      if (auto e = detail::edge_between(h, B(i), B(i + 2)))
        p.violate("edge between B-sets at distance two", {e->first, e->second});
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P7");
    for (int i = 0; i < 5; ++i)
      for (int off : {-1, 1}) {
        const VertexSet& bj = B(i + off);
        for (int b = B(i).first(); b != -1; b = B(i).next(b))
          if ((h.neighbors(b) & bj).count() < bj.count() - 1)
            p.violate("B-vertex misses two of a consecutive B-set", {b});
      }
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P8");
    for (int i = 0; i < 5; ++i) {
      if (A(i).empty()) continue;
      p.precondition_met();
      if (auto e = detail::edge_between(h, B(i - 2), B(i + 2)))
        p.violate("A_i nonempty but B_{i-2} meets B_{i+2}", {e->first, e->second});
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P9");
    if (auto e = detail::edge_inside(h, d.S2)) p.violate("edge inside S2", {e->first, e->second});
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P10");
    for (int i = 0; i < 5; ++i)
      if (auto e = detail::edge_between(h, A(i), d.S2))
        p.violate("edge between an A-set and S2", {e->first, e->second});
    rep.results.push_back(p.finish(false));
  }
  {
    detail::PropertyBuilder p("P11");
    for (int z = d.S2.first(); z != -1; z = d.S2.next(z))
      for (int i = 0; i < 5; ++i)
        if ((h.neighbors(z) & B(i)).count() > 1)
          p.violate("S2 vertex with two neighbors in one B-set", {z});
    for (int y = allB.first(); y != -1; y = allB.next(y))
      if ((h.neighbors(y) & d.S2).count() > 1)
        p.violate("B-vertex with two neighbors in S2", {y});
    if (allB.count() < d.S2.count()) p.violate("S2 larger than all B-sets combined", {});
    rep.results.push_back(p.finish(false));
  }

  // Small-structure conclusions shared by several of the conditional properties.
  auto all_b_singletons = [&](detail::PropertyBuilder& p) {
    for (int j = 0; j < 5; ++j)
      if (B(j).count() > 1)
        p.violate("|B" + std::to_string(j + 1) + "| > 1", B(j).to_vector());
  };
  auto union_b_independent = [&](detail::PropertyBuilder& p) {
    if (auto e = detail::edge_inside(h, allB))
      p.violate("union of B-sets not independent", {e->first, e->second});
  };
  auto s2_complete_to_b = [&](detail::PropertyBuilder& p) {
    if (auto m = detail::missing_between(h, d.S2, allB))
      p.violate("S2 vertex missing a B-vertex", {m->first, m->second});
  };

  {
    detail::PropertyBuilder p("P12");
    if (!d.S2.empty()) {
      for (int i = 0; i < 5; ++i) {
        if (B(i).empty() || B(i + 2).empty()) continue;
        if (!detail::edge_between(h, B(i) | B(i + 2), d.S2)) continue;
        p.precondition_met();
        if (B(i).count() != 1 || B(i + 2).count() != 1) {
          p.violate("B-sets at distance two not singletons", (B(i) | B(i + 2)).to_vector());
          continue;
        }
        VertexSet zi = h.neighbors(B(i).first()) & d.S2;
        VertexSet zk = h.neighbors(B(i + 2).first()) & d.S2;
        if (zi.count() != 1 || zi != zk)
          p.violate("no common unique S2 neighbor", {B(i).first(), B(i + 2).first()});
      }
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P13");
    if (!d.S2.empty()) {
      for (int i = 0; i < 5; ++i)
        for (int bi = B(i).first(); bi != -1; bi = B(i).next(bi))
          for (int bj = B(i + 1).first(); bj != -1; bj = B(i + 1).next(bj)) {
            if (h.has_edge(bi, bj)) continue;
            p.precondition_met();
            VertexSet zi = h.neighbors(bi) & d.S2;
            VertexSet zj = h.neighbors(bj) & d.S2;
            bool both_clear = zi.empty() && zj.empty();
            bool common = zi.count() == 1 && zi == zj;
            if (!both_clear && !common)
              p.violate("nonadjacent consecutive B-pair with mismatched S2 neighborhoods",
                        {bi, bj});
          }
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P14");
    if (!d.S2.empty()) {
      bool fires = false;
      for (int i = 0; i < 5 && !fires; ++i) {
        if (hB == 2 && !B(i).empty() && !B(i + 2).empty()) fires = true;
        if (!B(i - 1).empty() && !B(i).empty() && !B(i + 2).empty()) fires = true;
      }
      if (fires) {
        p.precondition_met();
        all_b_singletons(p);
        union_b_independent(p);
        if (d.S2.count() != 1) p.violate("S2 is not a single vertex", d.S2.to_vector());
        s2_complete_to_b(p);
      }
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P15");
    bool fires = false;
    for (int i = 0; i < 5 && !fires; ++i) {
      if (hB == 2 && !B(i - 1).empty() && !B(i).empty() &&
          !detail::edge_between(h, B(i - 1), B(i)))
        fires = true;
      if (!B(i - 1).empty() && !B(i).empty() && !B(i + 1).empty() &&
          (!detail::edge_between(h, B(i - 1), B(i)) || !detail::edge_between(h, B(i), B(i + 1))))
        fires = true;
    }
    if (fires) {
      p.precondition_met();
      all_b_singletons(p);
      union_b_independent(p);
      if (d.S2.count() > 1) p.violate("|S2| > 1", d.S2.to_vector());
      s2_complete_to_b(p);
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P16");
    for (int i = 0; i < 5; ++i) {
      if (B(i).empty() || B(i + 2).empty()) continue;
      bool side = !A(i).empty() || !A(i + 2).empty();
      bool back = !A(i - 2).empty() && !A(i - 1).empty();
      if (!side && !back) continue;
      p.precondition_met();
      if (B(i).count() != 1 || B(i + 2).count() != 1)
        p.violate("B-sets at distance two not singletons despite A-support",
                  (B(i) | B(i + 2)).to_vector());
    }
    rep.results.push_back(p.finish(true));
  }
  {
    detail::PropertyBuilder p("P17");
    bool fires = false;
    if (hB == 2 && hA >= 3)
      for (int i = 0; i < 5; ++i)
        if (!B(i).empty() && !B(i + 2).empty()) fires = true;
    if (hB == 3)
      for (int i = 0; i < 5; ++i)
        if (!B(i - 2).empty() && !B(i).empty() && !B(i + 2).empty() &&
            !(A(i - 2) | A(i) | A(i + 2)).empty())
          fires = true;
    if (hB >= 4 && hA >= 1) fires = true;
    if (fires) {
      p.precondition_met();
      all_b_singletons(p);
      union_b_independent(p);
      if (d.S2.count() > 1) p.violate("|S2| > 1", d.S2.to_vector());
      s2_complete_to_b(p);
    }
    rep.results.push_back(p.finish(true));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification

enum class ClassLabel { B1, B2, Other };

inline std::string class_label_name(ClassLabel c) {
  switch (c) {
    case ClassLabel::B1: return "B1";
    case ClassLabel::B2: return "B2";
    case ClassLabel::Other: return "other";
  }
  return "?";
}

struct Classification {
  ClassLabel label = ClassLabel::Other;
  int i = -1;  // base index of the consecutive nonempty pair (B1 only)
  std::vector<std::pair<int, int>> missing;  // M: missing pairs inside [L_i, L_{i+1}]
  int deficiency_i = 0;                      // |B_i \ N(S2)|
  int deficiency_i1 = 0;                     // |B_{i+1} \ N(S2)|
  std::string detail;
};

inline Classification classify(const Decomposition& d) {
  const Graph& h = d.h;
  auto A = [&](int i) -> const VertexSet& { return d.A[static_cast<std::size_t>(mod5(i))]; };
  auto B = [&](int i) -> const VertexSet& { return d.B[static_cast<std::size_t>(mod5(i))]; };
  Classification c;

  VertexSet n_s2;
  for (int z = d.S2.first(); z != -1; z = d.S2.next(z)) n_s2 |= h.neighbors(z);

  if (d.h_b() == 2 && !d.S2.empty()) {
    for (int i = 0; i < 5; ++i) {
      if (B(i).empty() || B(i + 1).empty()) continue;
      if (!detail::edge_between(h, B(i), B(i + 1))) continue;
      if (!A(i - 2).empty()) continue;
      VertexSet li = B(i) & n_s2, lj = B(i + 1) & n_s2;
      std::vector<std::pair<int, int>> missing;
      for (int x = li.first(); x != -1; x = li.next(x)) {
        VertexSet miss = lj - h.neighbors(x);
        for (int y = miss.first(); y != -1; y = miss.next(y)) missing.emplace_back(x, y);
      }
      if (missing.empty()) continue;
      int ri = (B(i) - n_s2).count();
      int rj = (B(i + 1) - n_s2).count();
      if (std::abs(ri - rj) >= static_cast<int>(missing.size())) continue;
      c.label = ClassLabel::B1;
      c.i = i;
      c.missing = std::move(missing);
      c.deficiency_i = ri;
      c.deficiency_i1 = rj;
      c.detail = "B" + std::to_string(i + 1) + ",B" + std::to_string(mod5(i + 1) + 1) +
                 " joined, |M|=" + std::to_string(c.missing.size());
      return c;
    }
  }

  if (d.S2.empty() && d.h_a() == 0 && d.h_b() == 5) {
    bool all_joined = true;
    for (int j = 0; j < 5; ++j)
      if (!detail::edge_between(h, B(j), B(j + 1))) all_joined = false;
    if (all_joined) {
      c.label = ClassLabel::B2;
      c.detail = "five nonempty B-sets, consecutive pairs joined";
      return c;
    }
  }

  c.detail = "neither exceptional shape";
  return c;
}

}  // namespace paraglider
