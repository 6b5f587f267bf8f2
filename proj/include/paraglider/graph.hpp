#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paraglider/errors.hpp"

namespace paraglider {

inline constexpr int kMaxVertices = 128;

// Fixed-width set of vertex ids in [0, 128). Two machine words, value type.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  static VertexSet universe(int n) {
    VertexSet s;
    for (int w = 0; w < 2; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int k = n - lo >= 64 ? 64 : n - lo;
      s.w_[w] = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    }
    return s;
  }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  bool intersects(const VertexSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }
  bool contains(const VertexSet& o) const {
    return (o.w_[0] & ~w_[0]) == 0 && (o.w_[1] & ~w_[1]) == 0;
  }
  bool contains(int v) const { return test(v); }

  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // First element strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t masked = w_[w] & (~std::uint64_t{0} << (v & 63));
    if (masked) return w * 64 + std::countr_zero(masked);
    if (w == 0 && w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  std::uint64_t w_[2]{0, 0};
};

// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices)
      throw Error("vertex count out of range: " + std::to_string(n));
  }

  int n() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v)) throw Error("duplicate edge " + edge_name(u, v));
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].reset(v);
    adj_[static_cast<std::size_t>(v)].reset(u);
  }

  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  VertexSet vertices() const { return VertexSet::universe(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v))
        out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    Graph c(n_);
    VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
      VertexSet row = all - adj_[static_cast<std::size_t>(v)];
      row.reset(v);
      c.adj_[static_cast<std::size_t>(v)] = row;
    }
    return c;
  }

  // Subgraph induced by s; vertices are renumbered in increasing id order.
  // old_ids, when given, receives the original id of each new vertex.
  Graph induced(const VertexSet& s, std::vector<int>* old_ids = nullptr) const {
    std::vector<int> ids = s.to_vector();
    Graph h(static_cast<int>(ids.size()));
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        if (has_edge(ids[a], ids[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (old_ids) *old_ids = std::move(ids);
    return h;
  }

  // Connected components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int s = 0; s < n_; ++s) {
      if (seen.test(s)) continue;
      VertexSet comp = VertexSet::single(s);
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet grown;
        for (int v = frontier.first(); v != -1; v = frontier.next(v))
          grown |= adj_[static_cast<std::size_t>(v)];
        frontier = grown - comp;
        comp |= grown;
      }
      seen |= comp;
      out.push_back(comp);
    }
    return out;
  }

  bool is_connected() const { return n_ <= 1 || components().size() == 1; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw Error("vertex out of range in edge " + edge_name(u, v));
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  }
  static std::string edge_name(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Text format: first significant line is the vertex count, every following
// significant line is one edge "u v" with 0 <= u < v < n. Lines that are
// blank or start with '#' (after optional whitespace) are ignored.
inline Graph parse_graph(std::string_view text, int max_n = kMaxVertices) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_n = false;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    if (!have_n) {
      long n = -1;
      if (!(fields >> n)) throw ParseError(line_no, "expected vertex count");
      std::string rest;
      if (fields >> rest) throw ParseError(line_no, "trailing characters after vertex count");
      if (n < 0 || n > max_n)
        throw ParseError(line_no, "vertex count " + std::to_string(n) +
                                      " outside [0, " + std::to_string(max_n) + "]");
      g = Graph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    long u = -1, v = -1;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected edge \"u v\"");
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing characters after edge");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
      throw ParseError(line_no, "edge endpoint out of range");
    if (u >= v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(line_no, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_n) throw ParseError(line_no, "missing vertex count line");
  return g;
}

// Canonical form: count line, then edges sorted with u < v, LF line ends.
inline void emit_graph(const Graph& g, std::ostream& out) {
  out << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  emit_graph(g, out);
  return out.str();
}

}  // namespace paraglider
