#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paraglider/errors.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/odd_cycle.hpp"

using namespace paraglider;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("vertex set basics") {
  VertexSet s;
  REQUIRE(s.empty());
  REQUIRE(s.count() == 0);
  REQUIRE(s.first() == -1);
  s.set(3);
  s.set(100);
  s.set(127);
  REQUIRE(s.count() == 3);
  REQUIRE(s.contains(100));
  REQUIRE_FALSE(s.contains(99));
  s.reset(100);
  REQUIRE(s.to_vector() == std::vector<int>{3, 127});
  std::vector<int> seen;
  for (int v = s.first(); v != -1; v = s.next(v)) seen.push_back(v);
  REQUIRE(seen == std::vector<int>{3, 127});
}

TEST_CASE("vertex set algebra") {
  VertexSet a = VertexSet::universe(5);
  VertexSet b;
  b.set(2);
  b.set(4);
  b.set(6);
  REQUIRE((a & b).to_vector() == std::vector<int>{2, 4});
  REQUIRE((a | b).count() == 6);
  REQUIRE((a - b).to_vector() == std::vector<int>{0, 1, 3});
  REQUIRE(a.intersects(b));
  VertexSet c;
  c.set(9);
  REQUIRE_FALSE(a.intersects(c));
  REQUIRE(((a | b) - b) == (a - b));
}

TEST_CASE("graph basics and complement") {
  Graph g = oracle::cycle(5);
  REQUIRE(g.n() == 5);
  REQUIRE(g.edge_count() == 5);
  REQUIRE(g.has_edge(0, 4));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE(g.degree(2) == 2);
  Graph c = g.complement();
  REQUIRE(c.edge_count() == 5);
  REQUIRE(c.has_edge(0, 2));
  REQUIRE_FALSE(c.has_edge(0, 1));
  REQUIRE(c.complement().edges() == g.edges());
}

TEST_CASE("induced subgraph keeps an id map") {
  Graph g = oracle::path(6);
  VertexSet s;
  s.set(1);
  s.set(3);
  s.set(4);
  std::vector<int> ids;
  Graph h = g.induced(s, &ids);
  REQUIRE(h.n() == 3);
  REQUIRE(ids == std::vector<int>{1, 3, 4});
  REQUIRE(h.edge_count() == 1);
  REQUIRE(h.has_edge(1, 2));
}

TEST_CASE("components") {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  auto comps = g.components();
  REQUIRE(comps.size() == 4);
  std::vector<std::vector<int>> got;
  for (const auto& c : comps) got.push_back(c.to_vector());
  std::sort(got.begin(), got.end());
  std::vector<std::vector<int>> want = {{0, 1, 2}, {3, 4}, {5}, {6}};
  std::sort(want.begin(), want.end());
  REQUIRE(got == want);
}

TEST_CASE("graph file round trip is canonical") {
  std::string text = "# five cycle\n\n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
  Graph g = parse_graph(text);
  std::string canon = emit_graph(g);
  REQUIRE(canon == "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  REQUIRE(emit_graph(parse_graph(canon)) == canon);
}

TEST_CASE("random graphs round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = oracle::random_graph(1 + static_cast<int>(seed % 9), seed);
    std::string once = emit_graph(g);
    REQUIRE(emit_graph(parse_graph(once)) == once);
  }
}

TEST_CASE("parse errors carry line numbers") {
  REQUIRE_THROWS_AS(parse_graph(""), ParseError);
  REQUIRE_THROWS_AS(parse_graph("x\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph("2 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph("3\n0 5\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph("3\n0 1\n0 1\n"), ParseError);
  try {
    parse_graph("# header\n3\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 3);
    REQUIRE_THAT(std::string(e.what()), ContainsSubstring("u < v"));
  }
  REQUIRE_THROWS_AS(parse_graph("5\n", 4), ParseError);
  REQUIRE_NOTHROW(parse_graph("4\n", 4));
}

TEST_CASE("shortest odd cycle on fixtures") {
  auto c5 = shortest_odd_cycle(oracle::cycle(5));
  REQUIRE(c5.has_value());
  REQUIRE(c5->size() == 5);

  REQUIRE_FALSE(shortest_odd_cycle(oracle::path(4)).has_value());
  REQUIRE(is_bipartite(oracle::path(4)));
  REQUIRE_FALSE(is_bipartite(oracle::cycle(7)));

  Graph g = oracle::cycle(7);
  g.add_edge(0, 2);
  auto tri = shortest_odd_cycle(g);
  REQUIRE(tri.has_value());
  REQUIRE(tri->size() == 3);
  REQUIRE(std::vector<int>(*tri) == std::vector<int>{0, 1, 2});
}

TEST_CASE("odd cycle search agrees with the double-cover oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    Graph g = oracle::random_graph(n, seed, 40);
    auto cyc = shortest_odd_cycle(g);
    int len = oracle::shortest_odd_cycle_length(g);
    if (len == -1) {
      REQUIRE_FALSE(cyc.has_value());
      continue;
    }
    REQUIRE(cyc.has_value());
    REQUIRE(static_cast<int>(cyc->size()) == len);
    REQUIRE(cyc->size() % 2 == 1);
    std::vector<int> sorted = *cyc;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t i = 0; i < cyc->size(); ++i)
      REQUIRE(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
  }
}
