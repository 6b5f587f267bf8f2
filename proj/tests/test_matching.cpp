#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "oracles.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/matching.hpp"

using namespace paraglider;

namespace {

void require_valid(const Graph& g, const Matching& m) {
  VertexSet covered;
  for (const auto& [u, v] : m.edges) {
    REQUIRE(u < v);
    REQUIRE(g.has_edge(u, v));
    REQUIRE_FALSE(covered.contains(u));
    REQUIRE_FALSE(covered.contains(v));
    covered.set(u);
    covered.set(v);
    REQUIRE(m.mate(u) == v);
    REQUIRE(m.mate(v) == u);
  }
  REQUIRE(covered == m.covered);
}

}  // namespace

TEST_CASE("matching on fixtures") {
  REQUIRE(max_matching(Graph(0)).size() == 0);
  REQUIRE(max_matching(Graph(3)).size() == 0);

  Graph edge(2);
  edge.add_edge(0, 1);
  Matching m = max_matching(edge);
  REQUIRE(m.size() == 1);
  require_valid(edge, m);
  REQUIRE(m.mate(0) == 1);

  REQUIRE(max_matching(oracle::path(4)).size() == 2);
  REQUIRE(max_matching(oracle::cycle(5)).size() == 2);
  REQUIRE(max_matching(oracle::cycle(7)).size() == 3);
  REQUIRE(max_matching(oracle::complete(4)).size() == 2);
  REQUIRE(max_matching(oracle::petersen()).size() == 5);

  Graph star(5);
  for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  REQUIRE(max_matching(star).size() == 1);
}

TEST_CASE("matching needs blossom contraction") {
  // Two triangles joined by a bridge: the answer needs an odd component flip.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  Matching m = max_matching(g);
  REQUIRE(m.size() == 3);
  require_valid(g, m);
}

TEST_CASE("matching agrees with the exhaustive oracle") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    int n = 2 + static_cast<int>(seed % 9);
    int density = 25 + 25 * static_cast<int>(seed % 3);
    Graph g = oracle::random_graph(n, seed * 977, density);
    Matching m = max_matching(g);
    require_valid(g, m);
    REQUIRE(m.size() == oracle::matching_size(g));
  }
}

TEST_CASE("unmatched vertices have no mate") {
  Matching m = max_matching(oracle::path(3));
  REQUIRE(m.size() == 1);
  for (int v = 0; v < 3; ++v)
    if (!m.covered.contains(v)) REQUIRE(m.mate(v) == -1);
}
