#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "oracles.hpp"
#include "paraglider/errors.hpp"
#include "paraglider/exact.hpp"
#include "paraglider/matching.hpp"

using namespace paraglider;

TEST_CASE("clique, independence, chromatic numbers on fixtures") {
  Graph c5 = oracle::cycle(5);
  REQUIRE(brute_omega(c5) == 2);
  REQUIRE(brute_alpha(c5) == 2);
  REQUIRE(brute_chi(c5) == 3);

  Graph k5 = oracle::complete(5);
  REQUIRE(brute_omega(k5) == 5);
  REQUIRE(brute_alpha(k5) == 1);
  REQUIRE(brute_chi(k5) == 5);

  Graph pet = oracle::petersen();
  REQUIRE(brute_omega(pet) == 2);
  REQUIRE(brute_alpha(pet) == 4);
  REQUIRE(brute_chi(pet) == 3);

  Graph c7bar = oracle::cycle(7).complement();
  REQUIRE(brute_omega(c7bar) == 3);
  REQUIRE(brute_alpha(c7bar) == 2);
  REQUIRE(brute_chi(c7bar) == 4);
}

TEST_CASE("witnesses are genuine") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Graph g = oracle::random_graph(2 + static_cast<int>(seed % 8), seed * 311, 50);
    auto clique = brute_omega_witness(g);
    REQUIRE(oracle::is_clique(g, clique));
    REQUIRE(static_cast<int>(clique.size()) == brute_omega(g));
    auto ind = brute_alpha_witness(g);
    REQUIRE(oracle::is_independent(g, ind));
    auto [k, coloring] = brute_chi_witness(g);
    REQUIRE(oracle::proper_coloring(g, coloring));
    for (int c : coloring) REQUIRE(c < k);
    REQUIRE(k >= static_cast<int>(clique.size()));
    REQUIRE(static_cast<std::int64_t>(k) * brute_alpha(g) >= g.n());
  }
}

TEST_CASE("size guards name the invariant and the cap") {
  try {
    brute_omega(Graph(41));
    FAIL("expected a size guard");
  } catch (const SizeExceededError& e) {
    REQUIRE(e.invariant == "omega");
    REQUIRE(e.n == 41);
    REQUIRE(e.cap == 40);
  }
  REQUIRE_THROWS_AS(brute_alpha(Graph(41)), SizeExceededError);
  REQUIRE_THROWS_AS(brute_chi(Graph(17)), SizeExceededError);
  REQUIRE_THROWS_AS(brute_theta(Graph(17)), SizeExceededError);
  REQUIRE_NOTHROW(brute_omega(Graph(40)));
  REQUIRE_NOTHROW(brute_chi(Graph(16)));
}

TEST_CASE("triangle-free cover identity on fixtures") {
  auto c5 = theta_triangle_free(oracle::cycle(5));
  REQUIRE(c5.theta == 3);
  REQUIRE(c5.matching.size() == 2);
  REQUIRE(static_cast<int>(c5.cover.parts.size()) == 3);

  REQUIRE(theta_triangle_free(oracle::cycle(7)).theta == 4);

  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  REQUIRE(theta_triangle_free(k33).theta == 3);

  Graph star(6);
  for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
  REQUIRE(theta_triangle_free(star).theta == 5);

  REQUIRE(theta_triangle_free(Graph(4)).theta == 4);
}

TEST_CASE("triangle-free cover rejects triangles with a witness") {
  Graph g = oracle::complete(3);
  try {
    theta_triangle_free(g);
    FAIL("expected a class violation");
  } catch (const ClassViolationError& e) {
    REQUIRE(e.pattern == "K3");
    REQUIRE(e.witness.size() == 3);
    REQUIRE(oracle::is_clique(g, e.witness));
  }
}

TEST_CASE("cover identity matches brute force on random triangle-free graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    int n = 2 + static_cast<int>(seed % 8);
    Graph g = oracle::random_graph(n, seed * 733, 35);
    // Delete one edge of every triangle until none remain.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (!common.empty()) {
          Graph pruned(g.n());
          for (const auto& [a, b] : g.edges())
            if (!(a == u && b == v)) pruned.add_edge(a, b);
          g = pruned;
          changed = true;
          break;
        }
      }
    }
    auto tf = theta_triangle_free(g);
    REQUIRE(tf.theta == g.n() - max_matching(g).size());
    REQUIRE(tf.theta == brute_theta(g));
    validate_cover(g, tf.cover);
  }
}

TEST_CASE("invariant bundle is consistent") {
  Graph g = oracle::cycle(7).complement();
  auto rep = brute_invariants(g);
  REQUIRE(rep.omega == 3);
  REQUIRE(rep.alpha == 2);
  REQUIRE(rep.chi == 4);
  REQUIRE(rep.theta == 3);
  REQUIRE(oracle::is_clique(g, rep.clique));
  REQUIRE(oracle::is_independent(g, rep.independent_set));
  REQUIRE(oracle::proper_coloring(g, rep.coloring));
}
