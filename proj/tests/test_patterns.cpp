#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paraglider/patterns.hpp"
#include "paraglider/selftest.hpp"

using namespace paraglider;

TEST_CASE("pattern gallery shapes are frozen") {
  const std::map<Pattern, std::pair<int, int>> expected = {
      {Pattern::K3, {3, 3}},         {Pattern::ThreeK1, {3, 0}},
      {Pattern::TwoK2, {4, 2}},      {Pattern::P2P3, {5, 3}},
      {Pattern::C4, {4, 4}},         {Pattern::C5, {5, 5}},
      {Pattern::C7, {7, 7}},         {Pattern::Claw, {4, 3}},
      {Pattern::Paraglider, {5, 7}}, {Pattern::House, {5, 6}},
      {Pattern::W4, {5, 8}},         {Pattern::Kite, {5, 7}},
      {Pattern::Hammer, {5, 5}},     {Pattern::Butterfly, {5, 6}},
      {Pattern::K1PlusP4, {5, 7}},   {Pattern::K1UnionK4, {5, 6}},
      {Pattern::K5, {5, 10}}};
  REQUIRE(kAllPatterns.size() == expected.size());
  for (Pattern p : kAllPatterns) {
    const Graph& g = pattern_graph(p);
    auto [n, m] = expected.at(p);
    INFO(pattern_name(p));
    REQUIRE(g.n() == n);
    REQUIRE(g.edge_count() == m);
    REQUIRE_FALSE(pattern_name(p).empty());
  }
  // Spot checks on degree sequences that pin the shape, not just the size.
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  REQUIRE(degrees(pattern_graph(Pattern::Paraglider)) == std::vector<int>{2, 3, 3, 3, 3});
  REQUIRE(degrees(pattern_graph(Pattern::House)) == std::vector<int>{2, 2, 2, 3, 3});
  REQUIRE(degrees(pattern_graph(Pattern::Kite)) == std::vector<int>{1, 3, 3, 3, 4});
  REQUIRE(degrees(pattern_graph(Pattern::Butterfly)) == std::vector<int>{2, 2, 2, 2, 4});
  REQUIRE(degrees(pattern_graph(Pattern::Hammer)) == std::vector<int>{1, 2, 2, 2, 3});
}

TEST_CASE("induced search on fixtures") {
  Graph c5 = oracle::cycle(5);
  REQUIRE(has_induced(Pattern::C5, c5).has_value());
  REQUIRE_FALSE(has_induced(Pattern::K3, c5).has_value());
  REQUIRE_FALSE(has_induced(Pattern::C4, c5).has_value());
  REQUIRE_FALSE(has_induced(Pattern::TwoK2, c5).has_value());
  REQUIRE_FALSE(has_induced(Pattern::P2P3, c5).has_value());

  const Graph& para = pattern_graph(Pattern::Paraglider);
  REQUIRE(has_induced(Pattern::Paraglider, para).has_value());
  REQUIRE(has_induced(Pattern::C4, para).has_value());
  REQUIRE(has_induced(Pattern::K3, para).has_value());
  REQUIRE_FALSE(has_induced(Pattern::Claw, para).has_value());
  REQUIRE_FALSE(has_induced(Pattern::House, para).has_value());

  const Graph& house = pattern_graph(Pattern::House);
  REQUIRE(has_induced(Pattern::House, house).has_value());
  REQUIRE(has_induced(Pattern::C4, house).has_value());
  REQUIRE_FALSE(has_induced(Pattern::Paraglider, house).has_value());

  // C7 contains P2+P3 but no C5.
  Graph c7 = oracle::cycle(7);
  REQUIRE(has_induced(Pattern::P2P3, c7).has_value());
  REQUIRE(has_induced(Pattern::C7, c7).has_value());
  REQUIRE_FALSE(has_induced(Pattern::C5, c7).has_value());
}

TEST_CASE("induced search returns a genuine embedding") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph host = oracle::random_graph(7, seed * 31, 30 + static_cast<int>(seed % 5) * 10);
    for (Pattern p : kAllPatterns) {
      auto found = has_induced(p, host);
      if (found) REQUIRE(oracle::induces(pattern_graph(p), host, *found));
    }
  }
}

TEST_CASE("induced search agrees with subset enumeration on five vertices") {
  auto space = selftest::detail::make_space(5);
  for (Pattern p : kAllPatterns) {
    const Graph& pat = pattern_graph(p);
    if (pat.n() > 5) continue;
    auto bitmap = selftest::detail::pattern_mask_bitmap(p);
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      Graph host = selftest::detail::graph_of(space, mask);
      bool oracle_hit = selftest::detail::subset_oracle_present(space, mask, pat.n(), bitmap);
      REQUIRE(has_induced(p, host).has_value() == oracle_hit);
    }
  }
}

TEST_CASE("class membership predicates") {
  ClassCheck ok = check_class_H(oracle::cycle(5));
  REQUIRE(ok.ok);

  ClassCheck k3 = check_class_H(oracle::complete(3));
  REQUIRE_FALSE(k3.ok);
  REQUIRE(k3.predicate == "K3-free");
  REQUIRE(k3.witness.size() == 3);

  ClassCheck c7 = check_class_H(oracle::cycle(7));
  REQUIRE_FALSE(c7.ok);
  REQUIRE(c7.predicate == "P2+P3-free");
  REQUIRE(oracle::induces(pattern_graph(Pattern::P2P3), oracle::cycle(7), c7.witness));

  ClassCheck perfect = check_class_H(oracle::cycle(4));
  REQUIRE_FALSE(perfect.ok);
  REQUIRE(perfect.predicate == "imperfect");

  Graph two_k2(4);
  two_k2.add_edge(0, 1);
  two_k2.add_edge(2, 3);
  ClassCheck disco = check_class_H(two_k2);
  REQUIRE_FALSE(disco.ok);
  REQUIRE(disco.predicate == "connected");

  REQUIRE(in_class_H(oracle::cycle(5)));
  REQUIRE_FALSE(in_class_H(oracle::cycle(7)));
}

TEST_CASE("target class predicates") {
  REQUIRE(is_target_class(oracle::complete(5)));
  REQUIRE(is_target_class(oracle::cycle(5)));

  ClassCheck triple = check_target_class(Graph(3));
  REQUIRE_FALSE(triple.ok);
  REQUIRE(triple.predicate == "3K1-free");
  REQUIRE(oracle::is_independent(Graph(3), triple.witness));
  REQUIRE(triple.witness.size() == 3);

  ClassCheck para = check_target_class(pattern_graph(Pattern::Paraglider));
  REQUIRE_FALSE(para.ok);
  REQUIRE(para.predicate == "paraglider-free");
  REQUIRE(oracle::induces(pattern_graph(Pattern::Paraglider),
                          pattern_graph(Pattern::Paraglider), para.witness));
}

TEST_CASE("quasi-line recognition") {
  REQUIRE(is_quasi_line(oracle::cycle(5)));
  REQUIRE(is_quasi_line(oracle::complete(4)));
  REQUIRE(is_quasi_line(pattern_graph(Pattern::K1PlusP4)));
  REQUIRE(is_quasi_line(pattern_graph(Pattern::W4)));
  REQUIRE_FALSE(is_quasi_line(pattern_graph(Pattern::Claw)));
  Graph star(4);
  for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
  REQUIRE_FALSE(is_quasi_line(star));
}

TEST_CASE("isomorphism check") {
  REQUIRE(is_isomorphic(oracle::cycle(5), pattern_graph(Pattern::C5)));
  Graph relabeled(5);
  relabeled.add_edge(0, 2);
  relabeled.add_edge(2, 4);
  relabeled.add_edge(1, 4);
  relabeled.add_edge(1, 3);
  relabeled.add_edge(0, 3);
  REQUIRE(is_isomorphic(relabeled, oracle::cycle(5)));
  REQUIRE_FALSE(is_isomorphic(oracle::cycle(5), oracle::path(5)));
  REQUIRE_FALSE(is_isomorphic(pattern_graph(Pattern::Kite),
                              pattern_graph(Pattern::K1PlusP4)));
}
