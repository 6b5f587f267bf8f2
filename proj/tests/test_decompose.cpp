#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paraglider/decompose.hpp"
#include "paraglider/errors.hpp"
#include "paraglider/families.hpp"

using namespace paraglider;

namespace {

// Re-derive every bucket assignment from scratch: the base must induce a
// five-cycle and each remaining vertex must sit in the unique set matching
// its ring neighborhood.
void require_partition(const Decomposition& d) {
  const Graph& h = d.h;
  std::set<int> ring(d.c5.begin(), d.c5.end());
  REQUIRE(ring.size() == 5);
  for (int k = 0; k < 5; ++k) {
    REQUIRE(h.has_edge(d.c5[static_cast<std::size_t>(k)],
                       d.c5[static_cast<std::size_t>((k + 1) % 5)]));
    REQUIRE_FALSE(h.has_edge(d.c5[static_cast<std::size_t>(k)],
                             d.c5[static_cast<std::size_t>((k + 2) % 5)]));
  }
  int assigned = 5;
  for (int v = 0; v < h.n(); ++v) {
    if (ring.count(v)) continue;
    std::vector<int> hits;
    for (int k = 0; k < 5; ++k)
      if (h.has_edge(v, d.c5[static_cast<std::size_t>(k)])) hits.push_back(k);
    ++assigned;
    int in_a = -1, in_b = -1;
    bool in_s2 = d.S2.contains(v);
    for (int k = 0; k < 5; ++k) {
      if (d.A[static_cast<std::size_t>(k)].contains(v)) in_a = k;
      if (d.B[static_cast<std::size_t>(k)].contains(v)) in_b = k;
    }
    INFO("vertex " << v);
    int buckets = (in_a >= 0 ? 1 : 0) + (in_b >= 0 ? 1 : 0) + (in_s2 ? 1 : 0);
    REQUIRE(buckets == 1);
    if (hits.size() == 1) {
      REQUIRE(in_a == hits[0]);
    } else if (hits.empty()) {
      REQUIRE(in_s2);
    } else {
      REQUIRE(hits.size() == 2);
      REQUIRE(in_b >= 0);
      std::set<int> want{(in_b + 4) % 5, (in_b + 1) % 5};
      REQUIRE(std::set<int>(hits.begin(), hits.end()) == want);
    }
  }
  REQUIRE(assigned == h.n());
}

}  // namespace

TEST_CASE("decomposition of the named families") {
  for (const Graph& h :
       {oracle::cycle(5), make_bhat(2), make_ht(1), make_ht(2), make_hstar()}) {
    Decomposition d = decompose(h);
    require_partition(d);
    StructureReport rep = validate_structure(d);
    INFO(rep.to_text());
    REQUIRE(rep.all_ok());
  }
}

TEST_CASE("decomposition of random members, with relabellings") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams params;
    params.n_target = 10 + static_cast<int>(seed % 21);
    Graph h = random_class_member(seed, params);
    Decomposition d = decompose(h);
    require_partition(d);
    REQUIRE(validate_structure(d).all_ok());
    int rot = static_cast<int>(seed % 5);
    Decomposition turned = d.reindexed(rot, seed % 2 == 0);
    require_partition(turned);
    REQUIRE(validate_structure(turned).all_ok());
  }
}

TEST_CASE("every property is reported once") {
  StructureReport rep = validate_structure(decompose(make_bhat(2)));
  std::set<std::string> names;
  for (const auto& r : rep.results) names.insert(r.name);
  REQUIRE(names.size() == rep.results.size());
  for (int k = 1; k <= 17; ++k) REQUIRE(names.count("P" + std::to_string(k)) == 1);
  REQUIRE(rep.find("P8") != nullptr);
  REQUIRE(rep.find("nope") == nullptr);
}

TEST_CASE("non-members are rejected with the failing predicate") {
  try {
    decompose(oracle::cycle(7));
    FAIL("expected rejection");
  } catch (const NotInClassError& e) {
    REQUIRE(e.predicate == "P2+P3-free");
    REQUIRE(e.witness.size() == 5);
  }
  REQUIRE_THROWS_AS(decompose(oracle::cycle(4)), NotInClassError);
  REQUIRE_THROWS_AS(decompose(oracle::complete(3)), NotInClassError);
  REQUIRE_THROWS_AS(decompose(oracle::path(3)), NotInClassError);
}

TEST_CASE("manufactured violations are caught") {
  auto ring_plus = [](std::initializer_list<int> extra_neighbors) {
    Graph h(6);
    for (int i = 0; i < 5; ++i) h.add_edge(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    for (int v : extra_neighbors) h.add_edge(v, 5);
    return h;
  };
  const std::array<int, 5> ring{0, 1, 2, 3, 4};

  // Seeing the two neighbors of a ring vertex is the one legal two-vertex
  // pattern: that lands in the matching block.
  Decomposition d = decompose_at(ring_plus({0, 2}), ring);
  REQUIRE(d.B[1].contains(5));

  // An adjacent ring pair, three ring vertices, or no path back to the ring
  // all violate the shape.
  REQUIRE_THROWS_AS(decompose_at(ring_plus({0, 1}), ring), MalformedStructureError);
  REQUIRE_THROWS_AS(decompose_at(ring_plus({0, 1, 2}), ring), MalformedStructureError);
  REQUIRE_THROWS_AS(decompose_at(ring_plus({}), ring), MalformedStructureError);

  // A wrong root cycle is rejected before any bucketing.
  REQUIRE_THROWS_AS(decompose_at(oracle::cycle(6), {0, 1, 2, 3, 4}), MalformedStructureError);
}

TEST_CASE("classification of the named families") {
  REQUIRE(classify(decompose(make_bhat(2))).label == ClassLabel::B1);
  REQUIRE(classify(decompose(make_bhat(3))).label == ClassLabel::B1);
  REQUIRE(classify(decompose(make_ht(1))).label == ClassLabel::B2);
  REQUIRE(classify(decompose(make_ht(2))).label == ClassLabel::B2);
  REQUIRE(classify(decompose(make_hstar())).label == ClassLabel::Other);
  REQUIRE(classify(decompose(oracle::cycle(5))).label == ClassLabel::Other);

  Classification b1 = classify(decompose(make_bhat(2)));
  REQUIRE(b1.i >= 0);
  REQUIRE(b1.i < 5);
  REQUIRE_FALSE(b1.missing.empty());

  REQUIRE(class_label_name(ClassLabel::B1) == "B1");
  REQUIRE(class_label_name(ClassLabel::B2) == "B2");
  REQUIRE(class_label_name(ClassLabel::Other) == "other");
}

TEST_CASE("all induced five-cycles are found") {
  Graph c5 = oracle::cycle(5);
  auto cycles = all_c5s(c5);
  REQUIRE(cycles.size() == 1);
  REQUIRE(cycles[0] == std::array<int, 5>{0, 1, 2, 3, 4});
  REQUIRE(all_c5s(oracle::cycle(7)).empty());
  REQUIRE(all_c5s(oracle::petersen()).size() == 12);
}
