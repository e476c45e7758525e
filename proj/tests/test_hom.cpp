#include <doctest.h>

#include <random>

#include "orexp/canonical.hpp"
#include "orexp/duality.hpp"
#include "orexp/hom.hpp"

using namespace orexp;

namespace {

Digraph random_digraph(std::mt19937& rng, int n, unsigned density) {
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng() % 100 < density) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

// Every map, for tiny sources.
bool brute_hom(const Digraph& a, const Digraph& b) {
  if (a.order() == 0) return true;
  if (b.order() == 0) return false;
  std::vector<Vertex> map(a.order(), 0);
  while (true) {
    if (is_homomorphism(a, b, map)) return true;
    int i = 0;
    while (i < a.order() && ++map[i] == b.order()) map[i++] = 0;
    if (i == a.order()) return false;
  }
}

const Digraph kPoint(1);

}  // namespace

TEST_CASE("hom examples") {
  CHECK_FALSE(hom_exists(directed_path(3), transitive_tournament(2)).has_value());
  CHECK_FALSE(hom_exists(directed_cycle(3), transitive_tournament(3)).has_value());
  auto id = hom_exists(directed_cycle(5), directed_cycle(5));
  REQUIRE(id.has_value());
  CHECK(is_homomorphism(directed_cycle(5), directed_cycle(5), id->mapping));
  CHECK(hom_exists(directed_cycle(6), directed_cycle(3)).has_value());
  CHECK_FALSE(hom_exists(directed_cycle(4), directed_cycle(3)).has_value());
  CHECK(hom_exists(Digraph(0), kPoint).has_value());
  CHECK_FALSE(hom_exists(kPoint, Digraph(0)).has_value());
}

TEST_CASE("hom search agrees with exhaustive maps") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 600; ++trial) {
    Digraph a = random_digraph(rng, 1 + rng() % 5, 35);
    Digraph b = random_digraph(rng, 1 + rng() % 4, 45);
    auto w = hom_exists(a, b);
    CHECK(w.has_value() == brute_hom(a, b));
    if (w) CHECK(is_homomorphism(a, b, w->mapping));
  }
}

TEST_CASE("hom is reflexive and composes") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph a = random_digraph(rng, 1 + rng() % 6, 30);
    Digraph b = random_digraph(rng, 1 + rng() % 6, 50);
    Digraph c = random_digraph(rng, 1 + rng() % 6, 60);
    auto self = hom_exists(a, a);
    REQUIRE(self.has_value());
    auto ab = hom_exists(a, b);
    auto bc = hom_exists(b, c);
    if (ab && bc) {
      std::vector<Vertex> composed;
      for (Vertex x : ab->mapping) composed.push_back(bc->mapping[x]);
      CHECK(is_homomorphism(a, c, composed));
    }
  }
}

TEST_CASE("budget") {
  std::vector<VertexPair> arcs;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) arcs.emplace_back(u, v);
  CHECK_THROWS_AS(hom_exists(directed_cycle(7), Digraph(4, arcs), SearchLimits{1}),
                  BudgetExceeded);
}

TEST_CASE("cores") {
  CHECK(is_isomorphic(core_of(transitive_tournament(3)), transitive_tournament(3)));
  Digraph two = disjoint_union(directed_path(2), directed_path(2));
  CHECK(is_isomorphic(core_of(two), directed_path(2)));
  CHECK(is_isomorphic(core_of(kPoint), kPoint));
  CHECK(is_isomorphic(core_of(directed_cycle(6)), directed_cycle(6)));
  CHECK(is_isomorphic(core_of(disjoint_union(directed_cycle(3), directed_cycle(6))),
                      directed_cycle(3)));

  std::mt19937 rng(79);
  for (int trial = 0; trial < 150; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng() % 6, 30);
    Digraph c = core_of(d);
    CHECK(is_hom_equivalent(c, d));
    CHECK(is_isomorphic(core_of(c), c));
    CHECK(c.order() <= d.order());
  }
  CHECK_THROWS_AS(core_of(Digraph(11)), std::invalid_argument);
}

TEST_CASE("hom equivalence") {
  CHECK(is_hom_equivalent(disjoint_union(directed_path(2), directed_path(2)), directed_path(2)));
  CHECK_FALSE(is_hom_equivalent(directed_cycle(3), transitive_tournament(3)));
  CHECK(is_hom_equivalent(directed_cycle(4), directed_cycle(4)));
}

TEST_CASE("forests and trees") {
  CHECK(is_oriented_tree(directed_path(4)));
  CHECK_FALSE(is_oriented_forest(directed_cycle(3)));
  Digraph two = disjoint_union(single_arc(), single_arc());
  CHECK(is_oriented_forest(two));
  CHECK_FALSE(is_oriented_tree(two));
  CHECK_FALSE(is_oriented_forest(digon()));
}

TEST_CASE("minimal elements") {
  std::vector<Digraph> paths{directed_path(2), directed_path(3)};
  auto m = minimal_elements(paths);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == directed_path(2));
  std::vector<Digraph> single{directed_cycle(4)};
  CHECK(minimal_elements(single).size() == 1);
  std::vector<Digraph> incomparable{directed_cycle(3), transitive_tournament(3)};
  CHECK(minimal_elements(incomparable).size() == 2);
}

TEST_CASE("duality pairs") {
  auto trivial = verify_duality_pair(directed_path(2), kPoint, 4);
  CHECK_FALSE(trivial.counterexample.has_value());
  CHECK(trivial.holds_up_to == 4);
  CHECK(trivial.checked == 1 + 3 + 16 + 218);

  auto p3 = verify_duality_pair(directed_path(3), transitive_tournament(2), 4);
  CHECK_FALSE(p3.counterexample.has_value());
  CHECK(p3.holds_up_to == 4);

  std::vector<Digraph> F{directed_cycle(3)}, M{transitive_tournament(2)};
  auto c3 = verify_generalized_duality(F, M, 4);
  REQUIRE(c3.counterexample.has_value());
  CHECK(counterexample_verifies(F, M, *c3.counterexample));
  auto c5 = check_duality_instance(F, M, directed_cycle(5));
  REQUIRE(c5.has_value());
  CHECK_FALSE(c5->from_forbidden.has_value());
  CHECK_FALSE(c5->to_target.has_value());
  CHECK(counterexample_verifies(F, M, *c5));

  CHECK_THROWS_AS(verify_duality_pair(directed_path(2), kPoint, 6), std::invalid_argument);
}

TEST_CASE("generalized dualities") {
  std::vector<Digraph> F{directed_path(2)}, M{kPoint};
  CHECK(verify_generalized_duality(F, M, 4).holds_up_to == 4);
  for (int k : {2, 3}) {
    std::vector<Digraph> Fk{directed_path(k + 1)}, Mk{transitive_tournament(k)};
    auto r = verify_generalized_duality(Fk, Mk, 4);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("parallel verification is deterministic") {
  std::vector<Digraph> F{directed_cycle(3)}, M{transitive_tournament(2)};
  auto one = verify_generalized_duality(F, M, 5, 1);
  auto four = verify_generalized_duality(F, M, 5, 4);
  REQUIRE(one.counterexample.has_value());
  REQUIRE(four.counterexample.has_value());
  CHECK(one.counterexample->d == four.counterexample->d);
  CHECK(one.checked == four.checked);
  CHECK(one.holds_up_to == four.holds_up_to);

  std::vector<Digraph> Fp{directed_path(4)}, Mp{transitive_tournament(3)};
  auto a = verify_generalized_duality(Fp, Mp, 4, 1);
  auto b = verify_generalized_duality(Fp, Mp, 4, 3);
  CHECK(a.holds_up_to == b.holds_up_to);
  CHECK(a.checked == b.checked);
}

TEST_CASE("non-tree cores have no dual") {
  std::vector<Digraph> small;
  for (int n = 1; n <= 3; ++n)
    for (auto& d : enumerate_digraphs(n, false)) small.push_back(d);
  int pairs = 0;
  for (const auto& a : small) {
    if (is_oriented_tree(core_of(a))) continue;
    for (const auto& b : small) {
      auto r = verify_duality_pair(a, b, 5);
      CHECK(r.counterexample.has_value());
      ++pairs;
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("verified fixture pairs have tree cores") {
  struct Fixture {
    Digraph a, b;
    int bound;
  };
  std::vector<Fixture> catalog{{directed_path(2), kPoint, 4},
                               {directed_path(3), transitive_tournament(2), 4},
                               {directed_path(4), transitive_tournament(3), 4}};
  for (const auto& f : catalog) {
    auto r = verify_duality_pair(f.a, f.b, f.bound);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(is_oriented_tree(core_of(f.a)));
  }
}
