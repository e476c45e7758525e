#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "orexp/canonical.hpp"
#include "orexp/hom.hpp"
#include "orexp/oracles.hpp"
#include "orexp/orientations.hpp"
#include "orexp/search.hpp"
#include "orexp/spectrum.hpp"

using namespace orexp;
using orexp::testing::arc_pair;
using orexp::testing::random_word;

namespace {

ForbiddenSet bipartite_set() {
  return ForbiddenSet({transitive_tournament(3), directed_cycle(3), directed_path(3)});
}

std::set<CanonicalCode> codes(const ForbiddenSet& F) {
  std::set<CanonicalCode> out;
  for (const auto& h : F.members()) out.insert(canonical_code(h));
  return out;
}

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : enumerate_graphs(k)) out.push_back(std::move(g));
  return out;
}

// Independent oracle: try every orientation.
bool brute_admits(const Graph& g, const ForbiddenSet& F, SearchMode mode) {
  auto stream = orientations_of(g, mode.acyclic);
  while (auto o = stream.next())
    if (is_forbidden_free(o->digraph(), F, mode.containment)) return true;
  return false;
}

OrientedGraph random_oriented(std::mt19937& rng, int n, bool connected) {
  while (true) {
    std::vector<VertexPair> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        unsigned r = rng() % 3;
        if (r == 1) arcs.emplace_back(u, v);
        if (r == 2) arcs.emplace_back(v, u);
      }
    OrientedGraph d(n, arcs);
    if (!connected || is_connected(d)) return d;
  }
}

}  // namespace

TEST_CASE("forbidden sets") {
  ForbiddenSet F({directed_path(3), directed_path(3), transitive_tournament(3)});
  CHECK(F.size() == 2);
  CHECK(F.max_order() == 3);
  CHECK(F.all_connected());
  CHECK_FALSE(ForbiddenSet({arc_pair()}).all_connected());
  CHECK_THROWS_AS(ForbiddenSet({OrientedGraph(0)}), std::invalid_argument);
  CHECK(parse_containment("overlap") == Containment::kOverlap);
  CHECK_THROWS_AS(parse_containment("subgraph"), std::invalid_argument);
}

TEST_CASE("homomorphic image closure") {
  CHECK(codes(homomorphic_image_closure(ForbiddenSet({directed_path(3)}))) == codes(bipartite_set()));
  CHECK(codes(homomorphic_image_closure(ForbiddenSet({single_arc()}))) ==
        codes(ForbiddenSet({single_arc()})));
  // Every image is a hom image, and P4 has images on 2..4 vertices only.
  ForbiddenSet closure = homomorphic_image_closure(ForbiddenSet({directed_path(4)}));
  for (const auto& k : closure.members()) {
    CHECK(hom_exists(directed_path(4), k).has_value());
    CHECK(k.order() >= 3);
    CHECK(k.order() <= 4);
  }
}

TEST_CASE("closure under induced containment matches hom containment") {
  for (int len : {3, 4}) {
    ForbiddenSet F({directed_path(len)});
    ForbiddenSet closure = homomorphic_image_closure(F);
    for (const auto& g : graphs_up_to(5)) {
      auto stream = orientations_of(g, false);
      while (auto o = stream.next()) {
        OrientedGraph d = o->digraph();
        CHECK(is_forbidden_free(d, closure, Containment::kInduced) ==
              is_forbidden_free(d, F, Containment::kHom));
      }
    }
  }
}

TEST_CASE("overlap containment") {
  CHECK(overlap_contains(arc_pair(), single_arc()));
  CHECK(overlap_contains(disjoint_union(out_star_b1(), single_arc()), out_star_b1()));
  CHECK_FALSE(overlap_contains(disjoint_union(directed_cycle(3), single_arc()),
                               transitive_tournament(3)));
}

TEST_CASE("orientation search examples") {
  ForbiddenSet b1({out_star_b1()});
  SearchMode acyclic{Containment::kInduced, true};
  CHECK_FALSE(admits_orientation(make_cycle(4), b1, acyclic).admits);
  auto k3 = admits_orientation(complete_graph(3), b1, acyclic);
  REQUIRE(k3.admits);
  CHECK(is_isomorphic(k3.witness->digraph(), transitive_tournament(3)));

  ForbiddenSet p3({directed_path(3)});
  SearchMode hom{Containment::kHom, false};
  CHECK_FALSE(admits_orientation(make_cycle(5), p3, hom).admits);
  CHECK(admits_orientation(make_cycle(6), p3, hom).admits);
}

TEST_CASE("search budget is explicit") {
  ForbiddenSet F({directed_path(3)});
  SearchLimits tiny{3};
  CHECK_THROWS_AS(admits_orientation(complete_graph(6), F, {}, tiny), BudgetExceeded);
}

TEST_CASE("search agrees with exhaustive orientation") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<OrientedGraph> members;
    int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      if (rng() % 4 == 0) {
        members.push_back(disjoint_union(random_oriented(rng, 2, true),
                                         random_oriented(rng, 2 + rng() % 2, true)));
      } else {
        members.push_back(random_oriented(rng, 2 + static_cast<int>(rng() % 3), true));
      }
    }
    ForbiddenSet F(members);
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph g(n, edges);
    for (auto c : {Containment::kInduced, Containment::kOverlap, Containment::kHom}) {
      for (bool acyclic : {false, true}) {
        SearchMode mode{c, acyclic};
        auto v = admits_orientation(g, F, mode);
        CHECK(v.admits == brute_admits(g, F, mode));
        if (v.admits) {
          OrientedGraph d = v.witness->digraph();
          CHECK(underlying(d) == g);
          CHECK(is_forbidden_free(d, F, c));
          if (acyclic) CHECK(is_acyclic(d));
        }
      }
    }
  }
}

TEST_CASE("overlap-free implies induced-free for connected members") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    ForbiddenSet F({random_oriented(rng, 2 + rng() % 3, true)});
    int n = 3 + static_cast<int>(rng() % 3);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph g(n, edges);
    auto stream = orientations_of(g, false);
    while (auto o = stream.next()) {
      OrientedGraph d = o->digraph();
      if (is_forbidden_free(d, F, Containment::kOverlap))
        CHECK(is_forbidden_free(d, F, Containment::kInduced));
    }
  }
}

TEST_CASE("colouring and chordality equivalences on small graphs") {
  for (const auto& g : graphs_up_to(5)) {
    for (int k : {2, 3}) {
      bool admits = admits_orientation(g, ForbiddenSet({directed_path(k + 1)}),
                                       {Containment::kHom, false})
                        .admits;
      CHECK(admits == oracle_k_colourable(g, k));
    }
    bool chordal = admits_orientation(g, ForbiddenSet({out_star_b1()}),
                                      {Containment::kInduced, true})
                       .admits;
    CHECK(chordal == oracle_chordal(g));
  }
}

TEST_CASE("oracles") {
  CHECK_FALSE(oracle_k_colourable(make_cycle(5), 2));
  CHECK(oracle_k_colourable(make_cycle(5), 3));
  CHECK_FALSE(oracle_chordal(make_cycle(4)));
  CHECK(oracle_chordal(complete_graph(4)));
  CHECK(oracle_chordal(coupling(3, 3)));
  CHECK_FALSE(oracle_chordal(coupling(3, 4)));
}

TEST_CASE("cycle spectra") {
  std::set<int> evens{4, 6, 8, 10, 12};
  CHECK(cycle_spectrum(bipartite_set(), 4, 12, false) == evens);
  CHECK(cycle_spectrum(bipartite_set(), 4, 12, false, SpectrumRoute::kBruteForce) == evens);

  ForbiddenSet b1({out_star_b1()});
  CHECK(cycle_spectrum(b1, 4, 10, true).empty());
  CHECK(cycle_spectrum(b1, 4, 8, true, SpectrumRoute::kBruteForce).empty());
  std::set<int> all{4, 5, 6, 7, 8, 9, 10};
  CHECK(cycle_spectrum(b1, 4, 10, false) == all);
  for (int k = 4; k <= 10; ++k) {
    Word w = Word(std::vector<Letter>(k, Letter::Fwd));
    CHECK(is_forbidden_free(word_to_cycle(w), b1, Containment::kInduced));
  }

  CHECK_THROWS_AS(cycle_spectrum(ForbiddenSet({arc_pair()}), 4, 8, false), std::invalid_argument);
  CHECK_THROWS_AS(cycle_spectrum(b1, 3, 8, false, SpectrumRoute::kLanguage),
                  std::invalid_argument);
  CHECK(cycle_spectrum(ForbiddenSet({OrientedGraph(1)}), 4, 8, false).empty());
}

TEST_CASE("language and search routes agree") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<OrientedGraph> members;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) members.push_back(word_to_path(random_word(rng, 1 + rng() % 4)));
    ForbiddenSet F(members);
    int lo = language_threshold(F);
    for (bool acyclic : {false, true}) {
      CHECK(cycle_spectrum(F, lo, 12, acyclic, SpectrumRoute::kLanguage) ==
            cycle_spectrum(F, lo, 12, acyclic, SpectrumRoute::kBruteForce));
    }
    CHECK(path_spectrum(F, lo, 12, SpectrumRoute::kLanguage) ==
          path_spectrum(F, lo, 12, SpectrumRoute::kBruteForce));
  }
}

TEST_CASE("multiples") {
  MultiplesReport bip = multiples_property_check(bipartite_set(), 4, 3, false);
  CHECK(bip.in_spectrum);
  CHECK(bip.multiples == std::vector<int>{8, 12});
  CHECK_FALSE(bip.violation.has_value());
  for (std::size_t i = 0; i < bip.witnesses.size(); ++i) {
    CHECK(static_cast<int>(bip.witnesses[i].size()) == bip.multiples[i]);
    CHECK(is_forbidden_free(word_to_cycle(bip.witnesses[i]), bipartite_set(), Containment::kInduced));
  }

  MultiplesReport empty = multiples_property_check(ForbiddenSet(), 5, 4, true);
  CHECK(empty.in_spectrum);
  CHECK(empty.multiples == std::vector<int>{10, 15, 20});

  MultiplesReport vacuous = multiples_property_check(ForbiddenSet({out_star_b1()}), 4, 3, true);
  CHECK_FALSE(vacuous.in_spectrum);
  CHECK(vacuous.multiples.empty());
  CHECK_FALSE(vacuous.violation.has_value());
}

TEST_CASE("reduction to connected members") {
  ForbiddenSet connected({directed_path(3)});
  auto same = reduce_to_connected(connected, 4, {});
  REQUIRE(same.reduced.has_value());
  CHECK(codes(*same.reduced) == codes(connected));

  ForbiddenSet two_cycles({disjoint_union(directed_cycle(3), directed_cycle(3))});
  auto reduced = reduce_to_connected(two_cycles, 5, {});
  REQUIRE(reduced.reduced.has_value());
  CHECK(codes(*reduced.reduced) == codes(ForbiddenSet({directed_cycle(3)})));
  CHECK(reduced.verified_up_to == 5);

  auto none = reduce_to_connected(ForbiddenSet({arc_pair()}), 5, {});
  CHECK_FALSE(none.reduced.has_value());
  CHECK(none.candidates_tried == 1);
}

TEST_CASE("overlap blow-up") {
  ForbiddenSet F({arc_pair()});
  BlowupReport r = overlap_blowup(make_path(2), F, false);
  CHECK(r.admits_free);
  CHECK_FALSE(r.admits_overlap_free);
  CHECK(r.copies == 2);
  CHECK_FALSE(r.union_admits_free);
}
