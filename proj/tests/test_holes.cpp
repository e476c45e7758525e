#include <doctest.h>

#include <algorithm>

#include "orexp/holes.hpp"

using namespace orexp;

namespace {

HoleClassSpec primes() {
  return HoleClassSpec::custom("primes", named_predicate("primes"), 200, DeclaredTail::kOther);
}
HoleClassSpec even_holes() {
  return HoleClassSpec::custom("even", named_predicate("even"), 200, DeclaredTail::kOther);
}
HoleClassSpec no_odd_holes() { return HoleClassSpec::odd_tail(5, {}); }

const CheckResult& find(const std::vector<CheckResult>& checks, const std::string& tag) {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const CheckResult& c) { return c.tag == tag; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("cycle lengths of hole classes") {
  CHECK(cycles_in_class(primes(), 10) == std::set<int>{3, 4, 6, 8, 9, 10});
  std::set<int> no_five;
  for (int k = 3; k <= 12; ++k)
    if (k != 5) no_five.insert(k);
  CHECK(cycles_in_class(HoleClassSpec::finite_set({5}), 12) == no_five);
  CHECK(cycles_in_class(no_odd_holes(), 12) == std::set<int>{3, 4, 6, 8, 10, 12});
  CHECK_THROWS_AS(cycles_in_class(no_odd_holes(), 3), std::invalid_argument);
}

TEST_CASE("samples agree with closed forms") {
  HoleClassSpec finite = HoleClassSpec::finite_set({4, 7, 9});
  HoleClassSpec odd = HoleClassSpec::odd_tail(9, {6});
  auto f = cycles_in_class(finite, 200);
  auto o = cycles_in_class(odd, 200);
  for (int k = 3; k <= 200; ++k) {
    bool in_finite = k == 3 || (k != 4 && k != 7 && k != 9);
    bool in_odd = k == 3 || (k != 6 && (k < 9 || k % 2 == 0));
    CHECK((f.count(k) > 0) == in_finite);
    CHECK((o.count(k) > 0) == in_odd);
  }
}

TEST_CASE("short lengths are dropped with a warning") {
  HoleClassSpec s = HoleClassSpec::finite_set({3, 5});
  CHECK(s.lengths() == std::set<int>{5});
  CHECK(s.warnings().size() == 1);
  CHECK_THROWS_AS(HoleClassSpec::custom("x", named_predicate("odd"), 40, DeclaredTail::kOther),
                  std::invalid_argument);
  CHECK_THROWS_AS(named_predicate("squares"), std::invalid_argument);
}

TEST_CASE("multiples closure") {
  CheckResult even = check_multiples_closure(even_holes(), 60);
  CHECK(even.status == CheckStatus::kFail);
  CHECK(even.witness == std::pair<long, long>{5, 10});
  CheckResult odd = check_multiples_closure(no_odd_holes(), 60);
  CHECK(odd.status == CheckStatus::kPass);
  CHECK(odd.M == 4);
  CHECK(check_multiples_closure(HoleClassSpec::finite_set({6, 8}), 60).status == CheckStatus::kPass);
  // Only small divisors leave violations above k_max / 3 in a 60-sample.
  for (int k = 2; k <= 3; ++k) {
    auto spec = HoleClassSpec::custom("m", named_predicate("multiples_of:" + std::to_string(k)),
                                      200, DeclaredTail::kOther);
    CheckResult c = check_multiples_closure(spec, 60);
    CHECK(c.status == CheckStatus::kFail);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->second % k == 0);
    CHECK(c.witness->second % c.witness->first == 0);
  }
  for (int k = 2; k <= 7; ++k) {
    auto spec = HoleClassSpec::custom("m", named_predicate("multiples_of:" + std::to_string(k)),
                                      200, DeclaredTail::kOther);
    CHECK(trichotomy_verdict(spec).overall == OverallVerdict::kNotExpressibleAcyclic);
  }
}

TEST_CASE("infinitely many cycles") {
  CheckResult chordal = check_infinite_cycles(HoleClassSpec::cofinite_complement({}));
  CHECK(chordal.status == CheckStatus::kFail);
  CHECK(chordal.witness == std::pair<long, long>{3, 4});
  CHECK(check_infinite_cycles(primes()).status == CheckStatus::kPass);
  CHECK(check_infinite_cycles(HoleClassSpec::finite_set({4})).status == CheckStatus::kPass);
}

TEST_CASE("coupling cofiniteness") {
  CheckResult odd = check_coupling_cofiniteness(no_odd_holes(), 60);
  CHECK(odd.status == CheckStatus::kPass);
  CHECK(odd.M == 4);
  CHECK(odd.r == 2);
  CheckResult p = check_coupling_cofiniteness(primes(), 60);
  CHECK(p.status == CheckStatus::kFail);
  CHECK(p.witness == std::pair<long, long>{4, 9});
  CHECK(p.r == 1);
  CHECK(check_coupling_cofiniteness(HoleClassSpec::cofinite_complement({5}), 60).status ==
        CheckStatus::kNotApplicable);
}

TEST_CASE("trichotomy verdicts") {
  auto p = trichotomy_verdict(primes());
  CHECK(p.overall == OverallVerdict::kNotExpressibleAcyclic);
  CHECK_FALSE(p.acyclic_pass);
  CHECK_FALSE(p.any_pass);
  CHECK(find(p.acyclic_checks, "sncondition").status == CheckStatus::kFail);
  CHECK(find(p.acyclic_checks, "thm:main*").status == CheckStatus::kFail);

  auto e = trichotomy_verdict(even_holes());
  CHECK(e.overall == OverallVerdict::kNotExpressibleAcyclic);
  CHECK(find(e.any_checks, "nec:multiples").witness == std::pair<long, long>{5, 10});

  auto c = trichotomy_verdict(HoleClassSpec::cofinite_complement({}));
  CHECK(c.overall == OverallVerdict::kNotExpressibleAny);
  CHECK(c.acyclic_pass);
  CHECK_FALSE(c.any_pass);
  CHECK(find(c.any_checks, "nofiniteC").status == CheckStatus::kFail);

  auto o = trichotomy_verdict(no_odd_holes());
  CHECK(o.overall == OverallVerdict::kNecessaryConditionsPass);
  CHECK(o.acyclic_pass);
  CHECK(o.any_pass);

  auto f = trichotomy_verdict(HoleClassSpec::finite_set({5, 7}));
  CHECK(f.overall == OverallVerdict::kNecessaryConditionsPass);

  // Forbidding every non-multiple of 3 leaves period three.
  auto three = trichotomy_verdict(HoleClassSpec::custom(
      "non-multiples of 3", [](int k) { return k % 3 != 0; }, 200, DeclaredTail::kOther));
  const CheckResult& t = find(three.acyclic_checks, "thm:main*");
  CHECK(t.status == CheckStatus::kFail);
  CHECK(t.r == 3);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->first % 3 != 0);
  CHECK(t.witness->second % 3 == 0);
}

TEST_CASE("every failing check carries a witness or a tail justification") {
  std::vector<HoleClassSpec> specs{primes(), even_holes(), HoleClassSpec::cofinite_complement({6}),
                                   no_odd_holes(), HoleClassSpec::finite_set({4})};
  for (const auto& s : specs) {
    auto r = trichotomy_verdict(s);
    bool any_failed = false;
    for (const auto* checks : {&r.acyclic_checks, &r.any_checks}) {
      for (const auto& c : *checks) {
        if (c.status != CheckStatus::kFail) continue;
        any_failed = true;
        CHECK((c.witness.has_value() || !c.detail.empty()));
      }
    }
    CHECK(any_failed == (r.overall != OverallVerdict::kNecessaryConditionsPass));
  }
}
