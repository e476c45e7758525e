#ifndef OREXP_HOLES_HPP_
#define OREXP_HOLES_HPP_

// Classes of graphs with no holes of length in a set C, checked against the
// necessary conditions for expressibility by forbidden (acyclic)
// orientations.  Infinite sets are a bounded sample plus a declared tail;
// tails are never inferred from samples.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orexp {

enum class HoleVariant { kFiniteSet, kCofiniteComplement, kOddTail, kCustom };

/// How C continues beyond any sample.
enum class DeclaredTail { kFinite, kCofinite, kOddTail, kOther };

class HoleClassSpec {
 public:
  /// C = lengths.
  static HoleClassSpec finite_set(std::set<int> lengths);
  /// C = every length >= 4 except excluded.
  static HoleClassSpec cofinite_complement(std::set<int> excluded);
  /// C = every odd length >= M, plus extra.
  static HoleClassSpec odd_tail(int M, std::set<int> extra);
  /// C = {k in [4, bound] : predicate(k)} with the stated tail.  Throws for
  /// bound < 50.
  static HoleClassSpec custom(std::string name, std::function<bool(int)> predicate, int bound,
                              DeclaredTail tail);

  HoleVariant variant() const noexcept { return variant_; }
  DeclaredTail tail() const noexcept { return tail_; }
  const std::string& name() const noexcept { return name_; }
  const std::set<int>& lengths() const noexcept { return lengths_; }
  int threshold() const noexcept { return threshold_; }
  /// Sample bound for custom sets; 0 for the closed forms.
  int bound() const noexcept { return bound_; }
  /// Lengths below 4 dropped on construction.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Membership of a hole length k >= 4.
  bool contains(int k) const;

 private:
  HoleVariant variant_ = HoleVariant::kFiniteSet;
  DeclaredTail tail_ = DeclaredTail::kFinite;
  std::string name_;
  std::set<int> lengths_;
  int threshold_ = 0;
  int bound_ = 0;
  std::function<bool(int)> predicate_;
  std::vector<std::string> warnings_;
};

/// Built-in predicates: "primes", "even", "odd", "multiples_of:k".
/// Throws std::invalid_argument for anything else.
std::function<bool(int)> named_predicate(const std::string& name);

std::string_view to_string(DeclaredTail t);
DeclaredTail parse_tail(std::string_view text);

/// {3} ∪ {k in [4, k_max] : k not in C}: the cycle lengths of the class.
/// Custom sets are sampled up to min(k_max, bound).  Throws for k_max < 4.
std::set<int> cycles_in_class(const HoleClassSpec& spec, int k_max);

enum class CheckStatus { kPass, kFail, kNotApplicable };

struct CheckResult {
  std::string tag;
  CheckStatus status = CheckStatus::kNotApplicable;
  /// A pair of lengths backing the verdict: (k, l*k) for multiples, two
  /// cycle lengths with gcd 1 for cofiniteness, and so on.
  std::optional<std::pair<long, long>> witness;
  /// Sample-derived threshold and period when the check passes.
  std::optional<long> M;
  std::optional<long> r;
  std::string detail;
};

/// Tag "nec:multiples".  Passes when some M <= k_max/3 makes the
/// sampled cyc_M closed under multiples; the fail witness is the first
/// violation, and a violation exists above every admissible M.
CheckResult check_multiples_closure(const HoleClassSpec& spec, int k_max);

/// "nofiniteC": forbidden orientations need infinitely many cycles, since
/// the class contains every path.  Fails exactly for cofinite C.
CheckResult check_infinite_cycles(const HoleClassSpec& spec);

/// "sncondition": hole classes are closed under couplings, so cyc_M must be
/// a cofinite subset of rZ+ for some M, r.  Reports the smallest
/// sample-consistent (M, r).
CheckResult check_coupling_cofiniteness(const HoleClassSpec& spec, int k_max);

enum class OverallVerdict {
  /// Fails the acyclic conditions, hence also the unrestricted ones.
  kNotExpressibleAcyclic,
  /// Fails only the unrestricted conditions.
  kNotExpressibleAny,
  /// Every necessary condition holds: a candidate, not a proof.
  kNecessaryConditionsPass,
};

std::string_view to_string(OverallVerdict v);
std::string_view to_string(CheckStatus s);

struct ExpressibilityReport {
  std::set<int> cyc_sample;
  int k_max = 0;
  std::vector<CheckResult> acyclic_checks;
  std::vector<CheckResult> any_checks;
  bool acyclic_pass = true;
  bool any_pass = true;
  OverallVerdict overall = OverallVerdict::kNecessaryConditionsPass;
  std::vector<std::string> notes;
};

/// Runs every condition for both variants.  The last check of each variant
/// applies the trichotomy ("thm:main*" acyclic, "thm:main" unrestricted):
/// an infinite, coinfinite C must have an odd tail.
ExpressibilityReport trichotomy_verdict(const HoleClassSpec& spec, int k_max = 60);

}  // namespace orexp

#endif  // OREXP_HOLES_HPP_
