#ifndef OREXP_PERIODS_HPP_
#define OREXP_PERIODS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "orexp/words.hpp"

namespace orexp {

/// Shape of per(L_A) (or per*(L_A) when nonconstant_variant).
///
/// When cofinite, the period set is exactly
///   { k >= 1 : gcd_r | k } minus exceptions,
/// and every k >= threshold_t0 divisible by gcd_r is a period.  gcd_r == 0
/// iff there are no periods at all.
struct PeriodStructure {
  long gcd_r = 0;
  std::optional<long> threshold_t0;
  std::vector<long> exceptions;
  bool transitive = false;
  bool nonconstant_variant = false;
  /// False when the tail misses infinitely many multiples of gcd_r (only
  /// possible for non-transitive languages).
  bool cofinite = false;
  /// Bound up to which periods were enumerated; beyond it the tail is
  /// certified by the strongly-connected-component analysis.
  long verified_up_to = 0;

  /// Membership predicted by the structure; only meaningful when cofinite.
  bool predicts(long k) const;
};

/// Computes the structure from the automaton: each strongly connected
/// component of the full-state graph contributes closed walks of every
/// multiple of its period d beyond 4S + d((S-1)^2 + 1) (S its size), so
/// enumerating up to that bound pins the threshold and exception list
/// exactly.
PeriodStructure period_structure(const FactorSet& A, bool nonconstant_only);

// Arithmetic helpers.  gcd of an empty set is 0.

long gcd_of(std::span<const long> values);
/// A small subset with the same gcd (greedy; exists for every set).
std::vector<long> gcd_basis(std::span<const long> values);

/// How the set continues beyond a finite sample.
enum class TailClass {
  kEmpty,           // nothing beyond the sample: the set is finite
  kCofiniteInRZ,    // all multiples of the sample gcd beyond the sample
  kCoinfiniteInRZ,  // misses infinitely many multiples of the sample gcd
};

struct CofiniteVerdict {
  long r = 0;
  bool cofinite = false;
  std::vector<long> basis;
};

/// gcd of the sample and whether the whole set is cofinite in rZ+ given the
/// declared tail.  The tail is taken as declared, never inferred.
CofiniteVerdict gcd_and_cofinite(std::span<const long> sample, TailClass tail);

/// Positive combinations (all coefficients >= 1) of basis up to bound.
std::set<long> positive_combinations(std::span<const long> basis, long bound);

/// Weak addition property on a bounded window: l + c lies in the set for
/// every positive combination c of basis with l + c <= bound.
bool weak_addition_holds(const std::set<long>& set, std::span<const long> basis, long l,
                         long bound);

}  // namespace orexp

#endif  // OREXP_PERIODS_HPP_
