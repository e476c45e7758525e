#ifndef OREXP_DUALITY_HPP_
#define OREXP_DUALITY_HPP_

// Bounded verification of Forb(F) = CSP(M) over all digraphs up to a vertex
// bound.  A pair (A, B) is the case F = {A}, M = {B}.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orexp/hom.hpp"

namespace orexp {

/// A digraph on which the two sides disagree.  Either some F member maps
/// into d while d also maps to some M member (both witnesses present), or
/// nothing from F maps into d and d maps to no M member (both absent, the
/// absence certified by exhaustive search).
struct DualityCounterexample {
  Digraph d;
  int forbidden_index = -1;
  std::optional<HomWitness> from_forbidden;
  int target_index = -1;
  std::optional<HomWitness> to_target;
};

struct DualityReport {
  /// Largest n such that every digraph on at most n vertices agrees.
  int holds_up_to = 0;
  std::optional<DualityCounterexample> counterexample;
  std::size_t checked = 0;
};

/// Checks a single digraph; returns the disagreement if any.
std::optional<DualityCounterexample> check_duality_instance(std::span<const Digraph> F,
                                                            std::span<const Digraph> M,
                                                            const Digraph& d,
                                                            SearchLimits limits = {});

/// Runs over enumerate_digraphs(n) for n = 1..n_max in canonical order and
/// reports the first disagreement.  jobs > 1 splits each order across
/// threads; the result does not depend on jobs.
DualityReport verify_generalized_duality(std::span<const Digraph> F, std::span<const Digraph> M,
                                         int n_max, int jobs = 1, SearchLimits limits = {});

DualityReport verify_duality_pair(const Digraph& a, const Digraph& b, int n_max, int jobs = 1,
                                  SearchLimits limits = {});

/// Re-checks the witnesses and absences recorded in a counterexample.
bool counterexample_verifies(std::span<const Digraph> F, std::span<const Digraph> M,
                             const DualityCounterexample& c, SearchLimits limits = {});

}  // namespace orexp

#endif  // OREXP_DUALITY_HPP_
