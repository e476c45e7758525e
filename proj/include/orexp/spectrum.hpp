#ifndef OREXP_SPECTRUM_HPP_
#define OREXP_SPECTRUM_HPP_

// Cycle and path spectra of a forbidden set, and the bounded checks built on
// them: closure under multiples, reduction to connected members, and the
// disjoint-copies blow-up for overlap containment.

#include <optional>
#include <set>
#include <vector>

#include "orexp/search.hpp"
#include "orexp/words.hpp"

namespace orexp {

enum class SpectrumRoute {
  kAuto,        // language route from language_threshold(F) on, search below
  kBruteForce,  // admits_orientation for every length
  kLanguage,    // language route only; throws when k_min is below the threshold
};

/// max(4, m_F + 1).  From this length on a cycle meets members of F only
/// along paths, so its F-free orientations are exactly the periodic words of
/// L_{A_F}.
int language_threshold(const ForbiddenSet& F);

/// {k in [k_min, k_max] : C_k has an F-free (acyclic) orientation}, induced
/// containment.  Throws std::invalid_argument if a member is disconnected or
/// k_min < 3.
std::set<int> cycle_spectrum(const ForbiddenSet& F, int k_min, int k_max, bool acyclic,
                             SpectrumRoute route = SpectrumRoute::kAuto,
                             SearchLimits limits = {});

/// {k in [k_min, k_max] : the path with k edges has an F-free orientation}.
/// Paths are acyclic, so there is no acyclic flag.  The language route reads
/// word lengths of L_{A_F}; it needs connected members.
std::set<int> path_spectrum(const ForbiddenSet& F, int k_min, int k_max,
                            SpectrumRoute route = SpectrumRoute::kAuto,
                            SearchLimits limits = {});

/// The cyclic word read along 0, 1, ..., k-1, 0 of an orientation of
/// make_cycle(k).
Word cycle_word(const Digraph& oriented_cycle);

struct MultiplesReport {
  int k = 0;
  bool in_spectrum = false;
  /// l*k for l = 2..multiplier_max that were confirmed.
  std::vector<int> multiples;
  /// witnesses[i] orients the cycle of length multiples[i].
  std::vector<Word> witnesses;
  /// First l*k missing from the spectrum.
  std::optional<int> violation;
};

/// If C_k has an F-free (acyclic) orientation with cyclic word w, checks
/// that w^l orients C_{lk} F-freely for 2 <= l <= multiplier_max, with the
/// independent checker.  A power that fails is retried by search before a
/// violation is recorded.  Requires k >= max(4, m_F).  At k == m_F a
/// violation is possible: the k-cycle cannot contain an m_F-vertex path
/// member but its multiples can.  From language_threshold(F) on none occurs.
MultiplesReport multiples_property_check(const ForbiddenSet& F, int k, int multiplier_max,
                                         bool acyclic, SearchLimits limits = {});

struct ConnectedReduction {
  std::optional<ForbiddenSet> reduced;
  int candidates_tried = 0;
  int verified_up_to = 0;
};

/// Bounded search for an all-connected F1 with the same orientable graphs:
/// every disconnected member is replaced by one of its components, and a
/// candidate is accepted when admits_orientation agrees with F on every
/// graph with at most n_verify vertices.  A verification, not a decision
/// procedure.
ConnectedReduction reduce_to_connected(const ForbiddenSet& F, int n_verify, SearchMode mode,
                                       SearchLimits limits = {});

struct BlowupReport {
  bool admits_free = false;
  bool admits_overlap_free = false;
  /// Members whose components each fit in G.
  int relevant_members = 0;
  int max_components = 0;
  /// relevant_members * max_components.
  int copies = 0;
  bool union_admits_free = false;
};

/// For G with no F-overlap-free orientation, the union of
/// relevant_members * max_components copies of G has no F-free orientation:
/// each copy hosts an overlap of some member, and one member collects enough
/// copies to host all its components disjointly.
BlowupReport overlap_blowup(const Graph& g, const ForbiddenSet& F, bool acyclic,
                            SearchLimits limits = {});

}  // namespace orexp

#endif  // OREXP_SPECTRUM_HPP_
