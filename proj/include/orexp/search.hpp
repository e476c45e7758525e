#ifndef OREXP_SEARCH_HPP_
#define OREXP_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "orexp/common.hpp"
#include "orexp/graph.hpp"

namespace orexp {

/// A finite set F of forbidden oriented graphs.  Members are kept pairwise
/// non-isomorphic (isomorphic duplicates are dropped on construction).
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  /// Throws std::invalid_argument for a member with no vertices.
  explicit ForbiddenSet(std::vector<OrientedGraph> members);

  const std::vector<OrientedGraph>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  /// m_F: the largest member order (0 when empty).
  int max_order() const noexcept { return max_order_; }
  bool all_connected() const noexcept { return all_connected_; }

 private:
  std::vector<OrientedGraph> members_;
  int max_order_ = 0;
  bool all_connected_ = true;
};

/// induced: no member is an induced subdigraph (Forb_e).
/// hom:     no member maps homomorphically in (Forb).
/// overlap: no member has all of its components embedded, possibly on
///          overlapping vertex sets.
enum class Containment { kInduced, kHom, kOverlap };

struct SearchMode {
  Containment containment = Containment::kInduced;
  /// Additionally forbid directed cycles (Forb_e*).
  bool acyclic = false;
};

std::string_view to_string(Containment c);
/// Parses "induced", "hom" or "overlap"; throws std::invalid_argument.
Containment parse_containment(std::string_view text);

struct OrientationVerdict {
  bool admits = false;
  std::optional<Orientation> witness;
  std::uint64_t work = 0;
};

/// All oriented graphs K (up to isomorphism) admitting a vertex-surjective
/// homomorphism from some member: quotients by independent vertex classes
/// plus any added arcs, digons excluded.  Members are limited to 8
/// vertices.
ForbiddenSet homomorphic_image_closure(const ForbiddenSet& F);

/// Every connected component of h embeds (induced) in d.
bool overlap_contains(const Digraph& h, const Digraph& d);

/// Independent checker: d avoids every member of F under c.  Uses
/// contains_induced / overlap_contains / hom_exists directly.
bool is_forbidden_free(const Digraph& d, const ForbiddenSet& F, Containment c);

/// Decides whether g has an F-free orientation under mode.
///
/// Edges are oriented one at a time, most-constrained first (most oriented
/// neighbouring edges).  Every induced placement of a member's underlying
/// graph in g becomes a conjunction of edge directions; a placement is
/// checked only when its last edge is decided.  Acyclic mode rejects an arc
/// that closes a directed cycle.  Hom mode searches against
/// homomorphic_image_closure(F) with induced semantics.
///
/// A positive verdict carries a witness re-verified by is_forbidden_free.
/// Throws BudgetExceeded when the node budget runs out.
OrientationVerdict admits_orientation(const Graph& g, const ForbiddenSet& F, SearchMode mode,
                                      SearchLimits limits = {});

}  // namespace orexp

#endif  // OREXP_SEARCH_HPP_
