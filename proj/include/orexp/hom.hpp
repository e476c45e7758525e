#ifndef OREXP_HOM_HPP_
#define OREXP_HOM_HPP_

#include <optional>
#include <span>
#include <vector>

#include "orexp/common.hpp"
#include "orexp/graph.hpp"

namespace orexp {

/// A vertex map under which every source arc lands on a target arc.
struct HomWitness {
  std::vector<Vertex> mapping;
};

bool is_homomorphism(const Digraph& from, const Digraph& to, std::span<const Vertex> mapping);

/// Backtracking over source vertices in decreasing degree order, with
/// arc-consistent domain pruning after each assignment.  Targets are limited
/// to 64 vertices.  Throws BudgetExceeded.
std::optional<HomWitness> hom_exists(const Digraph& from, const Digraph& to,
                                     SearchLimits limits = {});

bool is_hom_equivalent(const Digraph& a, const Digraph& b, SearchLimits limits = {});

/// Smallest induced subdigraph that d maps to.  Also checks that all
/// minimum retracts are isomorphic and throws std::logic_error otherwise.
/// Throws std::invalid_argument above max_order.
Digraph core_of(const Digraph& d, int max_order = 10);

/// Underlying graph is a forest and there is no digon.
bool is_oriented_forest(const Digraph& d);
/// Connected oriented forest.
bool is_oriented_tree(const Digraph& d);

/// Members D such that every D' in F with D' -> D also has D -> D'.
std::vector<Digraph> minimal_elements(std::span<const Digraph> F);

}  // namespace orexp

#endif  // OREXP_HOM_HPP_
