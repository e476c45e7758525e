#ifndef OREXP_ORACLES_HPP_
#define OREXP_ORACLES_HPP_

// Independent reference deciders used to cross-check the orientation search.

#include "orexp/graph.hpp"

namespace orexp {

/// Proper colouring with at most k colours, by backtracking.
bool oracle_k_colourable(const Graph& g, int k);

/// Repeatedly removes a simplicial vertex; chordal iff the graph empties.
bool oracle_chordal(const Graph& g);

}  // namespace orexp

#endif  // OREXP_ORACLES_HPP_
