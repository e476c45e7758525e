#ifndef OREXP_CONTAINMENT_HPP_
#define OREXP_CONTAINMENT_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "orexp/graph.hpp"

namespace orexp {

/// Injective map from h into d whose image induces a copy of h (h < d).
/// Deterministic: the first embedding found by the backtracking order.
std::optional<std::vector<Vertex>> contains_induced(const Digraph& h, const Digraph& d);
std::optional<std::vector<Vertex>> contains_induced(const Graph& h, const Graph& g);

/// Pairwise relation matrix: bit 0 = (u,v) present, bit 1 = (v,u) present.
/// Undirected edges use both bits.
struct RelationPattern {
  int n = 0;
  std::vector<std::uint8_t> rel;

  static RelationPattern of(const Digraph& d);
  static RelationPattern of(const Graph& g);
  std::uint8_t at(Vertex u, Vertex v) const {
    return rel[static_cast<std::size_t>(u) * n + v];
  }
};

/// Calls visit(map) for every injective map small -> big that preserves the
/// pairwise relation exactly.  Stops early when visit returns false.
void for_each_induced_embedding(const RelationPattern& small, const RelationPattern& big,
                                const std::function<bool(std::span<const Vertex>)>& visit);

}  // namespace orexp

#endif  // OREXP_CONTAINMENT_HPP_
