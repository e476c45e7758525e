#ifndef OREXP_ORIENTATIONS_HPP_
#define OREXP_ORIENTATIONS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "orexp/graph.hpp"

namespace orexp {

/// Lazy, single-consumer stream over the orientations of a graph.
///
/// Order is lexicographic in the direction string d_0 d_1 ... d_{m-1}
/// (edge 0 most significant), with "forward" (u -> v for u < v) before
/// "backward".  With acyclic_only, orientations containing a directed
/// cycle are skipped.
class OrientationStream {
 public:
  OrientationStream(Graph g, bool acyclic_only);

  std::optional<Orientation> next();

 private:
  Graph graph_;
  bool acyclic_only_;
  std::uint64_t counter_ = 0;
  std::uint64_t end_;
};

OrientationStream orientations_of(const Graph& g, bool acyclic_only);
/// Materialized form of orientations_of, for small graphs.
std::vector<OrientedGraph> all_orientations(const Graph& g, bool acyclic_only);

}  // namespace orexp

#endif  // OREXP_ORIENTATIONS_HPP_
