#include "orexp/orientations.hpp"

#include <stdexcept>

namespace orexp {

OrientationStream::OrientationStream(Graph g, bool acyclic_only)
    : graph_(std::move(g)), acyclic_only_(acyclic_only) {
  if (graph_.size() >= 63) throw std::invalid_argument("too many edges to enumerate");
  end_ = std::uint64_t{1} << graph_.size();
}

std::optional<Orientation> OrientationStream::next() {
  const std::size_t m = graph_.size();
  while (counter_ < end_) {
    std::uint64_t code = counter_++;
    std::vector<bool> forward(m);
    for (std::size_t i = 0; i < m; ++i) forward[i] = ((code >> (m - 1 - i)) & 1U) == 0;
    Orientation o(graph_, std::move(forward));
    if (acyclic_only_ && !is_acyclic(o.digraph())) continue;
    return o;
  }
  return std::nullopt;
}

OrientationStream orientations_of(const Graph& g, bool acyclic_only) {
  return OrientationStream(g, acyclic_only);
}

std::vector<OrientedGraph> all_orientations(const Graph& g, bool acyclic_only) {
  std::vector<OrientedGraph> out;
  auto stream = orientations_of(g, acyclic_only);
  while (auto o = stream.next()) out.push_back(o->digraph());
  return out;
}

}  // namespace orexp
