#ifndef OREXP_GRAPH_HPP_
#define OREXP_GRAPH_HPP_

// Immutable graph values on dense vertices 0..n-1.
//
// Graph         undirected, loopless, simple.
// Digraph       loopless, no parallel arcs; symmetric pairs (digons) allowed.
// OrientedGraph a Digraph without digons.
// Orientation   a Graph plus one direction per edge.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orexp/common.hpp"

namespace orexp {

using VertexPair = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops, duplicates or out-of-range
  /// endpoints.  Edges are stored normalized (u < v) and sorted.
  Graph(int n, std::span<const VertexPair> edges);
  Graph(int n, std::initializer_list<VertexPair> edges)
      : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbours(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Throws std::invalid_argument on loops, duplicate arcs or out-of-range
  /// endpoints.  Arcs are stored sorted.
  Digraph(int n, std::span<const VertexPair> arcs);
  Digraph(int n, std::initializer_list<VertexPair> arcs)
      : Digraph(n, std::span<const VertexPair>(arcs.begin(), arcs.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<VertexPair>& arcs() const noexcept { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& out_neighbours(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbours(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  bool has_digon() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> arcs_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

class OrientedGraph : public Digraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n) : Digraph(n) {}
  /// Throws std::invalid_argument if both (u,v) and (v,u) are present.
  OrientedGraph(int n, std::span<const VertexPair> arcs);
  OrientedGraph(int n, std::initializer_list<VertexPair> arcs)
      : OrientedGraph(n,
                      std::span<const VertexPair>(arcs.begin(), arcs.size())) {}
  explicit OrientedGraph(Digraph d);
};

class Orientation {
 public:
  /// forward[i] == true directs base.edges()[i] = {u,v} (u < v) as u -> v.
  Orientation(Graph base, std::vector<bool> forward);

  const Graph& base() const noexcept { return base_; }
  bool forward(std::size_t edge) const { return forward_[edge]; }
  const std::vector<bool>& directions() const noexcept { return forward_; }
  /// The arc chosen for edge i.
  VertexPair arc(std::size_t edge) const;
  OrientedGraph digraph() const;

 private:
  Graph base_;
  std::vector<bool> forward_;
};

// Generators.  Paths and cycles are indexed by edge count; directed paths
// and tournaments by vertex count, matching P->_k / TT_k notation.
Graph make_path(int edges);
Graph make_cycle(int edges);
/// Two cycles glued at vertex 0; throws for lengths below 3.
Graph coupling(int r, int s);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int copies);

OrientedGraph directed_path(int vertices);
OrientedGraph directed_cycle(int vertices);
OrientedGraph transitive_tournament(int vertices);
/// ({0,1,2}, {(0,1),(0,2)}): the out-star that forbids non-chordal
/// acyclic orientations.
OrientedGraph out_star_b1();
OrientedGraph single_arc();
Digraph digon();
Digraph disjoint_union(const Digraph& a, const Digraph& b);
OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b);

Graph underlying(const Digraph& d);
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Vertex sets of connected components (of the underlying graph), each
/// sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
std::vector<std::vector<Vertex>> components(const Digraph& d);
bool is_connected(const Graph& g);
bool is_connected(const Digraph& d);

/// True iff d has no directed cycle (a digon counts as one).
bool is_acyclic(const Digraph& d);
/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// True iff the underlying graph is a path (a single vertex counts) and d
/// has no digon.
bool is_oriented_path(const Digraph& d);

}  // namespace orexp

#endif  // OREXP_GRAPH_HPP_
