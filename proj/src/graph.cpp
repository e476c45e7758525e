#include "orexp/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orexp {

namespace {

void check_endpoint(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n));
  }
}

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

}  // namespace

Graph::Graph(int n)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0)) {
  check_order(n);
  nbrs_.resize(n);
}

Graph::Graph(int n, std::span<const VertexPair> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_endpoint(n, u);
    check_endpoint(n, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), VertexPair{u, v});
  if (it == edges_.end() || *it != VertexPair{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

Digraph::Digraph(int n)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0)) {
  check_order(n);
  out_.resize(n);
  in_.resize(n);
}

Digraph::Digraph(int n, std::span<const VertexPair> arcs) : Digraph(n) {
  arcs_.assign(arcs.begin(), arcs.end());
  for (auto [u, v] : arcs_) {
    check_endpoint(n, u);
    check_endpoint(n, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("duplicate arc");
  }
  for (auto [u, v] : arcs_) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_digon() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [this](const VertexPair& a) { return has_arc(a.second, a.first); });
}

OrientedGraph::OrientedGraph(int n, std::span<const VertexPair> arcs)
    : Digraph(n, arcs) {
  if (has_digon()) throw std::invalid_argument("oriented graph with a digon");
}

OrientedGraph::OrientedGraph(Digraph d) : Digraph(std::move(d)) {
  if (has_digon()) throw std::invalid_argument("oriented graph with a digon");
}

Orientation::Orientation(Graph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_.size()) {
    throw std::invalid_argument("orientation needs one direction per edge");
  }
}

VertexPair Orientation::arc(std::size_t edge) const {
  auto [u, v] = base_.edges()[edge];
  return forward_[edge] ? VertexPair{u, v} : VertexPair{v, u};
}

OrientedGraph Orientation::digraph() const {
  std::vector<VertexPair> arcs;
  arcs.reserve(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) arcs.push_back(arc(i));
  return OrientedGraph(base_.order(), arcs);
}

Graph make_path(int edges) {
  if (edges < 0) throw std::invalid_argument("path with negative length");
  std::vector<VertexPair> e;
  for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
  return Graph(edges + 1, e);
}

Graph make_cycle(int edges) {
  if (edges < 3) throw std::invalid_argument("cycles need at least 3 edges");
  std::vector<VertexPair> e;
  for (int i = 0; i < edges; ++i) e.emplace_back(i, (i + 1) % edges);
  return Graph(edges, e);
}

Graph coupling(int r, int s) {
  if (r < 3 || s < 3) throw std::invalid_argument("coupled cycles need length >= 3");
  std::vector<VertexPair> e;
  for (int i = 0; i < r; ++i) e.emplace_back(i, (i + 1) % r);
  // second cycle: 0, r, r+1, ..., r+s-2, back to 0
  int prev = 0;
  for (int i = 0; i < s - 1; ++i) {
    e.emplace_back(prev, r + i);
    prev = r + i;
  }
  e.emplace_back(prev, 0);
  return Graph(r + s - 1, e);
}

Graph complete_graph(int n) {
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<VertexPair> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

Graph disjoint_copies(const Graph& g, int copies) {
  Graph out(0);
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

OrientedGraph directed_path(int vertices) {
  if (vertices < 1) throw std::invalid_argument("directed path needs a vertex");
  std::vector<VertexPair> arcs;
  for (int i = 0; i + 1 < vertices; ++i) arcs.emplace_back(i, i + 1);
  return OrientedGraph(vertices, arcs);
}

OrientedGraph directed_cycle(int vertices) {
  if (vertices < 3) throw std::invalid_argument("directed cycle needs 3 vertices");
  std::vector<VertexPair> arcs;
  for (int i = 0; i < vertices; ++i) arcs.emplace_back(i, (i + 1) % vertices);
  return OrientedGraph(vertices, arcs);
}

OrientedGraph transitive_tournament(int vertices) {
  std::vector<VertexPair> arcs;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) arcs.emplace_back(u, v);
  return OrientedGraph(vertices, arcs);
}

OrientedGraph out_star_b1() { return OrientedGraph(3, {{0, 1}, {0, 2}}); }

OrientedGraph single_arc() { return OrientedGraph(2, {{0, 1}}); }

Digraph digon() { return Digraph(2, {{0, 1}, {1, 0}}); }

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<VertexPair> arcs = a.arcs();
  for (auto [u, v] : b.arcs()) arcs.emplace_back(u + a.order(), v + a.order());
  return Digraph(a.order() + b.order(), arcs);
}

OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b) {
  return OrientedGraph(disjoint_union(static_cast<const Digraph&>(a),
                                      static_cast<const Digraph&>(b)));
}

Graph underlying(const Digraph& d) {
  std::vector<VertexPair> e;
  for (auto [u, v] : d.arcs()) {
    if (u < v || !d.has_arc(v, u)) e.emplace_back(u, v);
  }
  return Graph(d.order(), e);
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<VertexPair> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (i != j && d.has_arc(vertices[i], vertices[j]))
        arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Digraph(static_cast<int>(vertices.size()), arcs);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<VertexPair> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(vertices.size()), e);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    auto id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<Vertex> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Digraph& d) {
  return components(underlying(d));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected(const Digraph& d) { return components(d).size() <= 1; }

bool is_acyclic(const Digraph& d) {
  std::vector<int> indeg(d.order());
  for (Vertex v = 0; v < d.order(); ++v) indeg[v] = d.in_degree(v);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < d.order(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++removed;
    for (Vertex w : d.out_neighbours(v))
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return removed == d.order();
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_oriented_path(const Digraph& d) {
  if (d.order() == 0 || d.has_digon()) return false;
  Graph g = underlying(d);
  if (static_cast<int>(g.size()) != g.order() - 1 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace orexp
