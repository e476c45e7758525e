#include "orexp/containment.hpp"

#include <algorithm>
#include <array>

namespace orexp {

RelationPattern RelationPattern::of(const Digraph& d) {
  RelationPattern p;
  p.n = d.order();
  p.rel.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  for (auto [u, v] : d.arcs()) {
    p.rel[static_cast<std::size_t>(u) * p.n + v] |= 1;
    p.rel[static_cast<std::size_t>(v) * p.n + u] |= 2;
  }
  return p;
}

RelationPattern RelationPattern::of(const Graph& g) {
  RelationPattern p;
  p.n = g.order();
  p.rel.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  for (auto [u, v] : g.edges()) {
    p.rel[static_cast<std::size_t>(u) * p.n + v] = 3;
    p.rel[static_cast<std::size_t>(v) * p.n + u] = 3;
  }
  return p;
}

namespace {

// Per-vertex counts of each relation kind; an image must dominate its
// preimage in every kind.
std::vector<std::array<int, 4>> relation_degrees(const RelationPattern& p) {
  std::vector<std::array<int, 4>> deg(p.n, std::array<int, 4>{});
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v)
      if (u != v) ++deg[u][p.at(u, v)];
  return deg;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const RelationPattern& small, const RelationPattern& big,
                  const std::function<bool(std::span<const Vertex>)>& visit)
      : small_(small), big_(big), visit_(visit),
        small_deg_(relation_degrees(small)), big_deg_(relation_degrees(big)),
        image_(small.n, -1), used_(big.n, false) {
    order_vertices();
  }

  void run() {
    if (small_.n > big_.n) return;
    extend(0);
  }

 private:
  // Greedy order: most already-placed neighbours first, then by degree.
  void order_vertices() {
    std::vector<bool> placed(small_.n, false);
    auto degree = [&](int v) {
      return small_deg_[v][1] + small_deg_[v][2] + small_deg_[v][3];
    };
    for (int step = 0; step < small_.n; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < small_.n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : order_) links += small_.at(v, w) != 0 ? 1 : 0;
        if (links > best_links || (links == best_links && degree(v) > best_deg)) {
          best = v;
          best_links = links;
          best_deg = degree(v);
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool compatible(int v, int x) const {
    for (int k = 1; k < 4; ++k)
      if (big_deg_[x][k] < small_deg_[v][k]) return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    int v = order_[depth];
    for (int x = 0; x < big_.n; ++x) {
      if (used_[x] || !compatible(v, x)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int w = order_[i];
        ok = small_.at(v, w) == big_.at(x, image_[w]);
      }
      if (!ok) continue;
      used_[x] = true;
      image_[v] = x;
      bool go_on = extend(depth + 1);
      image_[v] = -1;
      used_[x] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const RelationPattern& small_;
  const RelationPattern& big_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<std::array<int, 4>> small_deg_;
  std::vector<std::array<int, 4>> big_deg_;
  std::vector<int> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

std::optional<std::vector<Vertex>> first_embedding(const RelationPattern& small,
                                                   const RelationPattern& big) {
  std::optional<std::vector<Vertex>> found;
  for_each_induced_embedding(small, big, [&](std::span<const Vertex> map) {
    found.emplace(map.begin(), map.end());
    return false;
  });
  return found;
}

}  // namespace

void for_each_induced_embedding(const RelationPattern& small, const RelationPattern& big,
                                const std::function<bool(std::span<const Vertex>)>& visit) {
  EmbeddingSearch(small, big, visit).run();
}

std::optional<std::vector<Vertex>> contains_induced(const Digraph& h, const Digraph& d) {
  return first_embedding(RelationPattern::of(h), RelationPattern::of(d));
}

std::optional<std::vector<Vertex>> contains_induced(const Graph& h, const Graph& g) {
  return first_embedding(RelationPattern::of(h), RelationPattern::of(g));
}

}  // namespace orexp
