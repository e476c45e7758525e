#include "orexp/oracles.hpp"

#include <functional>
#include <vector>

namespace orexp {

bool oracle_k_colourable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  std::vector<int> colour(g.order(), -1);
  std::function<bool(Vertex)> place = [&](Vertex v) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbours(v)) clash = clash || colour[w] == c;
      if (clash) continue;
      colour[v] = c;
      if (place(v + 1)) return true;
    }
    colour[v] = -1;
    return false;
  };
  return place(0);
}

bool oracle_chordal(const Graph& g) {
  std::vector<bool> alive(g.order(), true);
  for (int removed = 0; removed < g.order(); ++removed) {
    Vertex simplicial = -1;
    for (Vertex v = 0; v < g.order() && simplicial == -1; ++v) {
      if (!alive[v]) continue;
      std::vector<Vertex> nbrs;
      for (Vertex w : g.neighbours(v))
        if (alive[w]) nbrs.push_back(w);
      bool clique = true;
      for (std::size_t i = 0; i < nbrs.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nbrs.size() && clique; ++j)
          clique = g.adjacent(nbrs[i], nbrs[j]);
      if (clique) simplicial = v;
    }
    if (simplicial == -1) return false;
    alive[simplicial] = false;
  }
  return true;
}

}  // namespace orexp
