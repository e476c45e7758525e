#include "orexp/hom.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "orexp/canonical.hpp"

namespace orexp {

bool is_homomorphism(const Digraph& from, const Digraph& to, std::span<const Vertex> mapping) {
  if (static_cast<int>(mapping.size()) != from.order()) return false;
  for (Vertex x : mapping)
    if (x < 0 || x >= to.order()) return false;
  return std::all_of(from.arcs().begin(), from.arcs().end(), [&](const VertexPair& a) {
    return to.has_arc(mapping[a.first], mapping[a.second]);
  });
}

namespace {

using Domain = std::uint64_t;

class HomSearch {
 public:
  HomSearch(const Digraph& from, const Digraph& to, SearchLimits limits)
      : from_(from), to_(to), limits_(limits),
        out_mask_(to.order(), 0), in_mask_(to.order(), 0) {
    for (auto [x, y] : to.arcs()) {
      out_mask_[x] |= Domain{1} << y;
      in_mask_[y] |= Domain{1} << x;
    }
    order_.resize(from.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return from.out_degree(a) + from.in_degree(a) > from.out_degree(b) + from.in_degree(b);
    });
  }

  std::optional<HomWitness> run() {
    const Domain all = to_.order() == 64 ? ~Domain{0} : (Domain{1} << to_.order()) - 1;
    std::vector<Domain> domains(from_.order(), all);
    if (!propagate(domains)) return std::nullopt;
    if (!assign(0, domains)) return std::nullopt;
    HomWitness w;
    for (Domain d : solution_) w.mapping.push_back(std::countr_zero(d));
    return w;
  }

 private:
  // Arc consistency over every source arc until nothing changes.
  bool propagate(std::vector<Domain>& dom) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [u, w] : from_.arcs()) {
        Domain keep_u = 0, keep_w = 0;
        for (Domain rest = dom[u]; rest; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          if (out_mask_[x] & dom[w]) keep_u |= Domain{1} << x;
        }
        for (Domain rest = dom[w]; rest; rest &= rest - 1) {
          int y = std::countr_zero(rest);
          if (in_mask_[y] & keep_u) keep_w |= Domain{1} << y;
        }
        if (keep_u == 0 || keep_w == 0) return false;
        if (keep_u != dom[u] || keep_w != dom[w]) {
          dom[u] = keep_u;
          dom[w] = keep_w;
          changed = true;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t depth, const std::vector<Domain>& dom) {
    if (++nodes_ > limits_.node_budget) throw BudgetExceeded(nodes_);
    if (depth == order_.size()) {
      solution_ = dom;
      return true;
    }
    Vertex v = order_[depth];
    for (Domain rest = dom[v]; rest; rest &= rest - 1) {
      std::vector<Domain> next = dom;
      next[v] = rest & (~rest + 1);
      if (propagate(next) && assign(depth + 1, next)) return true;
    }
    return false;
  }

  const Digraph& from_;
  const Digraph& to_;
  SearchLimits limits_;
  std::vector<Domain> out_mask_;
  std::vector<Domain> in_mask_;
  std::vector<Vertex> order_;
  std::vector<Domain> solution_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<HomWitness> hom_exists(const Digraph& from, const Digraph& to,
                                     SearchLimits limits) {
  if (to.order() > 64) throw std::invalid_argument("hom targets are limited to 64 vertices");
  if (from.order() == 0) return HomWitness{};
  if (to.order() == 0) return std::nullopt;
  return HomSearch(from, to, limits).run();
}

bool is_hom_equivalent(const Digraph& a, const Digraph& b, SearchLimits limits) {
  return hom_exists(a, b, limits).has_value() && hom_exists(b, a, limits).has_value();
}

Digraph core_of(const Digraph& d, int max_order) {
  const int n = d.order();
  if (n > max_order) throw std::invalid_argument("core_of limited to " + std::to_string(max_order) + " vertices");
  if (n == 0) return d;
  for (int size = 1; size <= n; ++size) {
    std::vector<Digraph> retracts;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<Vertex> subset;
      for (int v = 0; v < n; ++v)
        if (pick[v]) subset.push_back(v);
      Digraph sub = induced_subdigraph(d, subset);
      if (hom_exists(d, sub)) retracts.push_back(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (retracts.empty()) continue;
    for (const auto& r : retracts) {
      if (!is_isomorphic(r, retracts.front())) {
        throw std::logic_error("non-isomorphic minimum retracts");
      }
    }
    return retracts.front();
  }
  return d;
}

bool is_oriented_forest(const Digraph& d) {
  if (d.has_digon()) return false;
  Graph g = underlying(d);
  return static_cast<int>(g.size()) == g.order() - static_cast<int>(components(g).size());
}

bool is_oriented_tree(const Digraph& d) {
  return d.order() > 0 && is_oriented_forest(d) && is_connected(d);
}

std::vector<Digraph> minimal_elements(std::span<const Digraph> F) {
  std::vector<Digraph> out;
  for (const auto& D : F) {
    bool minimal = std::all_of(F.begin(), F.end(), [&](const Digraph& other) {
      return !hom_exists(other, D) || hom_exists(D, other).has_value();
    });
    if (minimal) out.push_back(D);
  }
  return out;
}

}  // namespace orexp
