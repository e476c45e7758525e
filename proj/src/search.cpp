#include "orexp/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "orexp/canonical.hpp"
#include "orexp/containment.hpp"
#include "orexp/hom.hpp"

namespace orexp {

ForbiddenSet::ForbiddenSet(std::vector<OrientedGraph> members) {
  for (auto& m : members) {
    if (m.order() == 0) throw std::invalid_argument("forbidden graphs need a vertex");
    bool duplicate = std::any_of(members_.begin(), members_.end(),
                                 [&](const OrientedGraph& kept) { return is_isomorphic(kept, m); });
    if (duplicate) continue;
    max_order_ = std::max(max_order_, m.order());
    all_connected_ = all_connected_ && is_connected(m);
    members_.push_back(std::move(m));
  }
}

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::kInduced: return "induced";
    case Containment::kHom: return "hom";
    case Containment::kOverlap: return "overlap";
  }
  return "?";
}

Containment parse_containment(std::string_view text) {
  if (text == "induced") return Containment::kInduced;
  if (text == "hom") return Containment::kHom;
  if (text == "overlap") return Containment::kOverlap;
  throw std::invalid_argument("unknown containment mode '" + std::string(text) + "'");
}

namespace {

void add_images(const OrientedGraph& h, std::set<CanonicalCode>& out) {
  const int n = h.order();
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("homomorphic image closure limited to " +
                                std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  // Restricted growth strings enumerate the set partitions of V(h).
  std::vector<int> cls(n, 0);
  while (true) {
    bool independent = std::all_of(h.arcs().begin(), h.arcs().end(), [&](const VertexPair& a) {
      return cls[a.first] != cls[a.second];
    });
    int q = n == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    if (independent) {
      std::set<VertexPair> arcs;
      for (auto [a, b] : h.arcs()) arcs.emplace(cls[a], cls[b]);
      bool digon = std::any_of(arcs.begin(), arcs.end(), [&](const VertexPair& a) {
        return arcs.count({a.second, a.first}) > 0;
      });
      if (!digon) {
        std::vector<VertexPair> free_pairs;
        for (int x = 0; x < q; ++x)
          for (int y = x + 1; y < q; ++y)
            if (!arcs.count({x, y}) && !arcs.count({y, x})) free_pairs.emplace_back(x, y);
        std::vector<int> choice(free_pairs.size(), 0);
        while (true) {
          std::vector<VertexPair> all(arcs.begin(), arcs.end());
          for (std::size_t i = 0; i < free_pairs.size(); ++i) {
            auto [x, y] = free_pairs[i];
            if (choice[i] == 1) all.emplace_back(x, y);
            if (choice[i] == 2) all.emplace_back(y, x);
          }
          out.insert(canonical_code(Digraph(q, all)));
          std::size_t pos = 0;
          while (pos < choice.size() && ++choice[pos] == 3) choice[pos++] = 0;
          if (pos == choice.size()) break;
        }
      }
    }
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int prefix_max = *std::max_element(cls.begin(), cls.begin() + i);
      if (cls[i] <= prefix_max) break;
      --i;
    }
    if (i <= 0) break;
    ++cls[i];
    std::fill(cls.begin() + i + 1, cls.end(), 0);
  }
}

}  // namespace

ForbiddenSet homomorphic_image_closure(const ForbiddenSet& F) {
  std::set<CanonicalCode> codes;
  for (const auto& h : F.members()) add_images(h, codes);
  std::vector<OrientedGraph> members;
  for (const auto& code : codes) members.emplace_back(from_code(code));
  return ForbiddenSet(std::move(members));
}

bool overlap_contains(const Digraph& h, const Digraph& d) {
  for (const auto& comp : components(h)) {
    if (!contains_induced(induced_subdigraph(h, comp), d)) return false;
  }
  return true;
}

bool is_forbidden_free(const Digraph& d, const ForbiddenSet& F, Containment c) {
  for (const auto& h : F.members()) {
    switch (c) {
      case Containment::kInduced:
        if (contains_induced(h, d)) return false;
        break;
      case Containment::kHom:
        if (hom_exists(h, d)) return false;
        break;
      case Containment::kOverlap:
        if (overlap_contains(h, d)) return false;
        break;
    }
  }
  return true;
}

namespace {

struct Literal {
  int edge;
  bool forward;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// An obstruction is present when every one of its groups has a realized
// placement.  Induced containment uses one group per member; overlap
// containment one group per distinct component.
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, const ForbiddenSet& F, SearchMode mode, SearchLimits limits)
      : g_(g), mode_(mode), limits_(limits), state_(g.size(), kUnset),
        edge_literals_(g.size()), assigned_degree_(g.order(), 0), out_(g.order()) {
    const ForbiddenSet* effective = &F;
    if (mode.containment == Containment::kHom) {
      closure_storage_ = homomorphic_image_closure(F);
      effective = &closure_storage_;
    }
    for (const auto& member : effective->members()) add_obstruction(member);
  }

  std::optional<std::vector<bool>> run() {
    if (triggered_) return std::nullopt;
    if (!solve()) return std::nullopt;
    std::vector<bool> forward(g_.size());
    for (std::size_t e = 0; e < g_.size(); ++e) forward[e] = state_[e] == kForward;
    return forward;
  }

  std::uint64_t work() const { return nodes_; }

 private:
  static constexpr int kUnset = 0, kForward = 1, kBackward = 2;

  void add_obstruction(const OrientedGraph& member) {
    std::vector<Digraph> parts;
    if (mode_.containment == Containment::kOverlap) {
      for (const auto& comp : components(member)) {
        Digraph part = induced_subdigraph(member, comp);
        bool seen = std::any_of(parts.begin(), parts.end(),
                                [&](const Digraph& p) { return is_isomorphic(p, part); });
        if (!seen) parts.push_back(std::move(part));
      }
    } else {
      parts.push_back(member);
    }

    std::vector<std::set<std::vector<Literal>>> group_placements;
    RelationPattern host = RelationPattern::of(g_);
    for (const auto& part : parts) {
      std::set<std::vector<Literal>> placements;
      for_each_induced_embedding(
          RelationPattern::of(underlying(part)), host, [&](std::span<const Vertex> map) {
            std::vector<Literal> lits;
            for (auto [a, b] : part.arcs()) {
              int e = g_.edge_index(map[a], map[b]);
              lits.push_back({e, map[a] < map[b]});
            }
            std::sort(lits.begin(), lits.end());
            placements.insert(std::move(lits));
            return true;
          });
      if (placements.empty()) return;  // can never be present
      group_placements.push_back(std::move(placements));
    }

    const int obstruction = static_cast<int>(obstruction_groups_.size());
    obstruction_groups_.push_back(static_cast<int>(group_placements.size()));
    obstruction_realized_.push_back(0);
    for (auto& placements : group_placements) {
      const int group = static_cast<int>(group_realized_.size());
      group_realized_.push_back(0);
      group_obstruction_.push_back(obstruction);
      for (const auto& lits : placements) {
        const int id = static_cast<int>(placement_size_.size());
        placement_size_.push_back(static_cast<int>(lits.size()));
        placement_matched_.push_back(0);
        placement_broken_.push_back(0);
        placement_group_.push_back(group);
        for (const auto& lit : lits) edge_literals_[lit.edge].push_back({id, lit.forward});
        if (lits.empty()) realize(id);
      }
    }
  }

  void realize(int placement) {
    int group = placement_group_[placement];
    if (group_realized_[group]++ == 0) {
      int obs = group_obstruction_[group];
      if (++obstruction_realized_[obs] == obstruction_groups_[obs]) ++triggered_;
    }
  }

  void unrealize(int placement) {
    int group = placement_group_[placement];
    if (--group_realized_[group] == 0) {
      int obs = group_obstruction_[group];
      if (obstruction_realized_[obs]-- == obstruction_groups_[obs]) --triggered_;
    }
  }

  void apply(int e, bool forward) {
    for (auto [id, want] : edge_literals_[e]) {
      if (want == forward) {
        if (++placement_matched_[id] == placement_size_[id] && placement_broken_[id] == 0) realize(id);
      } else {
        ++placement_broken_[id];
      }
    }
  }

  void undo(int e, bool forward) {
    for (auto [id, want] : edge_literals_[e]) {
      if (want == forward) {
        if (placement_matched_[id]-- == placement_size_[id] && placement_broken_[id] == 0) unrealize(id);
      } else {
        --placement_broken_[id];
      }
    }
  }

  bool reaches(Vertex from, Vertex to) {
    std::vector<bool> seen(g_.order(), false);
    std::vector<Vertex> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (Vertex w : out_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  int pick_edge() const {
    int best = -1, best_score = -1;
    for (std::size_t e = 0; e < g_.size(); ++e) {
      if (state_[e] != kUnset) continue;
      auto [u, v] = g_.edges()[e];
      int score = assigned_degree_[u] + assigned_degree_[v];
      if (score > best_score) {
        best = static_cast<int>(e);
        best_score = score;
      }
    }
    return best;
  }

  bool solve() {
    if (++nodes_ > limits_.node_budget) throw BudgetExceeded(nodes_);
    int e = pick_edge();
    if (e == -1) return true;
    auto [u, v] = g_.edges()[e];
    ++assigned_degree_[u];
    ++assigned_degree_[v];
    for (bool forward : {true, false}) {
      Vertex tail = forward ? u : v, head = forward ? v : u;
      if (mode_.acyclic && reaches(head, tail)) continue;
      state_[e] = forward ? kForward : kBackward;
      apply(e, forward);
      if (triggered_ == 0) {
        out_[tail].push_back(head);
        bool found = solve();
        out_[tail].pop_back();
        if (found) return true;
      }
      undo(e, forward);
      state_[e] = kUnset;
    }
    --assigned_degree_[u];
    --assigned_degree_[v];
    return false;
  }

  const Graph& g_;
  SearchMode mode_;
  SearchLimits limits_;
  ForbiddenSet closure_storage_;
  std::vector<int> state_;
  std::vector<std::vector<std::pair<int, bool>>> edge_literals_;
  std::vector<int> placement_size_, placement_matched_, placement_broken_, placement_group_;
  std::vector<int> group_realized_, group_obstruction_;
  std::vector<int> obstruction_groups_, obstruction_realized_;
  int triggered_ = 0;
  std::vector<int> assigned_degree_;
  std::vector<std::vector<Vertex>> out_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OrientationVerdict admits_orientation(const Graph& g, const ForbiddenSet& F, SearchMode mode,
                                      SearchLimits limits) {
  OrientationSearch search(g, F, mode, limits);
  auto forward = search.run();
  OrientationVerdict verdict;
  verdict.work = search.work();
  if (!forward) return verdict;
  Orientation witness(g, std::move(*forward));
  OrientedGraph d = witness.digraph();
  if (!is_forbidden_free(d, F, mode.containment) || (mode.acyclic && !is_acyclic(d))) {
    throw std::logic_error("orientation search produced an invalid witness");
  }
  verdict.admits = true;
  verdict.witness = std::move(witness);
  return verdict;
}

}  // namespace orexp
