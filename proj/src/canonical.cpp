#include "orexp/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "orexp/containment.hpp"

namespace orexp {

namespace {

// Bits are laid out by growing leading principal submatrix: for p = 1..n-1
// the pairs (0,p),(p,0),(1,p),(p,1),...,(p-1,p),(p,p-1).  A labeling of
// positions 0..p therefore fixes a prefix of the code, which the
// branch-and-bound below relies on.
constexpr int pair_index(int i, int j) {
  // i != j; p = max(i, j), q = min(i, j)
  int p = i > j ? i : j;
  int q = i > j ? j : i;
  return p * (p - 1) + 2 * q + (i > j ? 1 : 0);
}

struct Canonizer {
  int n = 0;
  int total_bits = 0;
  std::array<std::array<bool, kMaxCanonicalOrder>, kMaxCanonicalOrder> arc{};
  std::array<int, kMaxCanonicalOrder> colour{};
  std::array<int, kMaxCanonicalOrder> position_class{};
  std::array<int, kMaxCanonicalOrder> at{};  // at[position] = vertex
  std::array<bool, kMaxCanonicalOrder> used{};
  std::uint64_t best = 0;
  bool have_best = false;
  std::array<int, kMaxCanonicalOrder> best_at{};

  std::uint64_t bit(int idx) const {
    return std::uint64_t{1} << (total_bits - 1 - idx);
  }

  std::uint64_t prefix_mask(int p) const {
    // indices [0, (p+1)p) are fixed once positions 0..p are placed
    int fixed = (p + 1) * p;
    if (fixed == 0) return 0;
    if (fixed >= 64) return ~std::uint64_t{0};
    std::uint64_t ones = (std::uint64_t{1} << fixed) - 1;
    return ones << (total_bits - fixed);
  }

  std::uint64_t row_bits(int p) const {
    std::uint64_t out = 0;
    int vp = at[p];
    for (int q = 0; q < p; ++q) {
      int vq = at[q];
      if (arc[vq][vp]) out |= bit(pair_index(q, p));
      if (arc[vp][vq]) out |= bit(pair_index(p, q));
    }
    return out;
  }

  void search(int p, std::uint64_t partial) {
    if (p == n) {
      if (!have_best || partial > best) {
        best = partial;
        best_at = at;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != position_class[p]) continue;
      used[v] = true;
      at[p] = v;
      std::uint64_t next = partial | row_bits(p);
      if (!have_best || (next & prefix_mask(p)) >= (best & prefix_mask(p))) {
        search(p + 1, next);
      }
      used[v] = false;
    }
  }

  // Colour refinement: start from (out, in, digon) degrees and split by the
  // multiset of (relation, neighbour colour) until stable.  Colours are
  // ranked by their signature, so the class order is labeling-invariant.
  void refine() {
    using Signature = std::vector<int>;
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      int out = 0, in = 0, both = 0;
      for (int w = 0; w < n; ++w) {
        if (arc[v][w] && arc[w][v]) ++both;
        else if (arc[v][w]) ++out;
        else if (arc[w][v]) ++in;
      }
      sig[v] = {out, in, both};
    }
    int classes = rank(sig);
    while (true) {
      for (int v = 0; v < n; ++v) {
        std::vector<int> rel;
        for (int w = 0; w < n; ++w) {
          int r = (arc[v][w] ? 1 : 0) | (arc[w][v] ? 2 : 0);
          if (r != 0) rel.push_back(r * 64 + colour[w]);
        }
        std::sort(rel.begin(), rel.end());
        sig[v] = {colour[v]};
        sig[v].insert(sig[v].end(), rel.begin(), rel.end());
      }
      int next = rank(sig);
      if (next == classes) break;
      classes = next;
    }
  }

  // Larger signatures get smaller colour ids so that dense vertices come
  // first, which suits a maximum code.
  int rank(const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v], std::greater<>()) -
          distinct.begin());
    }
    return static_cast<int>(distinct.size());
  }

  void run() {
    total_bits = n * (n - 1);
    refine();
    std::array<int, kMaxCanonicalOrder> sorted{};
    for (int v = 0; v < n; ++v) sorted[v] = colour[v];
    std::sort(sorted.begin(), sorted.begin() + n);
    for (int p = 0; p < n; ++p) position_class[p] = sorted[p];
    search(0, 0);
  }
};

Canonizer make_canonizer(const Digraph& d) {
  if (d.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical form limited to " +
                                std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  Canonizer c;
  c.n = d.order();
  for (auto [u, v] : d.arcs()) c.arc[u][v] = true;
  c.run();
  return c;
}

Digraph symmetric(const Graph& g) {
  std::vector<VertexPair> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), arcs);
}

}  // namespace

CanonicalCode canonical_code(const Digraph& d) {
  return {d.order(), make_canonizer(d).best};
}

CanonicalCode canonical_code(const Graph& g) { return canonical_code(symmetric(g)); }

Digraph from_code(const CanonicalCode& code) {
  int n = code.order;
  int total = n * (n - 1);
  std::vector<VertexPair> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (code.bits >> (total - 1 - pair_index(i, j))) & 1U)
        arcs.emplace_back(i, j);
  return Digraph(n, arcs);
}

Digraph canonical_form(const Digraph& d) { return from_code(canonical_code(d)); }

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() <= kMaxCanonicalOrder) return canonical_code(a) == canonical_code(b);
  return contains_induced(a, b).has_value();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return is_isomorphic(symmetric(a), symmetric(b));
}

std::uint64_t automorphism_count(const Digraph& d) {
  std::vector<int> perm(d.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = std::all_of(d.arcs().begin(), d.arcs().end(), [&](const VertexPair& a) {
      return d.has_arc(perm[a.first], perm[a.second]);
    });
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

std::vector<CanonicalCode> extend_universe(const std::vector<CanonicalCode>& smaller,
                                           int n, bool oriented_only, bool symmetric_only) {
  std::set<CanonicalCode> found;
  const int options = symmetric_only ? 2 : (oriented_only ? 3 : 4);
  const Vertex fresh = n - 1;
  for (const auto& code : smaller) {
    Digraph base = from_code(code);
    std::vector<int> choice(n - 1, 0);
    while (true) {
      std::vector<VertexPair> arcs = base.arcs();
      for (Vertex j = 0; j < n - 1; ++j) {
        int c = choice[j];
        if (symmetric_only) {
          if (c == 1) {
            arcs.emplace_back(j, fresh);
            arcs.emplace_back(fresh, j);
          }
          continue;
        }
        if (c == 1 || c == 3) arcs.emplace_back(j, fresh);
        if (c == 2 || c == 3) arcs.emplace_back(fresh, j);
      }
      found.insert(canonical_code(Digraph(n, arcs)));
      int pos = 0;
      while (pos < n - 1 && ++choice[pos] == options) choice[pos++] = 0;
      if (pos == n - 1) break;
    }
  }
  return {found.begin(), found.end()};
}

// kind: 0 digraphs, 1 oriented graphs, 2 graphs (as symmetric digraphs)
const std::vector<CanonicalCode>& universe_codes(int n, int kind) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<CanonicalCode>> cache;
  std::lock_guard lock(mutex);
  // Build bottom-up without recursion so the lock is taken once.
  for (int k = 1; k <= n; ++k) {
    auto key = std::make_pair(k, kind);
    if (cache.count(key)) continue;
    if (k == 1) {
      cache[key] = {CanonicalCode{1, 0}};
      continue;
    }
    cache[key] = extend_universe(cache.at({k - 1, kind}), k, kind == 1, kind == 2);
  }
  return cache.at({n, kind});
}

}  // namespace

std::vector<Digraph> enumerate_digraphs(int n, bool oriented_only, int bound) {
  if (n < 1) throw std::invalid_argument("universe order must be positive");
  if (n > bound || n > kMaxCanonicalOrder) {
    throw std::invalid_argument("universe order " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  }
  std::vector<Digraph> out;
  for (const auto& code : universe_codes(n, oriented_only ? 1 : 0))
    out.push_back(from_code(code));
  return out;
}

std::vector<Graph> enumerate_graphs(int n, int bound) {
  if (n < 1) throw std::invalid_argument("universe order must be positive");
  if (n > bound || n > kMaxCanonicalOrder) {
    throw std::invalid_argument("universe order " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  }
  std::vector<Graph> out;
  for (const auto& code : universe_codes(n, 2)) out.push_back(underlying(from_code(code)));
  return out;
}

}  // namespace orexp
