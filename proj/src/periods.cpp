#include "orexp/periods.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "orexp/automaton.hpp"

namespace orexp {

bool PeriodStructure::predicts(long k) const {
  if (gcd_r == 0 || k < 1 || k % gcd_r != 0) return false;
  return !std::binary_search(exceptions.begin(), exceptions.end(), k);
}

namespace {

struct LabeledEdge {
  int from;
  int to;
  Letter letter;
};

struct Component {
  std::vector<int> states;
  std::vector<LabeledEdge> internal;
};

// Tarjan over the full-state subgraph.
std::vector<Component> strong_components(const FactorAutomaton& aut) {
  const int n = aut.state_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<Component> out;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Letter x : {Letter::Fwd, Letter::Bwd}) {
      int w = aut.step(v, x);
      if (w == FactorAutomaton::kDead) continue;
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Component c;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = static_cast<int>(out.size());
        c.states.push_back(w);
      } while (w != v);
      out.push_back(std::move(c));
    }
  };
  for (int s : aut.full_states())
    if (index[s] == -1) visit(s);

  for (int s : aut.full_states()) {
    for (Letter x : {Letter::Fwd, Letter::Bwd}) {
      int t = aut.step(s, x);
      if (t != FactorAutomaton::kDead && comp[t] == comp[s])
        out[comp[s]].internal.push_back({s, t, x});
    }
  }
  return out;
}

long component_period(const Component& c, int state_count) {
  std::vector<long> level(state_count, -1);
  std::deque<int> queue{c.states.front()};
  level[c.states.front()] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& e : c.internal) {
      if (e.from == u && level[e.to] == -1) {
        level[e.to] = level[u] + 1;
        queue.push_back(e.to);
      }
    }
  }
  long d = 0;
  for (const auto& e : c.internal) d = std::gcd(d, std::abs(level[e.from] + 1 - level[e.to]));
  return d;
}

}  // namespace

PeriodStructure period_structure(const FactorSet& A, bool nonconstant_only) {
  FactorAutomaton aut(A);
  PeriodStructure ps;
  ps.transitive = is_transitive(A);
  ps.nonconstant_variant = nonconstant_only;

  std::set<long> live_periods;
  long bound = 300;
  for (const auto& c : strong_components(aut)) {
    if (c.internal.empty()) continue;
    bool has_fwd = std::any_of(c.internal.begin(), c.internal.end(),
                               [](const LabeledEdge& e) { return e.letter == Letter::Fwd; });
    bool has_bwd = std::any_of(c.internal.begin(), c.internal.end(),
                               [](const LabeledEdge& e) { return e.letter == Letter::Bwd; });
    if (nonconstant_only && !(has_fwd && has_bwd)) continue;
    long d = component_period(c, aut.state_count());
    long size = static_cast<long>(c.states.size());
    live_periods.insert(d);
    bound = std::max(bound, 4 * size + d * ((size - 1) * (size - 1) + 1) + 2 * d);
  }
  ps.verified_up_to = bound;

  std::set<int> periods = enumerate_periods(A, static_cast<int>(bound), nonconstant_only);
  long r = 0;
  for (int k : periods) r = std::gcd(r, static_cast<long>(k));
  ps.gcd_r = r;
  if (r == 0) {
    ps.cofinite = true;
    return ps;
  }
  ps.cofinite = live_periods.count(r) > 0;
  if (!ps.cofinite) return ps;
  long last_missing = 0;
  for (long k = r; k <= bound; k += r)
    if (!periods.count(static_cast<int>(k))) last_missing = k;
  ps.threshold_t0 = last_missing + r;
  for (long k = r; k < *ps.threshold_t0; k += r)
    if (!periods.count(static_cast<int>(k))) ps.exceptions.push_back(k);
  return ps;
}

long gcd_of(std::span<const long> values) {
  long g = 0;
  for (long v : values) g = std::gcd(g, v);
  return g;
}

std::vector<long> gcd_basis(std::span<const long> values) {
  std::vector<long> basis;
  long target = gcd_of(values);
  long current = 0;
  for (long v : values) {
    if (current == target && !basis.empty()) break;
    long next = std::gcd(current, v);
    if (next != current) {
      basis.push_back(v);
      current = next;
    }
  }
  return basis;
}

CofiniteVerdict gcd_and_cofinite(std::span<const long> sample, TailClass tail) {
  CofiniteVerdict v;
  v.r = gcd_of(sample);
  v.basis = gcd_basis(sample);
  switch (tail) {
    case TailClass::kEmpty:
      // A finite set is cofinite in rZ+ only when rZ+ itself is empty.
      v.cofinite = sample.empty();
      break;
    case TailClass::kCofiniteInRZ:
      v.cofinite = true;
      break;
    case TailClass::kCoinfiniteInRZ:
      v.cofinite = false;
      break;
  }
  return v;
}

std::set<long> positive_combinations(std::span<const long> basis, long bound) {
  std::set<long> out;
  if (basis.empty()) return out;
  long base = std::accumulate(basis.begin(), basis.end(), 0L);
  if (base > bound) return out;
  // Every positive combination is sum(basis) plus a nonnegative one.
  std::vector<bool> reach(bound - base + 1, false);
  reach[0] = true;
  for (long x = 0; x <= bound - base; ++x) {
    if (!reach[x]) continue;
    for (long b : basis)
      if (b > 0 && x + b <= bound - base) reach[x + b] = true;
  }
  for (long x = 0; x <= bound - base; ++x)
    if (reach[x]) out.insert(base + x);
  return out;
}

bool weak_addition_holds(const std::set<long>& set, std::span<const long> basis, long l,
                         long bound) {
  for (long c : positive_combinations(basis, bound - l))
    if (!set.count(l + c)) return false;
  return true;
}

}  // namespace orexp
