#include "orexp/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace orexp {

namespace {

bool has_forbidden_suffix(const Word& w, const FactorSet& A) {
  for (const auto& a : A.members()) {
    if (a.size() > w.size()) continue;
    if (std::equal(a.letters().rbegin(), a.letters().rend(), w.letters().rbegin())) return true;
  }
  return false;
}

constexpr std::uint8_t letter_bit(Letter x) { return x == Letter::Fwd ? 1 : 2; }

bool mask_counts(int mask, bool nonconstant_only) {
  return nonconstant_only ? mask == 3 : mask != 0;
}

// Sets of (state, letters-used mask) pairs, one byte per state with bit m
// standing for mask m in 0..3.
using Layer = std::vector<std::uint8_t>;

Layer advance_layer(const FactorAutomaton& aut, const Layer& cur) {
  Layer nxt(cur.size(), 0);
  for (int s = 0; s < static_cast<int>(cur.size()); ++s) {
    if (cur[s] == 0) continue;
    for (Letter x : {Letter::Fwd, Letter::Bwd}) {
      int t = aut.step(s, x);
      if (t == FactorAutomaton::kDead) continue;
      for (int m = 0; m < 4; ++m)
        if (cur[s] >> m & 1U) nxt[t] |= static_cast<std::uint8_t>(1U << (m | letter_bit(x)));
    }
  }
  return nxt;
}

std::vector<Word> all_words(int k) {
  std::vector<Word> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    std::vector<Letter> letters(k);
    for (int i = 0; i < k; ++i)
      letters[i] = (code >> (k - 1 - i) & 1U) ? Letter::Bwd : Letter::Fwd;
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace

FactorAutomaton::FactorAutomaton(const FactorSet& A)
    : window_(std::max(A.max_length() - 1, 0)) {
  if (window_ > 24) throw std::invalid_argument("forbidden factors too long for the automaton");
  std::map<Word, int> index;
  words_.push_back(Word());
  next_.push_back({kDead, kDead});
  index.emplace(Word(), 0);
  for (std::size_t s = 0; s < words_.size(); ++s) {
    for (Letter x : {Letter::Fwd, Letter::Bwd}) {
      Word w = words_[s] + Word{x};
      int target = kDead;
      if (!has_forbidden_suffix(w, A)) {
        std::size_t keep = std::min<std::size_t>(w.size(), window_);
        Word suffix = w.substr(w.size() - keep, keep);
        auto [it, fresh] = index.emplace(suffix, static_cast<int>(words_.size()));
        if (fresh) {
          words_.push_back(suffix);
          next_.push_back({kDead, kDead});
        }
        target = it->second;
      }
      next_[s][static_cast<int>(x)] = target;
    }
  }
}

std::vector<int> FactorAutomaton::full_states() const {
  std::vector<int> out;
  for (int s = 0; s < state_count(); ++s)
    if (is_full(s)) out.push_back(s);
  return out;
}

int FactorAutomaton::run(int state, const Word& w) const {
  for (Letter x : w.letters()) {
    if (state == kDead) return kDead;
    state = step(state, x);
  }
  return state;
}

bool is_transitive(const FactorSet& A) {
  FactorAutomaton aut(A);
  const int n = aut.state_count();
  // survives[r][p]: reading state word p from state r stays alive
  std::vector<std::vector<bool>> survives(n, std::vector<bool>(n));
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n; ++p) survives[r][p] = aut.run(r, aut.state_word(p)) != FactorAutomaton::kDead;
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (Letter x : {Letter::Fwd, Letter::Bwd}) {
        int t = aut.step(u, x);
        if (t != FactorAutomaton::kDead && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    for (int p = 0; p < n; ++p) {
      bool joinable = false;
      for (int r = 0; r < n && !joinable; ++r) joinable = seen[r] && survives[r][p];
      if (!joinable) return false;
    }
  }
  return true;
}

bool is_periodic(const Word& w, const FactorSet& A) {
  if (w.empty()) throw std::invalid_argument("periodicity of the empty word");
  const std::size_t m = static_cast<std::size_t>(A.max_length());
  const std::size_t copies = (m + w.size() - 1) / w.size() + 1;
  return is_A_free(w.power(copies), A);
}

std::set<int> enumerate_periods(const FactorSet& A, int k_max, bool nonconstant_only) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  FactorAutomaton aut(A);
  std::set<int> periods;
  const int W = aut.window();
  for (int k = 1; k < W && k <= k_max; ++k) {
    for (const auto& w : all_words(k)) {
      if (nonconstant_only && w.is_constant()) continue;
      if (is_periodic(w, A)) {
        periods.insert(k);
        break;
      }
    }
  }
  for (int s0 : aut.full_states()) {
    Layer layer(aut.state_count(), 0);
    layer[s0] = 1;  // mask 0
    for (int k = 1; k <= k_max; ++k) {
      layer = advance_layer(aut, layer);
      if (k < W || periods.count(k)) continue;
      for (int m = 1; m < 4; ++m)
        if ((layer[s0] >> m & 1U) && mask_counts(m, nonconstant_only)) periods.insert(k);
    }
  }
  return periods;
}

std::optional<Word> find_periodic_word(const FactorSet& A, int k, bool nonconstant_only) {
  if (k < 1) return std::nullopt;
  FactorAutomaton aut(A);
  if (k < aut.window()) {
    for (const auto& w : all_words(k)) {
      if (nonconstant_only && w.is_constant()) continue;
      if (is_periodic(w, A)) return w;
    }
    return std::nullopt;
  }
  for (int s0 : aut.full_states()) {
    std::vector<Layer> layers{Layer(aut.state_count(), 0)};
    layers[0][s0] = 1;
    for (int i = 1; i <= k; ++i) layers.push_back(advance_layer(aut, layers.back()));
    for (int target = 1; target < 4; ++target) {
      if (!mask_counts(target, nonconstant_only) || !(layers[k][s0] >> target & 1U)) continue;
      // Walk backwards through the layers.
      std::vector<Letter> letters;
      int state = s0, mask = target;
      for (int i = k; i > 0; --i) {
        bool moved = false;
        for (int s = 0; s < aut.state_count() && !moved; ++s) {
          for (Letter x : {Letter::Fwd, Letter::Bwd}) {
            if (aut.step(s, x) != state) continue;
            for (int m = 0; m < 4; ++m) {
              if ((m | letter_bit(x)) != mask || !(layers[i - 1][s] >> m & 1U)) continue;
              letters.push_back(x);
              state = s;
              mask = m;
              moved = true;
              break;
            }
            if (moved) break;
          }
        }
        if (!moved) throw std::logic_error("periodic word backtrack failed");
      }
      std::reverse(letters.begin(), letters.end());
      return Word(std::move(letters));
    }
  }
  return std::nullopt;
}

std::set<int> enumerate_word_lengths(const FactorSet& A, int k_max) {
  FactorAutomaton aut(A);
  std::set<int> lengths;
  std::vector<bool> alive(aut.state_count(), false);
  alive[aut.root()] = true;
  for (int k = 0; k <= k_max; ++k) {
    if (std::none_of(alive.begin(), alive.end(), [](bool b) { return b; })) break;
    lengths.insert(k);
    std::vector<bool> next(aut.state_count(), false);
    for (int s = 0; s < aut.state_count(); ++s) {
      if (!alive[s]) continue;
      for (Letter x : {Letter::Fwd, Letter::Bwd}) {
        int t = aut.step(s, x);
        if (t != FactorAutomaton::kDead) next[t] = true;
      }
    }
    alive.swap(next);
  }
  return lengths;
}

}  // namespace orexp
