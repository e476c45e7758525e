#ifndef OREXP_AUTOMATON_HPP_
#define OREXP_AUTOMATON_HPP_

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "orexp/words.hpp"

namespace orexp {

/// Deterministic recognizer of L_A.
///
/// States are the A-free words of length at most W = max|a| - 1.  Reading a
/// letter appends it and keeps the last W letters; the run dies when a
/// member of A becomes a suffix.  States shorter than W only occur on short
/// inputs (the "ramp"); the full-length states carry the de Bruijn-style
/// graph whose closed walks are exactly the periodic words.
class FactorAutomaton {
 public:
  static constexpr int kDead = -1;

  explicit FactorAutomaton(const FactorSet& A);

  int root() const noexcept { return 0; }
  int state_count() const noexcept { return static_cast<int>(words_.size()); }
  /// W: the length of full states.
  int window() const noexcept { return window_; }
  int step(int state, Letter x) const { return next_[state][static_cast<int>(x)]; }
  const Word& state_word(int state) const { return words_[state]; }
  bool is_full(int state) const {
    return static_cast<int>(words_[state].size()) == window_;
  }
  std::vector<int> full_states() const;
  /// Final state, or kDead.
  int run(int state, const Word& w) const;
  bool accepts(const Word& w) const { return run(root(), w) != kDead; }

 private:
  int window_ = 0;
  std::vector<Word> words_;
  std::vector<std::array<int, 2>> next_;
};

/// For all a, b in L_A there is d with adb in L_A.  Decided by reachability:
/// whether adb survives depends only on the state reached by a and on the
/// first min(|b|, W) letters of b, so it suffices that from every state some
/// reachable state can read every A-free word of length <= W.
bool is_transitive(const FactorSet& A);

/// All powers of w lie in L_A.  Tests w^K with K = ceil(m/|w|) + 1, m the
/// longest member: every window of length m of the infinite power sits
/// inside K copies.  Throws std::invalid_argument for the empty word.
bool is_periodic(const Word& w, const FactorSet& A);

/// {k <= k_max : some (non-constant) k-word is periodic in L_A}.  Closed-walk
/// DP over the full states for k >= W, word enumeration below.
std::set<int> enumerate_periods(const FactorSet& A, int k_max, bool nonconstant_only);

/// A (non-constant) k-periodic word, if any.
std::optional<Word> find_periodic_word(const FactorSet& A, int k, bool nonconstant_only);

/// {k <= k_max : L_A contains a word of length k}.
std::set<int> enumerate_word_lengths(const FactorSet& A, int k_max);

}  // namespace orexp

#endif  // OREXP_AUTOMATON_HPP_
