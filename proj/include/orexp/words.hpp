#ifndef OREXP_WORDS_HPP_
#define OREXP_WORDS_HPP_

// Binary words over {Fwd, Bwd} and their translation to oriented paths.
// Text form uses '>' for Fwd and '<' for Bwd.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orexp/graph.hpp"

namespace orexp {

enum class Letter : std::uint8_t { Fwd = 0, Bwd = 1 };

inline Letter flip(Letter x) { return x == Letter::Fwd ? Letter::Bwd : Letter::Fwd; }

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Parses '>'/'<' text; throws std::invalid_argument on other characters.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_constant() const;
  std::string str() const;

  Word power(std::size_t n) const;
  /// The word read when the path t(w) is traversed from the other end.
  Word reverse_traversal() const;
  Word substr(std::size_t pos, std::size_t len) const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// True iff a occurs contiguously in b.
bool is_factor(const Word& a, const Word& b);

/// A finite set of nonempty forbidden factors, normalized so that no member
/// is a factor of another (a member containing a smaller member adds no
/// constraint).
class FactorSet {
 public:
  FactorSet() = default;
  /// Throws std::invalid_argument on an empty member.
  explicit FactorSet(std::vector<Word> members);
  FactorSet(std::initializer_list<std::string_view> members);

  const std::vector<Word>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  /// Longest member length; 0 for the empty set.
  int max_length() const noexcept { return max_length_; }

  friend bool operator==(const FactorSet&, const FactorSet&) = default;

 private:
  std::vector<Word> members_;
  int max_length_ = 0;
};

bool is_A_free(const Word& w, const FactorSet& A);

/// m such that L_A is m-synchronizing: the longest member, or 1 when A is
/// empty.
int sync_bound(const FactorSet& A);
/// Largest member order plus one: the threshold above which cycles only
/// meet forbidden members along paths.  Distinct from sync_bound.
int bridge_bound(std::span<const OrientedGraph> F);

/// The path v0 .. v_k with v_i -> v_{i+1} when letter i is Fwd.
OrientedGraph word_to_path(const Word& w);
/// The k-cycle v0 .. v_{k-1} v0 with arc i directed by letter i.
OrientedGraph word_to_cycle(const Word& w);
/// The one or two words read along an oriented path from either end.
/// Throws std::invalid_argument if p is not an oriented path.
std::set<Word> path_to_word(const Digraph& p);

/// Both encodings of every member of F that is an oriented path.  Throws
/// std::invalid_argument for a single-vertex member, whose word is empty.
FactorSet forbidden_factor_set(std::span<const OrientedGraph> F);

}  // namespace orexp

#endif  // OREXP_WORDS_HPP_
