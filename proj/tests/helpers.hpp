#ifndef OREXP_TESTS_HELPERS_HPP_
#define OREXP_TESTS_HELPERS_HPP_

#include <random>
#include <vector>

#include "orexp/graph.hpp"
#include "orexp/words.hpp"

namespace orexp::testing {

inline Word random_word(std::mt19937& rng, std::size_t len) {
  std::vector<Letter> letters(len);
  for (auto& x : letters) x = rng() & 1U ? Letter::Bwd : Letter::Fwd;
  return Word(std::move(letters));
}

inline std::vector<Word> all_words_up_to(std::size_t max_len) {
  std::vector<Word> out{Word()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      std::vector<Letter> letters(len);
      for (std::size_t i = 0; i < len; ++i)
        letters[i] = (bits >> (len - 1 - i)) & 1U ? Letter::Bwd : Letter::Fwd;
      out.emplace_back(std::move(letters));
    }
  }
  return out;
}

// Brute-force membership in L_A.
inline bool naive_free(const Word& w, const FactorSet& A) {
  for (const auto& a : A.members()) {
    if (a.size() > w.size()) continue;
    for (std::size_t i = 0; i + a.size() <= w.size(); ++i)
      if (w.substr(i, a.size()) == a) return false;
  }
  return true;
}

inline OrientedGraph arc_pair() { return disjoint_union(single_arc(), single_arc()); }

}  // namespace orexp::testing

#endif  // OREXP_TESTS_HELPERS_HPP_
