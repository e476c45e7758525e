#include "orexp/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace orexp {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == '>') letters.push_back(Letter::Fwd);
    else if (c == '<') letters.push_back(Letter::Bwd);
    else throw std::invalid_argument(std::string("bad letter '") + c + "' in word");
  }
  return Word(std::move(letters));
}

bool Word::is_constant() const {
  return std::adjacent_find(letters_.begin(), letters_.end(), std::not_equal_to<>()) ==
         letters_.end();
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x == Letter::Fwd ? '>' : '<');
  return out;
}

Word Word::power(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::reverse_traversal() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = flip(x);
  return Word(std::move(out));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

bool is_factor(const Word& a, const Word& b) {
  if (a.empty()) return true;
  return std::search(b.letters().begin(), b.letters().end(), a.letters().begin(),
                     a.letters().end()) != b.letters().end();
}

FactorSet::FactorSet(std::vector<Word> members) {
  for (const auto& w : members)
    if (w.empty()) throw std::invalid_argument("forbidden factors must be nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  // Sorted by length first, so every potential sub-factor precedes.
  for (const auto& w : members) {
    bool redundant = std::any_of(members_.begin(), members_.end(),
                                 [&](const Word& kept) { return is_factor(kept, w); });
    if (!redundant) members_.push_back(w);
  }
  for (const auto& w : members_) max_length_ = std::max(max_length_, static_cast<int>(w.size()));
}

FactorSet::FactorSet(std::initializer_list<std::string_view> members)
    : FactorSet([&] {
        std::vector<Word> words;
        for (auto m : members) words.push_back(Word::parse(m));
        return words;
      }()) {}

bool is_A_free(const Word& w, const FactorSet& A) {
  return std::none_of(A.members().begin(), A.members().end(),
                      [&](const Word& a) { return is_factor(a, w); });
}

int sync_bound(const FactorSet& A) { return A.empty() ? 1 : A.max_length(); }

int bridge_bound(std::span<const OrientedGraph> F) {
  int m = 0;
  for (const auto& f : F) m = std::max(m, f.order());
  return m + 1;
}

OrientedGraph word_to_path(const Word& w) {
  std::vector<VertexPair> arcs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int a = static_cast<int>(i), b = a + 1;
    arcs.push_back(w[i] == Letter::Fwd ? VertexPair{a, b} : VertexPair{b, a});
  }
  return OrientedGraph(static_cast<int>(w.size()) + 1, arcs);
}

OrientedGraph word_to_cycle(const Word& w) {
  const int k = static_cast<int>(w.size());
  if (k < 3) throw std::invalid_argument("cycles need at least 3 letters");
  std::vector<VertexPair> arcs;
  for (int i = 0; i < k; ++i) {
    int a = i, b = (i + 1) % k;
    arcs.push_back(w[i] == Letter::Fwd ? VertexPair{a, b} : VertexPair{b, a});
  }
  return OrientedGraph(k, arcs);
}

std::set<Word> path_to_word(const Digraph& p) {
  if (!is_oriented_path(p)) throw std::invalid_argument("not an oriented path");
  if (p.order() == 1) return {Word()};
  Graph g = underlying(p);
  Vertex start = 0;
  while (g.degree(start) != 1) ++start;
  std::vector<Letter> letters;
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbours(cur))
      if (w != prev) next = w;
    if (next == -1) break;
    letters.push_back(p.has_arc(cur, next) ? Letter::Fwd : Letter::Bwd);
    prev = cur;
    cur = next;
  }
  Word w(std::move(letters));
  return {w, w.reverse_traversal()};
}

FactorSet forbidden_factor_set(std::span<const OrientedGraph> F) {
  std::vector<Word> words;
  for (const auto& member : F) {
    if (!is_oriented_path(member)) continue;
    if (member.order() == 1) {
      throw std::invalid_argument("a single-vertex member forbids every nonempty graph");
    }
    for (const auto& w : path_to_word(member)) words.push_back(w);
  }
  return FactorSet(std::move(words));
}

}  // namespace orexp
