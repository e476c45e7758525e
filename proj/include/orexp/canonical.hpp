#ifndef OREXP_CANONICAL_HPP_
#define OREXP_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <vector>

#include "orexp/graph.hpp"

namespace orexp {

/// Largest order accepted by canonical_code (n(n-1) adjacency bits fit in
/// one 64-bit word).
inline constexpr int kMaxCanonicalOrder = 8;
/// Default cap for enumerate_digraphs.
inline constexpr int kDefaultUniverseBound = 5;

/// Adjacency bits of the off-diagonal matrix, row-major, first pair most
/// significant.  Two digraphs are isomorphic iff their codes are equal.
struct CanonicalCode {
  int order = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Maximum code over all relabelings that list vertices by refined degree
/// class.  Throws std::invalid_argument above kMaxCanonicalOrder.
CanonicalCode canonical_code(const Digraph& d);
CanonicalCode canonical_code(const Graph& g);
Digraph from_code(const CanonicalCode& code);
/// The relabeled representative whose code is canonical_code(d).
Digraph canonical_form(const Digraph& d);

/// Works at any order (falls back to induced-embedding search above the
/// canonical bound).
bool is_isomorphic(const Digraph& a, const Digraph& b);
bool is_isomorphic(const Graph& a, const Graph& b);
/// Brute force; intended for tests on tiny graphs.
std::uint64_t automorphism_count(const Digraph& d);

/// One representative per isomorphism class of digraphs (or oriented graphs)
/// on exactly n vertices, sorted by canonical code.  Throws
/// std::invalid_argument when n exceeds bound.
std::vector<Digraph> enumerate_digraphs(int n, bool oriented_only,
                                        int bound = kDefaultUniverseBound);
/// All simple graphs on exactly n vertices up to isomorphism.
std::vector<Graph> enumerate_graphs(int n, int bound = 7);

}  // namespace orexp

#endif  // OREXP_CANONICAL_HPP_
