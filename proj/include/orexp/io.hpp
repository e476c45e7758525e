#ifndef OREXP_IO_HPP_
#define OREXP_IO_HPP_

// Text formats.
//
//   graph <n>        digraph <n>
//   e <u> <v>        a <u> <v>
//
// Whitespace separated, 0-based vertices, '#' starts a comment.  Forbidden
// set files hold digraph blocks separated by blank lines.  Factor files hold
// one word per line.  Hole spec files hold key=value tokens, e.g.
// "variant=odd_tail M=5".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orexp/graph.hpp"
#include "orexp/holes.hpp"
#include "orexp/words.hpp"

namespace orexp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);
/// Blank-line separated digraph blocks.
std::vector<Digraph> parse_digraph_blocks(std::string_view text);
FactorSet parse_factor_set(std::string_view text);
/// Keys: variant (finite | cofinite | odd_tail | custom), members (comma
/// list), M, predicate, bound, tail.
HoleClassSpec parse_hole_spec(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_digraph(const Digraph& d);

/// Whole file; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace orexp

#endif  // OREXP_IO_HPP_
