#include "orexp/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace orexp {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Lines with their 1-based numbers; empty (or comment-only) lines keep an
// empty token list so callers can see block boundaries.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back({++number, tokenize(text.substr(pos, end - pos))});
    pos = end + 1;
  }
  return out;
}

int parse_int(const std::string& tok, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

template <typename Result>
Result parse_block(const std::vector<Line>& lines, std::size_t first, std::size_t last,
                   std::string_view header, std::string_view item) {
  std::size_t i = first;
  while (i < last && lines[i].tokens.empty()) ++i;
  if (i == last) throw ParseError(first < lines.size() ? lines[first].number : 1, "empty input");
  const Line& head = lines[i];
  if (head.tokens.size() != 2 || head.tokens[0] != header) {
    throw ParseError(head.number, "expected '" + std::string(header) + " <n>'");
  }
  int n = parse_int(head.tokens[1], head.number);
  if (n < 0) throw ParseError(head.number, "negative vertex count");
  std::vector<VertexPair> pairs;
  for (++i; i < last; ++i) {
    const Line& l = lines[i];
    if (l.tokens.empty()) continue;
    if (l.tokens.size() != 3 || l.tokens[0] != item) {
      throw ParseError(l.number, "expected '" + std::string(item) + " <u> <v>'");
    }
    int u = parse_int(l.tokens[1], l.number), v = parse_int(l.tokens[2], l.number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(l.number, "vertex out of range");
    pairs.emplace_back(u, v);
  }
  try {
    return Result(n, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head.number, e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = split_lines(text);
  return parse_block<Graph>(lines, 0, lines.size(), "graph", "e");
}

Digraph parse_digraph(std::string_view text) {
  auto lines = split_lines(text);
  return parse_block<Digraph>(lines, 0, lines.size(), "digraph", "a");
}

std::vector<Digraph> parse_digraph_blocks(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Digraph> out;
  // A block runs from a header line to the next blank line.  Comment-only
  // lines are blank too, so blocks are split on raw emptiness instead.
  std::vector<bool> raw_blank;
  {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      auto raw = text.substr(pos, end - pos);
      raw_blank.push_back(raw.find_first_not_of(" \t\r") == std::string_view::npos);
      pos = end + 1;
    }
  }
  std::size_t i = 0;
  while (i < lines.size()) {
    while (i < lines.size() && lines[i].tokens.empty()) ++i;
    if (i == lines.size()) break;
    std::size_t j = i;
    while (j < lines.size() && !raw_blank[j]) ++j;
    out.push_back(parse_block<Digraph>(lines, i, j, "digraph", "a"));
    i = j;
  }
  return out;
}

FactorSet parse_factor_set(std::string_view text) {
  std::vector<Word> words;
  for (const auto& l : split_lines(text)) {
    if (l.tokens.empty()) continue;
    if (l.tokens.size() != 1) throw ParseError(l.number, "one word per line");
    try {
      Word w = Word::parse(l.tokens[0]);
      if (w.empty()) throw ParseError(l.number, "empty factor");
      words.push_back(std::move(w));
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return FactorSet(std::move(words));
}

HoleClassSpec parse_hole_spec(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> kv;
  std::size_t last_line = 1;
  for (const auto& l : split_lines(text)) {
    for (const auto& tok : l.tokens) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError(l.number, "expected key=value, got '" + tok + "'");
      }
      std::string key = tok.substr(0, eq);
      if (kv.count(key)) throw ParseError(l.number, "duplicate key '" + key + "'");
      kv[key] = {tok.substr(eq + 1), l.number};
      last_line = l.number;
    }
  }
  auto get = [&](const std::string& key) -> const std::pair<std::string, std::size_t>* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto members = [&]() {
    std::set<int> out;
    if (auto m = get("members")) {
      std::stringstream in(m->first);
      for (std::string item; std::getline(in, item, ',');) {
        if (item.empty() || item == "...") continue;
        out.insert(parse_int(item, m->second));
      }
    }
    return out;
  };
  auto variant = get("variant");
  if (!variant) throw ParseError(last_line, "missing variant=");
  try {
    if (variant->first == "finite") return HoleClassSpec::finite_set(members());
    if (variant->first == "cofinite") return HoleClassSpec::cofinite_complement(members());
    if (variant->first == "odd_tail") {
      auto M = get("M");
      if (!M) throw ParseError(variant->second, "odd_tail needs M=");
      return HoleClassSpec::odd_tail(parse_int(M->first, M->second), members());
    }
    if (variant->first == "custom") {
      auto tail = get("tail");
      if (!tail) throw ParseError(variant->second, "custom sets need a declared tail=");
      int bound = 200;
      if (auto b = get("bound")) bound = parse_int(b->first, b->second);
      std::function<bool(int)> predicate;
      std::string name;
      if (auto p = get("predicate")) {
        predicate = named_predicate(p->first);
        name = p->first;
      } else {
        std::set<int> listed = members();
        predicate = [listed](int k) { return listed.count(k) > 0; };
        name = "listed";
      }
      return HoleClassSpec::custom(name, std::move(predicate), bound, parse_tail(tail->first));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(variant->second, e.what());
  }
  throw ParseError(variant->second, "unknown variant '" + variant->first + "'");
}

std::string format_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string format_digraph(const Digraph& d) {
  std::string out = "digraph " + std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arcs()) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace orexp
