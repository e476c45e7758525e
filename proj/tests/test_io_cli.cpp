#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "orexp/io.hpp"
#include "orexp/report.hpp"
#include "orexp/search.hpp"

using namespace orexp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(OREXP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("orexp_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

const char* kBipartite =
    "# TT3, directed triangle, directed P3\n"
    "digraph 3\na 0 1\na 0 2\na 1 2\n\n"
    "digraph 3\na 0 1\na 1 2\na 2 0\n\n"
    "digraph 3\na 0 1\na 1 2\n";

}  // namespace

TEST_CASE("graph and digraph files") {
  Graph g = parse_graph("# square\ngraph 4\ne 0 1\ne 1 2\n\ne 2 3 # last\ne 3 0\n");
  CHECK(g == make_cycle(4));
  CHECK(parse_graph(format_graph(g)) == g);
  Digraph d = parse_digraph("digraph 2\na 0 1\na 1 0\n");
  CHECK(d == digon());
  CHECK(parse_digraph(format_digraph(d)) == d);
  auto blocks = parse_digraph_blocks(kBipartite);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[1] == directed_cycle(3));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of([] { parse_graph("graph 3\ne 0 1\ne 0 9\n"); }) == 3);
  CHECK(line_of([] { parse_graph("graph 3\ne 0 x\n"); }) == 2);
  CHECK(line_of([] { parse_graph("\n\ndigraph 3\n"); }) == 3);
  CHECK(line_of([] { parse_digraph("digraph 2\na 0 0\n"); }) == 1);
  CHECK(line_of([] { parse_factor_set(">>\n<x\n"); }) == 2);
  CHECK(line_of([] { parse_hole_spec("variant=custom\npredicate=primes\n"); }) == 1);
  CHECK(line_of([] { parse_hole_spec("variant=odd_tail M=five"); }) == 1);
}

TEST_CASE("factor and hole spec files") {
  FactorSet A = parse_factor_set("# alternation\n>>\n<<\n");
  CHECK(A == FactorSet{">>", "<<"});
  HoleClassSpec odd = parse_hole_spec("variant=odd_tail M=5");
  CHECK(odd.variant() == HoleVariant::kOddTail);
  CHECK(odd.threshold() == 5);
  HoleClassSpec listed = parse_hole_spec("variant=custom tail=coinfinite members=5,7,11,...");
  CHECK(listed.contains(7));
  CHECK_FALSE(listed.contains(9));
  CHECK(listed.tail() == DeclaredTail::kOther);
  HoleClassSpec p = parse_hole_spec("variant=custom predicate=primes tail=coinfinite bound=120");
  CHECK(p.bound() == 120);
  CHECK(p.contains(13));
}

TEST_CASE("report envelope") {
  auto a = envelope("x", "abc", {{"k", 1}});
  CHECK(a["tool_version"] == std::string(kToolVersion));
  CHECK(a["inputs_digest"] == inputs_digest("abc"));
  CHECK(inputs_digest("") == "cbf29ce484222325");
  CHECK(inputs_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cli: spectrum of the bipartite set") {
  TempDir dir;
  std::string forb = dir.write("bip.forb", kBipartite);
  Run r = run_cli("spectrum -F " + forb + " --range 4..12 --format json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["spectrum"] == nlohmann::json({4, 6, 8, 10, 12}));
  CHECK(j["subcommand"] == "spectrum");
  for (const char* key : {"tool_version", "subcommand", "inputs_digest", "result"})
    CHECK(j.contains(key));
  Run again = run_cli("spectrum -F " + forb + " --range 4..12 --format json");
  CHECK(again.out == r.out);
}

TEST_CASE("cli: orientation search") {
  TempDir dir;
  std::string c4 = dir.write("c4.graph", "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
  std::string k4 = dir.write("k4.graph", "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
  std::string b1 = dir.write("b1.forb", "digraph 3\na 0 1\na 0 2\n");
  Run no = run_cli("orient -g " + c4 + " -F " + b1 + " --mode induced --acyclic --format json");
  REQUIRE(no.status == 0);
  CHECK(nlohmann::json::parse(no.out)["result"]["admits"] == false);

  Run yes = run_cli("orient -g " + k4 + " -F " + b1 + " --mode induced --acyclic --format json");
  REQUIRE(yes.status == 0);
  auto j = nlohmann::json::parse(yes.out)["result"];
  REQUIRE(j["admits"] == true);
  std::vector<VertexPair> arcs;
  for (const auto& a : j["witness_arcs"]) arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  OrientedGraph w(4, arcs);
  CHECK(is_acyclic(w));
  CHECK(is_forbidden_free(w, ForbiddenSet({out_star_b1()}), Containment::kInduced));
}

TEST_CASE("cli: translate") {
  Run r = run_cli("translate '><'");
  REQUIRE(r.status == 0);
  CHECK(parse_digraph(r.out) == Digraph(3, {{0, 1}, {2, 1}}));
  TempDir dir;
  std::string path = dir.write("p.digraph", "digraph 3\na 1 0\na 1 2\n");
  Run back = run_cli("translate " + path);
  REQUIRE(back.status == 0);
  CHECK(back.out == "<>\n");
}

TEST_CASE("cli: languages, homs, cores, dualities, holes") {
  TempDir dir;
  std::string alt = dir.write("alt.txt", ">>\n<<\n");
  Run s = run_cli("lang structure -A " + alt + " --format json");
  REQUIRE(s.status == 0);
  auto js = nlohmann::json::parse(s.out)["result"];
  CHECK(js["gcd_r"] == 2);
  CHECK(js["threshold_t0"] == 2);
  CHECK(run_cli("lang transitive -A " + alt).out == "transitive: yes\n");
  CHECK(run_cli("lang sync -A " + alt).out == "sync bound: 2\n");
  CHECK(run_cli("lang periods -A " + alt + " --kmax 8 --nonconstant").out == "periods: 2 4 6 8\n");

  std::string c3 = dir.write("c3", "digraph 3\na 0 1\na 1 2\na 2 0\n");
  std::string c6 = dir.write("c6", "digraph 6\na 0 1\na 1 2\na 2 3\na 3 4\na 4 5\na 5 0\n");
  std::string tt2 = dir.write("tt2", "digraph 2\na 0 1\n");
  std::string p3 = dir.write("p3", "digraph 3\na 0 1\na 1 2\n");
  Run h = run_cli("hom " + c6 + " " + c3 + " --format json");
  REQUIRE(h.status == 0);
  CHECK(nlohmann::json::parse(h.out)["result"]["exists"] == true);
  CHECK(run_cli("hom " + c3 + " " + tt2).out == "hom: no\n");

  std::string pp = dir.write("pp", "digraph 4\na 0 1\na 2 3\n");
  Run c = run_cli("core " + pp + " --format json");
  REQUIRE(c.status == 0);
  CHECK(nlohmann::json::parse(c.out)["result"]["core"]["n"] == 2);

  Run d = run_cli("duality verify -A " + p3 + " -B " + tt2 + " --n 4 --format json");
  REQUIRE(d.status == 0);
  CHECK(nlohmann::json::parse(d.out)["result"]["holds_up_to"] == 4);
  Run dc = run_cli("duality verify -A " + c3 + " -B " + tt2 + " --n 4 --jobs 2 --format json");
  REQUIRE(dc.status == 0);
  CHECK_FALSE(nlohmann::json::parse(dc.out)["result"]["counterexample"].is_null());
  std::string fset = dir.write("f", "digraph 4\na 0 1\na 1 2\na 2 3\n");
  std::string mset = dir.write("m", "digraph 3\na 0 1\na 0 2\na 1 2\n");
  Run g = run_cli("duality verify-gen -F " + fset + " -M " + mset + " --n 4 --format json");
  REQUIRE(g.status == 0);
  CHECK(nlohmann::json::parse(g.out)["result"]["counterexample"].is_null());

  std::string spec = dir.write("p.spec", "variant=custom predicate=primes tail=coinfinite\n");
  Run hr = run_cli("holes analyze -spec " + spec + " --format json");
  REQUIRE(hr.status == 0);
  CHECK(nlohmann::json::parse(hr.out)["result"]["overall"] == "NotExpressibleAcyclic");
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  CHECK(run_cli("").status == 1);
  CHECK(run_cli("frobnicate").status == 1);
  CHECK(run_cli("spectrum -F /nonexistent/file").status == 1);
  std::string bad = dir.write("bad.graph", "graph 2\ne 0 5\n");
  std::string b1 = dir.write("b1.forb", "digraph 3\na 0 1\na 0 2\n");
  CHECK(run_cli("orient -g " + bad + " -F " + b1).status == 1);
  std::string k6 = dir.write("k6.graph", [] {
    std::string s = "graph 7\n";
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v) s += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
  }());
  std::string p3 = dir.write("p3.forb", "digraph 3\na 0 1\na 1 2\n");
  CHECK(run_cli("orient -g " + k6 + " -F " + p3 + " --budget 5").status == 2);
}
