// orexp: command-line front end.
//
// Exit status: 0 computed, 1 usage or input error, 2 work budget exceeded.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orexp/automaton.hpp"
#include "orexp/duality.hpp"
#include "orexp/hom.hpp"
#include "orexp/holes.hpp"
#include "orexp/io.hpp"
#include "orexp/periods.hpp"
#include "orexp/report.hpp"
#include "orexp/search.hpp"
#include "orexp/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace orexp;

struct Options {
  std::string format = "text";
  std::uint64_t budget = SearchLimits{}.node_budget;
  int jobs = 1;
};

// Accumulates everything a report depends on, for the digest.
class Inputs {
 public:
  void arg(const std::string& a) { text_ += "arg:" + a + "\n"; }
  std::string file(const std::string& path) {
    std::string content = read_file(path);
    text_ += "file:" + path + "\n" + content + "\n";
    return content;
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::string join(const std::set<int>& values) {
  std::ostringstream out;
  bool first = true;
  for (int v : values) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  return out.str();
}

std::string join_words(const std::set<Word>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + (w.empty() ? "e" : w.str());
  return out;
}

ForbiddenSet load_forbidden(Inputs& in, const std::string& path) {
  std::vector<OrientedGraph> members;
  for (auto& d : parse_digraph_blocks(in.file(path))) {
    if (d.has_digon()) throw std::runtime_error(path + ": forbidden members must be oriented");
    members.emplace_back(std::move(d));
  }
  return ForbiddenSet(std::move(members));
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected a..b");
  int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
  if (a > b) throw CLI::ValidationError("--range", "empty range");
  return {a, b};
}

void emit(const Options& opt, const std::string& sub, const Inputs& in, const json& result,
          const std::string& text) {
  if (opt.format == "json") {
    std::cout << envelope(sub, in.text(), result).dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string describe(const CheckResult& c) {
  std::ostringstream out;
  out << "  " << c.tag << ": " << to_string(c.status);
  if (c.witness) out << " witness=(" << c.witness->first << "," << c.witness->second << ")";
  if (c.M) out << " M=" << *c.M;
  if (c.r) out << " r=" << *c.r;
  if (!c.detail.empty()) out << "  [" << c.detail << "]";
  out << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (auto& a : args)
    if (a == "-spec") a = "--spec";
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  Options opt;
  CLI::App app{"Forbidden orientations, factor languages and duality checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget, "search node budget")->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "worker threads for universe checks")
      ->check(CLI::PositiveNumber);

  std::string translate_arg;
  auto* translate = app.add_subcommand("translate", "word to oriented path, or path file to words");
  translate->add_option("input", translate_arg, "word over < and >, or a digraph file")->required();

  std::string lang_what, factor_file;
  int kmax = 30;
  bool nonconstant = false;
  auto* lang = app.add_subcommand("lang", "factor-avoidance language queries");
  lang->add_option("query", lang_what, "periods | structure | transitive | sync")
      ->required()
      ->check(CLI::IsMember({"periods", "structure", "transitive", "sync"}));
  lang->add_option("-A", factor_file, "factor file")->required();
  lang->add_option("--kmax", kmax, "largest period length")->check(CLI::PositiveNumber);
  lang->add_flag("--nonconstant", nonconstant, "non-constant periodic words only");

  std::string graph_file, forb_file, mode_text = "induced";
  bool acyclic = false;
  auto* orient = app.add_subcommand("orient", "search for an F-free orientation");
  orient->add_option("-g", graph_file, "graph file")->required();
  orient->add_option("-F", forb_file, "forbidden set file")->required();
  orient->add_option("--mode", mode_text, "induced | hom | overlap")
      ->check(CLI::IsMember({"induced", "hom", "overlap"}));
  orient->add_flag("--acyclic", acyclic, "forbid directed cycles");

  std::string range_text = "4..12";
  bool paths = false;
  auto* spectrum = app.add_subcommand("spectrum", "cycle lengths with an F-free orientation");
  spectrum->add_option("-F", forb_file, "forbidden set file")->required();
  spectrum->add_option("--range", range_text, "a..b");
  spectrum->add_flag("--acyclic", acyclic, "acyclic orientations only");
  spectrum->add_flag("--paths", paths, "path lengths (edges) instead of cycles");

  std::string d1_file, d2_file;
  auto* hom = app.add_subcommand("hom", "homomorphism search");
  hom->add_option("from", d1_file, "digraph file")->required();
  hom->add_option("to", d2_file, "digraph file")->required();

  auto* core = app.add_subcommand("core", "core of a digraph");
  core->add_option("digraph", d1_file, "digraph file")->required();

  std::string set_a, set_b;
  int n_max = 4;
  auto* duality = app.add_subcommand("duality", "bounded duality verification");
  duality->require_subcommand(1);
  auto* verify = duality->add_subcommand("verify", "Forb(A) = CSP(B)");
  verify->add_option("-A", set_a, "digraph file")->required();
  verify->add_option("-B", set_b, "digraph file")->required();
  verify->add_option("--n", n_max, "largest universe order")->check(CLI::Range(1, 5));
  auto* verify_gen = duality->add_subcommand("verify-gen", "Forb(F) = CSP(M)");
  verify_gen->add_option("-F", set_a, "digraph blocks")->required();
  verify_gen->add_option("-M", set_b, "digraph blocks")->required();
  verify_gen->add_option("--n", n_max, "largest universe order")->check(CLI::Range(1, 5));

  std::string spec_file;
  int holes_kmax = 60;
  auto* holes = app.add_subcommand("holes", "hole-defined classes");
  holes->require_subcommand(1);
  auto* analyze = holes->add_subcommand("analyze", "necessary conditions for expressibility");
  analyze->add_option("--spec", spec_file, "hole spec file")->required();
  analyze->add_option("--kmax", holes_kmax, "sample bound")->check(CLI::Range(12, 100000));

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const SearchLimits limits{opt.budget};
  Inputs in;
  for (const auto& a : std::vector<std::string>(argv + 1, argv + argc)) in.arg(a);

  try {
    if (*translate) {
      if (std::filesystem::is_regular_file(translate_arg)) {
        Digraph p = parse_digraph(in.file(translate_arg));
        auto words = path_to_word(p);
        json list = json::array();
        for (const auto& w : words) list.push_back(w.str());
        emit(opt, "translate", in, {{"words", list}}, join_words(words) + "\n");
      } else {
        Word w = Word::parse(translate_arg);
        OrientedGraph p = word_to_path(w);
        emit(opt, "translate", in, {{"word", w.str()}, {"path", to_json(p)}}, format_digraph(p));
      }
      return 0;
    }

    if (*lang) {
      FactorSet A = parse_factor_set(in.file(factor_file));
      json result;
      std::string text;
      if (lang_what == "periods") {
        auto periods = enumerate_periods(A, kmax, nonconstant);
        result = {{"periods", periods}, {"kmax", kmax}, {"nonconstant", nonconstant}};
        text = "periods: " + join(periods) + "\n";
      } else if (lang_what == "structure") {
        PeriodStructure p = period_structure(A, nonconstant);
        result = to_json(p);
        std::ostringstream out;
        out << "r=" << p.gcd_r << " t0=" << (p.threshold_t0 ? std::to_string(*p.threshold_t0) : "-")
            << " exceptions=[";
        for (std::size_t i = 0; i < p.exceptions.size(); ++i)
          out << (i ? " " : "") << p.exceptions[i];
        out << "] transitive=" << p.transitive << " cofinite=" << p.cofinite << "\n";
        text = out.str();
      } else if (lang_what == "transitive") {
        bool t = is_transitive(A);
        result = {{"transitive", t}};
        text = std::string("transitive: ") + (t ? "yes" : "no") + "\n";
      } else {
        int m = sync_bound(A);
        result = {{"sync_bound", m}};
        text = "sync bound: " + std::to_string(m) + "\n";
      }
      emit(opt, "lang " + lang_what, in, result, text);
      return 0;
    }

    if (*orient) {
      Graph g = parse_graph(in.file(graph_file));
      ForbiddenSet F = load_forbidden(in, forb_file);
      SearchMode mode{parse_containment(mode_text), acyclic};
      OrientationVerdict v = admits_orientation(g, F, mode, limits);
      std::string text = std::string("admits: ") + (v.admits ? "yes" : "no") + "\n";
      if (v.witness) text += format_digraph(v.witness->digraph());
      text += "work: " + std::to_string(v.work) + "\n";
      emit(opt, "orient", in, to_json(v, mode), text);
      return 0;
    }

    if (*spectrum) {
      ForbiddenSet F = load_forbidden(in, forb_file);
      auto [a, b] = parse_range(range_text);
      std::set<int> s = paths ? path_spectrum(F, a, b, SpectrumRoute::kAuto, limits)
                              : cycle_spectrum(F, a, b, acyclic, SpectrumRoute::kAuto, limits);
      emit(opt, "spectrum", in,
           {{"spectrum", s}, {"range", {a, b}}, {"acyclic", acyclic}, {"paths", paths}},
           "spectrum: " + join(s) + "\n");
      return 0;
    }

    if (*hom) {
      Digraph from = parse_digraph(in.file(d1_file));
      Digraph to = parse_digraph(in.file(d2_file));
      auto w = hom_exists(from, to, limits);
      std::string text = w ? "hom: yes\n" : "hom: no\n";
      if (w) {
        text += "map:";
        for (Vertex x : w->mapping) text += " " + std::to_string(x);
        text += "\n";
      }
      emit(opt, "hom", in, {{"exists", w.has_value()}, {"mapping", w ? to_json(*w) : json(nullptr)}},
           text);
      return 0;
    }

    if (*core) {
      Digraph d = parse_digraph(in.file(d1_file));
      Digraph c = core_of(d);
      emit(opt, "core", in,
           {{"core", to_json(c)}, {"oriented_tree", is_oriented_tree(c)}}, format_digraph(c));
      return 0;
    }

    if (*duality) {
      std::vector<Digraph> F, M;
      std::string sub;
      if (*verify) {
        F.push_back(parse_digraph(in.file(set_a)));
        M.push_back(parse_digraph(in.file(set_b)));
        sub = "duality verify";
      } else {
        F = parse_digraph_blocks(in.file(set_a));
        M = parse_digraph_blocks(in.file(set_b));
        sub = "duality verify-gen";
      }
      DualityReport r = verify_generalized_duality(F, M, n_max, opt.jobs, limits);
      if (r.counterexample && !counterexample_verifies(F, M, *r.counterexample, limits)) {
        throw std::logic_error("counterexample failed re-verification");
      }
      std::string text;
      if (r.counterexample) {
        text = "counterexample on " + std::to_string(r.counterexample->d.order()) + " vertices (" +
               (r.counterexample->from_forbidden ? "F maps in and it maps to M"
                                                 : "nothing from F maps in, yet it maps to no M") +
               "):\n" + format_digraph(r.counterexample->d);
      } else {
        text = "holds up to " + std::to_string(r.holds_up_to) + " vertices (" +
               std::to_string(r.checked) + " digraphs)\n";
      }
      emit(opt, sub, in, to_json(r), text);
      return 0;
    }

    if (*holes) {
      HoleClassSpec spec = parse_hole_spec(in.file(spec_file));
      ExpressibilityReport r = trichotomy_verdict(spec, holes_kmax);
      std::string text = "overall: " + std::string(to_string(r.overall)) + "\n";
      text += std::string("acyclic orientations: ") + (r.acyclic_pass ? "pass" : "fail") + "\n";
      for (const auto& c : r.acyclic_checks) text += describe(c);
      text += std::string("any orientations: ") + (r.any_pass ? "pass" : "fail") + "\n";
      for (const auto& c : r.any_checks) text += describe(c);
      for (const auto& n : r.notes) text += "note: " + n + "\n";
      emit(opt, "holes analyze", in, to_json(r), text);
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "orexp: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "orexp: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "orexp: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "orexp: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
