#include "orexp/report.hpp"

#include <cstdint>
#include <cstdio>

namespace orexp {

using nlohmann::json;

json to_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.order()}, {"arcs", arcs}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

json to_json(const HomWitness& w) { return w.mapping; }

json to_json(const OrientationVerdict& v, const SearchMode& mode) {
  json witness = nullptr;
  if (v.witness) {
    witness = json::array();
    for (std::size_t i = 0; i < v.witness->base().size(); ++i) {
      auto [a, b] = v.witness->arc(i);
      witness.push_back({a, b});
    }
  }
  return {{"admits", v.admits},
          {"witness_arcs", witness},
          {"work", v.work},
          {"mode", {{"containment", to_string(mode.containment)}, {"acyclic", mode.acyclic}}}};
}

json to_json(const PeriodStructure& p) {
  return {{"gcd_r", p.gcd_r},
          {"threshold_t0", p.threshold_t0 ? json(*p.threshold_t0) : json(nullptr)},
          {"exceptions", p.exceptions},
          {"transitive", p.transitive},
          {"nonconstant_variant", p.nonconstant_variant},
          {"cofinite", p.cofinite},
          {"verified_up_to", p.verified_up_to}};
}

json to_json(const DualityReport& r) {
  json out = {{"holds_up_to", r.holds_up_to}, {"checked", r.checked}, {"counterexample", nullptr}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {
        {"digraph", to_json(c.d)},
        {"forbidden_index", c.from_forbidden ? json(c.forbidden_index) : json(nullptr)},
        {"from_forbidden", c.from_forbidden ? to_json(*c.from_forbidden) : json(nullptr)},
        {"target_index", c.to_target ? json(c.target_index) : json(nullptr)},
        {"to_target", c.to_target ? to_json(*c.to_target) : json(nullptr)}};
  }
  return out;
}

json to_json(const CheckResult& c) {
  json out = {{"tag", c.tag}, {"status", to_string(c.status)}, {"detail", c.detail}};
  out["witness"] = c.witness ? json{c.witness->first, c.witness->second} : json(nullptr);
  out["M"] = c.M ? json(*c.M) : json(nullptr);
  out["r"] = c.r ? json(*c.r) : json(nullptr);
  return out;
}

json to_json(const ExpressibilityReport& r) {
  json acyclic = json::array(), any = json::array();
  for (const auto& c : r.acyclic_checks) acyclic.push_back(to_json(c));
  for (const auto& c : r.any_checks) any.push_back(to_json(c));
  return {{"cyc_sample", r.cyc_sample},
          {"k_max", r.k_max},
          {"acyclic", {{"pass", r.acyclic_pass}, {"checks", acyclic}}},
          {"any", {{"pass", r.any_pass}, {"checks", any}}},
          {"overall", to_string(r.overall)},
          {"notes", r.notes}};
}

std::string inputs_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json envelope(std::string_view subcommand, std::string_view inputs, json result) {
  return {{"tool_version", kToolVersion},
          {"subcommand", subcommand},
          {"inputs_digest", inputs_digest(inputs)},
          {"result", std::move(result)}};
}

}  // namespace orexp
