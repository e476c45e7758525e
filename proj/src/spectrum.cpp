#include "orexp/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "orexp/automaton.hpp"
#include "orexp/canonical.hpp"

namespace orexp {

namespace {

bool has_single_vertex_member(const ForbiddenSet& F) {
  return std::any_of(F.members().begin(), F.members().end(),
                     [](const OrientedGraph& h) { return h.order() == 1; });
}

bool admits(const Graph& g, const ForbiddenSet& F, SearchMode mode, SearchLimits limits) {
  return admits_orientation(g, F, mode, limits).admits;
}

}  // namespace

int language_threshold(const ForbiddenSet& F) { return std::max(4, F.max_order() + 1); }

std::set<int> cycle_spectrum(const ForbiddenSet& F, int k_min, int k_max, bool acyclic,
                             SpectrumRoute route, SearchLimits limits) {
  if (k_min < 3) throw std::invalid_argument("cycles start at length 3");
  if (!F.all_connected()) throw std::invalid_argument("cycle spectrum needs connected members");
  const int threshold = language_threshold(F);
  if (route == SpectrumRoute::kLanguage && k_min < threshold) {
    throw std::invalid_argument("language route starts at length " + std::to_string(threshold));
  }
  std::set<int> spectrum;
  if (k_min > k_max || has_single_vertex_member(F)) return spectrum;

  std::set<int> periods;
  if (route != SpectrumRoute::kBruteForce && k_max >= threshold) {
    periods = enumerate_periods(forbidden_factor_set(F.members()), k_max, acyclic);
  }
  for (int k = k_min; k <= k_max; ++k) {
    bool search = route == SpectrumRoute::kBruteForce ||
                  (route == SpectrumRoute::kAuto && k < threshold);
    bool in = search ? admits(make_cycle(k), F, {Containment::kInduced, acyclic}, limits)
                     : periods.count(k) > 0;
    if (in) spectrum.insert(k);
  }
  return spectrum;
}

std::set<int> path_spectrum(const ForbiddenSet& F, int k_min, int k_max, SpectrumRoute route,
                            SearchLimits limits) {
  if (k_min < 0) throw std::invalid_argument("path lengths are nonnegative");
  std::set<int> spectrum;
  if (k_min > k_max || has_single_vertex_member(F)) return spectrum;
  if (route == SpectrumRoute::kBruteForce) {
    for (int k = k_min; k <= k_max; ++k)
      if (admits(make_path(k), F, {}, limits)) spectrum.insert(k);
    return spectrum;
  }
  if (!F.all_connected()) throw std::invalid_argument("path spectrum needs connected members");
  for (int k : enumerate_word_lengths(forbidden_factor_set(F.members()), k_max))
    if (k >= k_min) spectrum.insert(k);
  return spectrum;
}

Word cycle_word(const Digraph& oriented_cycle) {
  const int k = oriented_cycle.order();
  std::vector<Letter> letters;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    if (oriented_cycle.has_arc(i, j)) letters.push_back(Letter::Fwd);
    else if (oriented_cycle.has_arc(j, i)) letters.push_back(Letter::Bwd);
    else throw std::invalid_argument("not an orientation of the standard cycle");
  }
  return Word(std::move(letters));
}

MultiplesReport multiples_property_check(const ForbiddenSet& F, int k, int multiplier_max,
                                         bool acyclic, SearchLimits limits) {
  if (k < std::max(4, F.max_order())) throw std::invalid_argument("k below max(4, m_F)");
  const SearchMode mode{Containment::kInduced, acyclic};
  MultiplesReport report;
  report.k = k;
  auto base = admits_orientation(make_cycle(k), F, mode, limits);
  if (!base.admits) return report;
  report.in_spectrum = true;
  const Word w = cycle_word(base.witness->digraph());
  for (int l = 2; l <= multiplier_max; ++l) {
    Word power = w.power(static_cast<std::size_t>(l));
    OrientedGraph cycle = word_to_cycle(power);
    if (!is_forbidden_free(cycle, F, Containment::kInduced) || (acyclic && !is_acyclic(cycle))) {
      auto retry = admits_orientation(make_cycle(l * k), F, mode, limits);
      if (!retry.admits) {
        report.violation = l * k;
        return report;
      }
      power = cycle_word(retry.witness->digraph());
    }
    report.multiples.push_back(l * k);
    report.witnesses.push_back(std::move(power));
  }
  return report;
}

ConnectedReduction reduce_to_connected(const ForbiddenSet& F, int n_verify, SearchMode mode,
                                       SearchLimits limits) {
  ConnectedReduction out;
  if (F.all_connected()) {
    out.reduced = F;
    out.verified_up_to = n_verify;
    return out;
  }
  std::vector<Graph> universe;
  for (int n = 1; n <= n_verify; ++n)
    for (auto& g : enumerate_graphs(n)) universe.push_back(std::move(g));
  std::vector<bool> reference;
  for (const auto& g : universe) reference.push_back(admits(g, F, mode, limits));

  // Options per member: itself when connected, else each distinct component.
  std::vector<std::vector<OrientedGraph>> options;
  for (const auto& h : F.members()) {
    std::vector<OrientedGraph> opts;
    if (is_connected(h)) {
      opts.push_back(h);
    } else {
      for (const auto& comp : components(h)) {
        OrientedGraph part(induced_subdigraph(h, comp));
        bool seen = std::any_of(opts.begin(), opts.end(),
                                [&](const OrientedGraph& o) { return is_isomorphic(o, part); });
        if (!seen) opts.push_back(std::move(part));
      }
    }
    options.push_back(std::move(opts));
  }

  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<OrientedGraph> chosen;
    for (std::size_t i = 0; i < options.size(); ++i) chosen.push_back(options[i][pick[i]]);
    ForbiddenSet candidate(std::move(chosen));
    ++out.candidates_tried;
    bool agree = true;
    for (std::size_t i = 0; i < universe.size() && agree; ++i)
      agree = admits(universe[i], candidate, mode, limits) == reference[i];
    if (agree) {
      out.reduced = std::move(candidate);
      out.verified_up_to = n_verify;
      return out;
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == options[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return out;
}

BlowupReport overlap_blowup(const Graph& g, const ForbiddenSet& F, bool acyclic,
                            SearchLimits limits) {
  BlowupReport report;
  report.admits_free = admits(g, F, {Containment::kInduced, acyclic}, limits);
  report.admits_overlap_free = admits(g, F, {Containment::kOverlap, acyclic}, limits);
  for (const auto& h : F.members()) {
    auto comps = components(h);
    bool fits = std::all_of(comps.begin(), comps.end(), [&](const std::vector<Vertex>& c) {
      return static_cast<int>(c.size()) <= g.order();
    });
    if (!fits) continue;
    ++report.relevant_members;
    report.max_components = std::max(report.max_components, static_cast<int>(comps.size()));
  }
  report.copies = report.relevant_members * report.max_components;
  if (report.copies > 0) {
    report.union_admits_free =
        admits(disjoint_copies(g, report.copies), F, {Containment::kInduced, acyclic}, limits);
  }
  return report;
}

}  // namespace orexp
