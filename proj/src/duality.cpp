#include "orexp/duality.hpp"

#include <algorithm>
#include <future>

#include "orexp/canonical.hpp"

namespace orexp {

std::optional<DualityCounterexample> check_duality_instance(std::span<const Digraph> F,
                                                            std::span<const Digraph> M,
                                                            const Digraph& d,
                                                            SearchLimits limits) {
  DualityCounterexample c;
  c.d = d;
  for (std::size_t i = 0; i < F.size() && !c.from_forbidden; ++i) {
    if (auto w = hom_exists(F[i], d, limits)) {
      c.forbidden_index = static_cast<int>(i);
      c.from_forbidden = std::move(w);
    }
  }
  for (std::size_t i = 0; i < M.size() && !c.to_target; ++i) {
    if (auto w = hom_exists(d, M[i], limits)) {
      c.target_index = static_cast<int>(i);
      c.to_target = std::move(w);
    }
  }
  // Forb(F) side holds iff nothing maps in; CSP(M) side iff d maps out.
  bool in_forb = !c.from_forbidden.has_value();
  bool in_csp = c.to_target.has_value();
  if (in_forb == in_csp) return std::nullopt;
  return c;
}

DualityReport verify_generalized_duality(std::span<const Digraph> F, std::span<const Digraph> M,
                                         int n_max, int jobs, SearchLimits limits) {
  if (n_max > kDefaultUniverseBound) {
    throw std::invalid_argument("duality universe limited to " +
                                std::to_string(kDefaultUniverseBound) + " vertices");
  }
  jobs = std::max(1, jobs);
  DualityReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto universe = enumerate_digraphs(n, false);
    // Each job scans a contiguous slice and stops at its first hit; the
    // lowest slice with a hit holds the first counterexample overall.
    const std::size_t slice = (universe.size() + jobs - 1) / jobs;
    auto scan = [&](std::size_t lo, std::size_t hi) {
      std::pair<std::size_t, std::optional<DualityCounterexample>> out{hi - lo, std::nullopt};
      for (std::size_t i = lo; i < hi; ++i) {
        if (auto c = check_duality_instance(F, M, universe[i], limits)) {
          out = {i - lo + 1, std::move(c)};
          break;
        }
      }
      return out;
    };
    std::vector<std::future<std::pair<std::size_t, std::optional<DualityCounterexample>>>> parts;
    for (std::size_t lo = 0; lo < universe.size(); lo += slice) {
      std::size_t hi = std::min(universe.size(), lo + slice);
      parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, scan,
                                 lo, hi));
    }
    for (auto& part : parts) {
      auto [count, found] = part.get();
      if (report.counterexample) continue;  // drain remaining futures
      report.checked += count;
      if (found) report.counterexample = std::move(found);
    }
    if (report.counterexample) return report;
    report.holds_up_to = n;
  }
  return report;
}

DualityReport verify_duality_pair(const Digraph& a, const Digraph& b, int n_max, int jobs,
                                  SearchLimits limits) {
  std::vector<Digraph> F{a}, M{b};
  return verify_generalized_duality(F, M, n_max, jobs, limits);
}

bool counterexample_verifies(std::span<const Digraph> F, std::span<const Digraph> M,
                             const DualityCounterexample& c, SearchLimits limits) {
  if (c.from_forbidden.has_value() != c.to_target.has_value()) return false;
  if (c.from_forbidden) {
    return c.forbidden_index >= 0 && c.target_index >= 0 &&
           is_homomorphism(F[c.forbidden_index], c.d, c.from_forbidden->mapping) &&
           is_homomorphism(c.d, M[c.target_index], c.to_target->mapping);
  }
  bool none_in = std::none_of(F.begin(), F.end(),
                              [&](const Digraph& h) { return hom_exists(h, c.d, limits).has_value(); });
  bool none_out = std::none_of(M.begin(), M.end(),
                               [&](const Digraph& b) { return hom_exists(c.d, b, limits).has_value(); });
  return none_in && none_out;
}

}  // namespace orexp
