#include "orexp/holes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orexp {

namespace {

std::set<int> clamp_lengths(const std::set<int>& in, std::vector<std::string>& warnings) {
  std::set<int> out;
  for (int k : in) {
    if (k < 4) {
      warnings.push_back("length " + std::to_string(k) + " dropped: holes have length >= 4");
    } else {
      out.insert(k);
    }
  }
  return out;
}

bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

// Tail of C, whichever way the spec was given.
DeclaredTail c_tail(const HoleClassSpec& spec) {
  switch (spec.variant()) {
    case HoleVariant::kFiniteSet: return DeclaredTail::kFinite;
    case HoleVariant::kCofiniteComplement: return DeclaredTail::kCofinite;
    case HoleVariant::kOddTail: return DeclaredTail::kOddTail;
    case HoleVariant::kCustom: return spec.tail();
  }
  return DeclaredTail::kOther;
}

int sample_limit(const HoleClassSpec& spec, int k_max) {
  return spec.variant() == HoleVariant::kCustom ? std::min(k_max, spec.bound()) : k_max;
}

long gcd_from(const std::set<int>& cyc, int M) {
  long g = 0;
  for (auto it = cyc.lower_bound(M); it != cyc.end(); ++it) g = std::gcd(g, static_cast<long>(*it));
  return g;
}

std::optional<int> largest_member(const HoleClassSpec& spec, int limit) {
  std::optional<int> best;
  for (int k = 4; k <= limit; ++k)
    if (spec.contains(k)) best = k;
  return best;
}

CheckResult make(std::string tag, CheckStatus status, std::string detail) {
  CheckResult c;
  c.tag = std::move(tag);
  c.status = status;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

HoleClassSpec HoleClassSpec::finite_set(std::set<int> lengths) {
  HoleClassSpec s;
  s.variant_ = HoleVariant::kFiniteSet;
  s.tail_ = DeclaredTail::kFinite;
  s.name_ = "finite";
  s.lengths_ = clamp_lengths(lengths, s.warnings_);
  return s;
}

HoleClassSpec HoleClassSpec::cofinite_complement(std::set<int> excluded) {
  HoleClassSpec s;
  s.variant_ = HoleVariant::kCofiniteComplement;
  s.tail_ = DeclaredTail::kCofinite;
  s.name_ = "cofinite";
  s.lengths_ = clamp_lengths(excluded, s.warnings_);
  return s;
}

HoleClassSpec HoleClassSpec::odd_tail(int M, std::set<int> extra) {
  HoleClassSpec s;
  s.variant_ = HoleVariant::kOddTail;
  s.tail_ = DeclaredTail::kOddTail;
  s.name_ = "odd_tail";
  if (M < 4) {
    s.warnings_.push_back("threshold " + std::to_string(M) + " raised to 4");
    M = 4;
  }
  s.threshold_ = M;
  s.lengths_ = clamp_lengths(extra, s.warnings_);
  return s;
}

HoleClassSpec HoleClassSpec::custom(std::string name, std::function<bool(int)> predicate,
                                    int bound, DeclaredTail tail) {
  if (bound < 50) throw std::invalid_argument("custom hole sets need a sample bound >= 50");
  if (!predicate) throw std::invalid_argument("custom hole set without membership test");
  HoleClassSpec s;
  s.variant_ = HoleVariant::kCustom;
  s.tail_ = tail;
  s.name_ = std::move(name);
  s.bound_ = bound;
  s.predicate_ = std::move(predicate);
  for (int k = 1; k < 4; ++k) {
    if (s.predicate_(k)) {
      s.warnings_.push_back("length " + std::to_string(k) + " dropped: holes have length >= 4");
    }
  }
  return s;
}

bool HoleClassSpec::contains(int k) const {
  if (k < 4) return false;
  switch (variant_) {
    case HoleVariant::kFiniteSet: return lengths_.count(k) > 0;
    case HoleVariant::kCofiniteComplement: return lengths_.count(k) == 0;
    case HoleVariant::kOddTail: return (k >= threshold_ && k % 2 == 1) || lengths_.count(k) > 0;
    case HoleVariant::kCustom: return predicate_(k);
  }
  return false;
}

std::function<bool(int)> named_predicate(const std::string& name) {
  if (name == "primes") return is_prime;
  if (name == "even") return [](int k) { return k % 2 == 0; };
  if (name == "odd") return [](int k) { return k % 2 == 1; };
  const std::string prefix = "multiples_of:";
  if (name.rfind(prefix, 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      d = 0;
    }
    if (d < 1) throw std::invalid_argument("bad divisor in '" + name + "'");
    return [d](int k) { return k % d == 0; };
  }
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

std::string_view to_string(DeclaredTail t) {
  switch (t) {
    case DeclaredTail::kFinite: return "finite";
    case DeclaredTail::kCofinite: return "cofinite";
    case DeclaredTail::kOddTail: return "odd_tail";
    case DeclaredTail::kOther: return "coinfinite";
  }
  return "?";
}

DeclaredTail parse_tail(std::string_view text) {
  if (text == "finite") return DeclaredTail::kFinite;
  if (text == "cofinite") return DeclaredTail::kCofinite;
  if (text == "odd_tail" || text == "odd-tail") return DeclaredTail::kOddTail;
  if (text == "coinfinite" || text == "other") return DeclaredTail::kOther;
  throw std::invalid_argument("unknown tail '" + std::string(text) + "'");
}

std::string_view to_string(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::kNotExpressibleAcyclic: return "NotExpressibleAcyclic";
    case OverallVerdict::kNotExpressibleAny: return "NotExpressibleAny";
    case OverallVerdict::kNecessaryConditionsPass: return "NecessaryConditionsPass";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "n/a";
  }
  return "?";
}

std::set<int> cycles_in_class(const HoleClassSpec& spec, int k_max) {
  if (k_max < 4) throw std::invalid_argument("k_max must be at least 4");
  std::set<int> cyc{3};
  const int limit = sample_limit(spec, k_max);
  for (int k = 4; k <= limit; ++k)
    if (!spec.contains(k)) cyc.insert(k);
  return cyc;
}

CheckResult check_multiples_closure(const HoleClassSpec& spec, int k_max) {
  const std::string tag = "nec:multiples";
  const DeclaredTail tail = c_tail(spec);
  if (tail == DeclaredTail::kCofinite) {
    return make(tag, CheckStatus::kNotApplicable, "cyc is finite");
  }
  const int limit = sample_limit(spec, k_max);
  if (tail == DeclaredTail::kFinite) {
    auto top = largest_member(spec, limit);
    CheckResult c = make(tag, CheckStatus::kPass, "C finite: cyc_M holds every length >= M");
    c.M = std::max(4, top.value_or(3) + 1);
    return c;
  }
  const std::set<int> cyc = cycles_in_class(spec, k_max);
  std::vector<std::pair<long, long>> violations;
  for (int k : cyc) {
    if (k < 4) continue;
    for (int lk = 2 * k; lk <= limit; lk += k) {
      if (!cyc.count(lk)) {
        violations.emplace_back(k, lk);
        break;
      }
    }
  }
  // An odd tail is closed beyond its last irregularity; otherwise M must
  // stay low enough that the sample still says something above it.
  const int m_cap = tail == DeclaredTail::kOddTail ? limit : limit / 3;
  for (int M = 4; M <= m_cap; ++M) {
    bool clean = std::none_of(violations.begin(), violations.end(),
                              [&](const std::pair<long, long>& v) { return v.first >= M; });
    if (clean) {
      CheckResult c = make(tag, CheckStatus::kPass, "cyc_M closed under multiples in the sample");
      c.M = M;
      return c;
    }
  }
  CheckResult c = make(tag, CheckStatus::kFail, "");
  c.witness = violations.front();
  c.detail = std::to_string(violations.front().first) + " is a cycle length but " +
             std::to_string(violations.front().second) + " is not; violations persist up to k = " +
             std::to_string(violations.back().first);
  return c;
}

CheckResult check_infinite_cycles(const HoleClassSpec& spec) {
  const std::string tag = "nofiniteC";
  if (c_tail(spec) != DeclaredTail::kCofinite) {
    return make(tag, CheckStatus::kPass, "C is not cofinite, so cyc is infinite");
  }
  // C is cofinite: cyc is 3 plus the finitely many excluded lengths.
  int top = 3;
  if (spec.variant() == HoleVariant::kCofiniteComplement) {
    if (!spec.lengths().empty()) top = *spec.lengths().rbegin();
  } else {
    for (int k = 4; k <= spec.bound(); ++k)
      if (!spec.contains(k)) top = k;
  }
  CheckResult c = make(tag, CheckStatus::kFail,
                       "C is cofinite: no cycle longer than " + std::to_string(top) +
                           " is in the class, yet every path is");
  c.witness = std::pair<long, long>{top, top + 1};
  return c;
}

CheckResult check_coupling_cofiniteness(const HoleClassSpec& spec, int k_max) {
  const std::string tag = "sncondition";
  const DeclaredTail tail = c_tail(spec);
  const int limit = sample_limit(spec, k_max);
  if (tail == DeclaredTail::kCofinite) {
    return make(tag, CheckStatus::kNotApplicable, "cyc is finite; see nofiniteC");
  }
  if (tail == DeclaredTail::kFinite) {
    CheckResult c = make(tag, CheckStatus::kPass, "C finite: cyc_M is every length >= M");
    c.M = std::max(4, largest_member(spec, limit).value_or(3) + 1);
    c.r = 1;
    return c;
  }
  const std::set<int> cyc = cycles_in_class(spec, k_max);
  if (tail == DeclaredTail::kOddTail) {
    int M = 4;
    for (int k : cyc)
      if (k % 2 == 1) M = std::max(M, k + 1);
    CheckResult c = make(tag, CheckStatus::kPass,
                         "odd tail: cyc_M is the even lengths >= M (M sample-derived)");
    c.M = M;
    c.r = 2;
    return c;
  }
  const int m_top = std::max(4, limit / 3);
  const long g_top = gcd_from(cyc, m_top);
  int M = 4;
  while (M < m_top && gcd_from(cyc, M) != g_top) ++M;
  if (g_top == 1) {
    CheckResult c = make(tag, CheckStatus::kFail,
                         "cycle lengths with gcd 1 above every threshold force r = 1, but C is "
                         "infinite so cyc_M is not cofinite in Z+");
    for (auto a = cyc.lower_bound(4); a != cyc.end() && !c.witness; ++a)
      for (auto b = std::next(a); b != cyc.end() && !c.witness; ++b)
        if (std::gcd(*a, *b) == 1) c.witness = std::pair<long, long>{*a, *b};
    c.r = 1;
    return c;
  }
  if (g_top == 2) {
    CheckResult c = make(tag, CheckStatus::kFail,
                         "sampled cyc_M lies in 2Z+, but the declared tail is not odd, so C keeps "
                         "infinitely many even lengths and cyc_M is not cofinite in 2Z+");
    c.M = M;
    c.r = 2;
    return c;
  }
  CheckResult c = make(tag, CheckStatus::kPass,
                       "sampled cyc_M lies in rZ+ (sample-derived; cofiniteness not checkable)");
  c.M = M;
  c.r = g_top;
  return c;
}

namespace {

CheckResult period_two_check(const HoleClassSpec& spec, const CheckResult& coupling,
                             bool acyclic) {
  const std::string tag = acyclic ? "thm:main*" : "thm:main";
  switch (c_tail(spec)) {
    case DeclaredTail::kFinite:
      return make(tag, CheckStatus::kPass, "C is finite");
    case DeclaredTail::kCofinite:
      if (acyclic) return make(tag, CheckStatus::kPass, "C is cofinite");
      return make(tag, CheckStatus::kFail, "C is cofinite, excluded by nofiniteC");
    case DeclaredTail::kOddTail: {
      CheckResult c = make(tag, CheckStatus::kPass, "C_M is the odd lengths >= M");
      c.M = coupling.M;
      c.r = 2;
      return c;
    }
    case DeclaredTail::kOther:
      break;
  }
  CheckResult c = make(tag, CheckStatus::kFail, "");
  c.M = coupling.M;
  c.r = coupling.r;
  long r = coupling.r.value_or(1);
  if (r >= 3) {
    // C_n with n = 2r*alpha - 2 is not in the class, but adding a chord
    // between antipodal vertices leaves two holes of length r*alpha that are.
    long M = coupling.M.value_or(4);
    long alpha = 1;
    while (r * alpha <= M + 1) ++alpha;
    c.witness = std::pair<long, long>{2 * r * alpha - 2, r * alpha};
    c.detail = "period " + std::to_string(r) + " is not 2";
  } else {
    c.witness = coupling.witness;
    c.detail = "C is infinite and coinfinite without an odd tail (period " + std::to_string(r) +
               ")";
  }
  return c;
}

bool any_fail(const std::vector<CheckResult>& checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

}  // namespace

ExpressibilityReport trichotomy_verdict(const HoleClassSpec& spec, int k_max) {
  ExpressibilityReport report;
  report.k_max = k_max;
  report.cyc_sample = cycles_in_class(spec, k_max);
  report.notes = spec.warnings();

  CheckResult multiples = check_multiples_closure(spec, k_max);
  CheckResult coupling = check_coupling_cofiniteness(spec, k_max);
  report.acyclic_checks = {multiples, coupling, period_two_check(spec, coupling, true)};
  report.any_checks = {check_infinite_cycles(spec), multiples, coupling,
                       period_two_check(spec, coupling, false)};
  report.acyclic_pass = !any_fail(report.acyclic_checks);
  report.any_pass = !any_fail(report.any_checks);
  if (!report.acyclic_pass) report.overall = OverallVerdict::kNotExpressibleAcyclic;
  else if (!report.any_pass) report.overall = OverallVerdict::kNotExpressibleAny;
  else report.overall = OverallVerdict::kNecessaryConditionsPass;
  if (report.acyclic_pass || report.any_pass) {
    report.notes.push_back("passing the necessary conditions makes the class a candidate only");
  }
  if (spec.variant() == HoleVariant::kCustom) {
    report.notes.push_back("tail taken as declared: " + std::string(to_string(spec.tail())));
  }
  return report;
}

}  // namespace orexp
