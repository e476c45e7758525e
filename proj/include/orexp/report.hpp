#ifndef OREXP_REPORT_HPP_
#define OREXP_REPORT_HPP_

// JSON renderings of results and the CLI report envelope.

#include <string>
#include <string_view>

#include <json.hpp>

#include "orexp/duality.hpp"
#include "orexp/holes.hpp"
#include "orexp/periods.hpp"
#include "orexp/search.hpp"

namespace orexp {

inline constexpr std::string_view kToolVersion = "0.1.0";

nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const HomWitness& w);
nlohmann::json to_json(const OrientationVerdict& v, const SearchMode& mode);
nlohmann::json to_json(const PeriodStructure& p);
nlohmann::json to_json(const DualityReport& r);
nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const ExpressibilityReport& r);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string inputs_digest(std::string_view text);

/// {tool_version, subcommand, inputs_digest, result}.
nlohmann::json envelope(std::string_view subcommand, std::string_view inputs,
                        nlohmann::json result);

}  // namespace orexp

#endif  // OREXP_REPORT_HPP_
