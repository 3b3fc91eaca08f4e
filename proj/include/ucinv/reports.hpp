#ifndef UCINV_REPORTS_HPP
#define UCINV_REPORTS_HPP

#include "ucinv/scenarios.hpp"
#include "ucinv/verify.hpp"

#include <json.hpp>

namespace ucinv {

using Json = nlohmann::ordered_json;

Json to_json(const DivergenceReport& report);
Json to_json(const BalanceDiagnostics& diagnostics);
Json to_json(const CheckResult& check);
Json to_json(const VerifyReport& report);

/// Run summary: configuration echo, expectation results, divergence and
/// balancing diagnostics.
Json summary_json(const ScenarioOutcome& outcome, const std::string& scenario_name);

}  // namespace ucinv

#endif
