#include "ucinv/reports.hpp"

#include <cmath>
#include <numbers>

namespace ucinv {

namespace {

Json vector_json(const Vector& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

}  // namespace

Json to_json(const DivergenceReport& report) {
    Json j;
    j["diverged"] = report.diverged;
    j["max_abs_qdot"] = vector_json(report.max_abs_qdot);
    j["thresholds"] = vector_json(report.thresholds);
    j["assessed_from"] = report.assessed_from;
    if (report.first_divergence_time) {
        j["first_divergence_time"] = *report.first_divergence_time;
    } else {
        j["first_divergence_time"] = nullptr;
    }
    return j;
}

Json to_json(const BalanceDiagnostics& diagnostics) {
    Json j;
    j["decompositions"] = diagnostics.decompositions;
    j["max_iterations"] = diagnostics.max_iterations;
    j["nonconverged"] = diagnostics.nonconverged;
    return j;
}

Json to_json(const CheckResult& check) {
    Json j;
    j["label"] = check.label;
    j["source"] = check.source;
    j["deviation"] = check.deviation;
    j["tolerance"] = check.tolerance;
    j["pass"] = check.passed;
    return j;
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["pass"] = report.passed;
    Json checks = Json::array();
    for (const VerifyCheck& c : report.checks) {
        Json cj;
        cj["label"] = c.label;
        cj["trials"] = c.trials;
        cj["measured"] = c.worst;
        cj["bound"] = c.tolerance;
        cj["pass"] = c.passed;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

Json summary_json(const ScenarioOutcome& outcome, const std::string& scenario_name) {
    const SimulationConfig& cfg = outcome.result.config;
    Json j;
    j["scenario"] = scenario_name;
    Json config;
    config["model"] = cfg.model == ModelKind::Arm ? "arm" : "rover";
    config["inverse"] = cfg.inverse.name();
    config["unit_scale"] = cfg.unit_scale;
    config["frame_rotation_deg"] = cfg.frame_rotation * 180.0 / std::numbers::pi;
    config["dt"] = cfg.dt;
    config["duration"] = cfg.duration;
    j["config"] = config;
    j["steps"] = outcome.result.records.size();
    j["final_state_baseline"] = vector_json(outcome.result.final_state_baseline);
    Json checks = Json::array();
    for (const CheckResult& c : outcome.checks) checks.push_back(to_json(c));
    j["expectations"] = checks;
    j["pass"] = outcome.passed;
    j["divergence"] = to_json(outcome.result.divergence);
    j["balancing"] = to_json(outcome.result.balance_diagnostics);
    return j;
}

}  // namespace ucinv
