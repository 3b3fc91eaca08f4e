#ifndef UCINV_SCENARIOS_HPP
#define UCINV_SCENARIOS_HPP

#include "ucinv/simulation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ucinv {

/// A reference vector a scenario is expected to reproduce.
struct ExpectedVector {
    enum class Quantity {
        FirstQdotNative,          // solver output, run units/frame
        FirstQdotCommon,          // normalized to baseline units and frame
        FirstQdotUnitNormalized,  // unit scale removed, frame left as solved
        FinalStateBaseline,       // trajectory endpoint, baseline units
    };
    Quantity quantity;
    std::string label;
    std::string source;  // "tabulated" (published reference) or "derived" (independent oracle)
    Vector value;
    double tolerance = 1e-6;
    /// Component indices where the tabulated sign contradicts the exact
    /// solve of the governing equation; only the magnitude is compared.
    std::vector<int> magnitude_only;
};

struct ScenarioSpec {
    std::string name;
    std::string description;
    SimulationConfig config;
    std::vector<ExpectedVector> expected_vectors;
    std::optional<bool> expect_diverged;
};

struct CheckResult {
    std::string label;
    std::string source;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

struct ScenarioOutcome {
    ScenarioSpec spec;
    RunResult result;
    std::vector<CheckResult> checks;
    bool passed = true;
};

/// Built-in scenarios covering every experimental cell: arm x {mp, uc} x
/// {m, cm} x {dt 1e-3, 1e-4} and rover x {mp, uc, mixed} x {m, cm, cm+30deg}.
const std::vector<ScenarioSpec>& scenario_registry();

const ScenarioSpec* find_scenario(const std::string& name);

/// Runs the scenario and evaluates its expectations.
ScenarioOutcome run_scenario(const ScenarioSpec& spec);

/// Extracts the quantity an expectation compares against.
Vector expected_quantity(const RunResult& result, ExpectedVector::Quantity quantity);

/// Trajectory CSV: header t,qd_1..qd_k,q_1..q_k,v_1..v_k,residual with
/// angle columns reported in degrees (rates in degree/s), lengths in the
/// run's length unit.
void write_trajectory_csv(std::ostream& out, const RunResult& result);
void write_trajectory_csv_file(const std::string& path, const RunResult& result);

}  // namespace ucinv

#endif
