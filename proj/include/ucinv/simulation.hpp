#ifndef UCINV_SIMULATION_HPP
#define UCINV_SIMULATION_HPP

#include "ucinv/generalized_inverse.hpp"
#include "ucinv/kinematics.hpp"

#include <optional>
#include <vector>

namespace ucinv {

enum class ModelKind { Arm, Rover };

/// Fixed-step resolved-rate run description. Model parameters, the target
/// velocity, and the initial state are given in baseline units (meters,
/// radians); `unit_scale` and `frame_rotation` select the unit system and
/// Euclidean frame the run is carried out in.
struct SimulationConfig {
    ModelKind model = ModelKind::Arm;
    ArmModel arm;
    RoverModel rover;
    InverseKind inverse = InverseKind::mp();
    Vector target_velocity;
    double dt = 1e-3;
    double duration = 0.1;
    double unit_scale = 1.0;
    double frame_rotation = 0.0;  // radians; rover only
    BalanceSettings balance;
    /// A joint's velocity is excessive when its |normalized qdot| exceeds
    /// this multiple of the joint's peak in the baseline run.
    double divergence_factor = 50.0;

    Eigen::Index dim() const { return model == ModelKind::Arm ? 3 : 5; }
    FrameTransform transform() const;
    bool is_baseline() const;
    SimulationConfig baseline() const;
    void validate() const;
};

/// One step of a run, in the run's native units and frame.
struct TrajectoryRecord {
    double t = 0.0;
    Vector qdot;        // solved joint velocities
    Vector q;           // state after the step
    Vector achieved_v;  // J * qdot
    double residual = 0.0;
};

struct DivergenceReport {
    Vector max_abs_qdot;   // per joint, normalized to baseline units/frame
    Vector thresholds;     // per joint
    bool diverged = false;
    std::optional<double> first_divergence_time;
    /// Threshold crossings before this time are treated as a startup
    /// transient; divergence means crossings persist past it.
    double assessed_from = 0.0;
};

struct RunResult {
    SimulationConfig config;
    std::vector<TrajectoryRecord> records;
    std::vector<Vector> normalized_qdot;  // per step, baseline units/frame
    DivergenceReport divergence;
    BalanceDiagnostics balance_diagnostics;
    Vector final_state_baseline;
};

struct StepResult {
    Vector qdot;           // native units/frame
    Vector qdot_baseline;  // normalized
    Vector next_q_baseline;
    Vector achieved_v;
    double residual = 0.0;
};

/// Solve qdot = inverse(J) * v at the given baseline state and advance one
/// explicit Euler step.
StepResult step(const Vector& q_baseline, const SimulationConfig& config,
                BalanceDiagnostics* diagnostics = nullptr);

/// Run the full trajectory and assess divergence against the baseline run
/// (same model and inverse, unit scale 1, no rotation, dt = 1e-3).
RunResult run(const SimulationConfig& config);

/// Max over steps of the infinity-norm gap between a's qdot and b's qdot
/// after normalizing b through `normalizer`.
double compare_runs(const RunResult& a, const RunResult& b, const FrameTransform& normalizer);

/// Native state of the run's unit system and frame for a baseline state.
Vector to_transformed_state(const Vector& q_baseline, const SimulationConfig& config);

/// The Jacobian the run actually inverts, built from the transformed state
/// so exact zeros are preserved. Equals j_left * J(q) * j_right.
Matrix transformed_jacobian(const Vector& q_baseline, const SimulationConfig& config);

}  // namespace ucinv

#endif
