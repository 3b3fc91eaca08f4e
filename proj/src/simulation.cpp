#include "ucinv/simulation.hpp"

#include <cmath>
#include <stdexcept>

namespace ucinv {

FrameTransform SimulationConfig::transform() const {
    if (model == ModelKind::Arm) return arm_unit_transform(unit_scale);
    return rover_frame_transform(unit_scale, frame_rotation);
}

bool SimulationConfig::is_baseline() const {
    return unit_scale == 1.0 && frame_rotation == 0.0 && dt == 1e-3;
}

SimulationConfig SimulationConfig::baseline() const {
    SimulationConfig b = *this;
    b.unit_scale = 1.0;
    b.frame_rotation = 0.0;
    b.dt = 1e-3;
    return b;
}

void SimulationConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimulationConfig: dt must be positive");
    if (!(duration >= dt)) throw std::invalid_argument("SimulationConfig: duration must cover one step");
    if (!(unit_scale > 0.0)) throw std::invalid_argument("SimulationConfig: unit scale must be positive");
    if (target_velocity.size() != dim() || !target_velocity.allFinite()) {
        throw std::invalid_argument("SimulationConfig: target velocity must be finite and match the model");
    }
    if (model == ModelKind::Arm && frame_rotation != 0.0) {
        throw std::invalid_argument("SimulationConfig: the arm has no Euclidean frame to rotate");
    }
    if (inverse.family == InverseKind::Family::Mixed &&
        (model != ModelKind::Rover || inverse.unit_vars != 2)) {
        throw std::invalid_argument("SimulationConfig: mixed inverse expects the rover's 2/3 split");
    }
    if (model == ModelKind::Arm) arm.validate(); else rover.validate();
}

Vector to_transformed_state(const Vector& q_baseline, const SimulationConfig& config) {
    const double c = config.unit_scale;
    if (config.model == ModelKind::Arm) {
        Vector q(3);
        q << q_baseline(0), q_baseline(1), c * q_baseline(2);
        return q;
    }
    const double tp = config.frame_rotation;
    const double x = q_baseline(2);
    const double y = q_baseline(3);
    Vector q(5);
    q << q_baseline(0) - tp,
         c * q_baseline(1),
         c * (std::cos(tp) * x + std::sin(tp) * y),
         c * (-std::sin(tp) * x + std::cos(tp) * y),
         c * q_baseline(4);
    return q;
}

Matrix transformed_jacobian(const Vector& q_baseline, const SimulationConfig& config) {
    const Vector qt = to_transformed_state(q_baseline, config);
    if (config.model == ModelKind::Arm) {
        ArmModel scaled = config.arm;
        scaled.a1 *= config.unit_scale;
        scaled.a2 *= config.unit_scale;
        scaled.q = qt;
        return arm_jacobian(scaled);
    }
    RoverModel rotated = config.rover;
    rotated.q = qt;
    return rover_jacobian(rotated);
}

StepResult step(const Vector& q_baseline, const SimulationConfig& config,
                BalanceDiagnostics* diagnostics) {
    config.validate();
    if (q_baseline.size() != config.dim() || !q_baseline.allFinite()) {
        throw std::invalid_argument("step: state must be finite and match the model");
    }
    const FrameTransform t = config.transform();
    const Matrix jt = transformed_jacobian(q_baseline, config);
    const Vector vt = t.v_left * config.target_velocity;

    StepResult out;
    out.qdot = apply_inverse(config.inverse, jt, config.balance, diagnostics) * vt;
    out.qdot_baseline = t.solution_normalizer * out.qdot;
    out.next_q_baseline = q_baseline + out.qdot_baseline * config.dt;
    out.achieved_v = jt * out.qdot;
    out.residual = (out.achieved_v - vt).norm();
    return out;
}

namespace {

DivergenceReport assess_divergence(const std::vector<Vector>& normalized,
                                   const std::vector<double>& times,
                                   const std::vector<Vector>& baseline_normalized,
                                   double factor, double duration) {
    const Eigen::Index k = normalized.empty() ? 0 : normalized.front().size();
    DivergenceReport report;
    report.max_abs_qdot = Vector::Zero(k);
    for (const Vector& qn : normalized) {
        report.max_abs_qdot = report.max_abs_qdot.cwiseMax(qn.cwiseAbs());
    }
    Vector baseline_peak = Vector::Zero(k);
    for (const Vector& qn : baseline_normalized) {
        baseline_peak = baseline_peak.cwiseMax(qn.cwiseAbs());
    }
    report.thresholds = factor * baseline_peak;
    report.assessed_from = duration / 2.0;
    for (std::size_t s = 0; s < normalized.size(); ++s) {
        if (times[s] < report.assessed_from) continue;
        for (Eigen::Index i = 0; i < k; ++i) {
            if (std::abs(normalized[s](i)) > report.thresholds(i)) {
                report.diverged = true;
                if (!report.first_divergence_time) report.first_divergence_time = times[s];
                break;
            }
        }
        if (report.diverged) break;
    }
    return report;
}

}  // namespace

RunResult run(const SimulationConfig& config) {
    config.validate();
    RunResult out;
    out.config = config;
    const FrameTransform t = config.transform();
    const int steps = static_cast<int>(std::ceil(config.duration / config.dt - 1e-9));

    Vector q = config.model == ModelKind::Arm ? Vector(config.arm.q) : Vector(config.rover.q);
    std::vector<double> times;
    out.records.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        const double tnow = s * config.dt;
        StepResult sr = step(q, config, &out.balance_diagnostics);
        q = sr.next_q_baseline;
        TrajectoryRecord rec;
        rec.t = tnow;
        rec.qdot = sr.qdot;
        rec.q = to_transformed_state(q, config);
        rec.achieved_v = sr.achieved_v;
        rec.residual = sr.residual;
        out.records.push_back(std::move(rec));
        out.normalized_qdot.push_back(sr.qdot_baseline);
        times.push_back(tnow);
    }
    out.final_state_baseline = q;

    if (config.is_baseline()) {
        out.divergence = assess_divergence(out.normalized_qdot, times, out.normalized_qdot,
                                           config.divergence_factor, config.duration);
    } else {
        const RunResult base = run(config.baseline());
        out.divergence = assess_divergence(out.normalized_qdot, times, base.normalized_qdot,
                                           config.divergence_factor, config.duration);
    }
    return out;
}

double compare_runs(const RunResult& a, const RunResult& b, const FrameTransform& normalizer) {
    if (a.records.size() != b.records.size()) {
        throw std::invalid_argument("compare_runs: trajectories have different step counts");
    }
    double worst = 0.0;
    for (std::size_t s = 0; s < a.records.size(); ++s) {
        const Vector nb = normalizer.solution_normalizer * b.records[s].qdot;
        worst = std::max(worst, (nb - a.records[s].qdot).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace ucinv
