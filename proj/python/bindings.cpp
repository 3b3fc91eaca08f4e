#include "ucinv/generalized_inverse.hpp"
#include "ucinv/kinematics.hpp"
#include "ucinv/matrix.hpp"
#include "ucinv/scale_decomposition.hpp"
#include "ucinv/scenarios.hpp"
#include "ucinv/simulation.hpp"
#include "ucinv/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

namespace {

ucinv::InverseKind kind_from_name(const std::string& name, Eigen::Index split) {
    return ucinv::InverseKind::parse(name, split);
}

py::dict divergence_dict(const ucinv::DivergenceReport& d) {
    py::dict out;
    out["diverged"] = d.diverged;
    out["max_abs_qdot"] = ucinv::Vector(d.max_abs_qdot);
    out["thresholds"] = ucinv::Vector(d.thresholds);
    out["assessed_from"] = d.assessed_from;
    out["first_divergence_time"] =
        d.first_divergence_time ? py::cast(*d.first_divergence_time) : py::none();
    return out;
}

py::dict run_dict(const ucinv::RunResult& res) {
    const std::size_t steps = res.records.size();
    const Eigen::Index k = res.config.dim();
    ucinv::Vector t(static_cast<Eigen::Index>(steps));
    ucinv::Matrix qdot(steps, k), q(steps, k), achieved(steps, k), normalized(steps, k);
    ucinv::Vector residual(static_cast<Eigen::Index>(steps));
    for (std::size_t s = 0; s < steps; ++s) {
        const auto i = static_cast<Eigen::Index>(s);
        t(i) = res.records[s].t;
        qdot.row(i) = res.records[s].qdot.transpose();
        q.row(i) = res.records[s].q.transpose();
        achieved.row(i) = res.records[s].achieved_v.transpose();
        normalized.row(i) = res.normalized_qdot[s].transpose();
        residual(i) = res.records[s].residual;
    }
    py::dict out;
    out["t"] = t;
    out["qdot"] = qdot;
    out["q"] = q;
    out["achieved_v"] = achieved;
    out["normalized_qdot"] = normalized;
    out["residual"] = residual;
    out["final_state"] = res.final_state_baseline;
    out["divergence"] = divergence_dict(res.divergence);
    return out;
}

ucinv::SimulationConfig make_config(const std::string& model, const std::string& inverse,
                                    double unit_scale, double frame_rotation, double dt,
                                    double duration) {
    ucinv::SimulationConfig cfg;
    if (model == "arm") {
        cfg.model = ucinv::ModelKind::Arm;
        cfg.arm.q = Eigen::Vector3d(M_PI / 6.0, M_PI / 6.0, 0.7);
        cfg.target_velocity = Eigen::Vector3d(2.0, -2.0, 0.0);
    } else if (model == "rover") {
        cfg.model = ucinv::ModelKind::Rover;
        cfg.rover.q << M_PI / 4.0, 1.1, 0.0, 0.0, 0.0;
        cfg.target_velocity = ucinv::Vector(5);
        cfg.target_velocity << 2.0, 0.0, -1.0, 0.0, 0.0;
    } else {
        throw std::invalid_argument("model must be 'arm' or 'rover'");
    }
    cfg.inverse = kind_from_name(inverse, 2);
    cfg.unit_scale = unit_scale;
    cfg.frame_rotation = frame_rotation;
    cfg.dt = dt;
    cfg.duration = duration;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Moore-Penrose, unit-consistent, and mixed generalized matrix inverses "
              "with a resolved-rate robot simulation harness";

    py::class_<ucinv::BalanceSettings>(m, "BalanceSettings")
        .def(py::init<>())
        .def_readwrite("convergence_tolerance", &ucinv::BalanceSettings::convergence_tolerance)
        .def_readwrite("max_iterations", &ucinv::BalanceSettings::max_iterations)
        .def_readwrite("zero_threshold", &ucinv::BalanceSettings::zero_threshold);

    py::class_<ucinv::ScaleDecomposition>(m, "ScaleDecomposition")
        .def_readonly("row_scales", &ucinv::ScaleDecomposition::row_scales)
        .def_readonly("col_scales", &ucinv::ScaleDecomposition::col_scales)
        .def_readonly("core", &ucinv::ScaleDecomposition::core)
        .def_readonly("converged", &ucinv::ScaleDecomposition::converged)
        .def_readonly("iterations", &ucinv::ScaleDecomposition::iterations)
        .def("reconstruct", &ucinv::ScaleDecomposition::reconstruct);

    py::class_<ucinv::SvdResult>(m, "SvdResult")
        .def_readonly("u", &ucinv::SvdResult::u)
        .def_readonly("singular_values", &ucinv::SvdResult::singular_values)
        .def_readonly("v", &ucinv::SvdResult::v);

    py::class_<ucinv::FrameTransform>(m, "FrameTransform")
        .def_readonly("v_left", &ucinv::FrameTransform::v_left)
        .def_readonly("j_left", &ucinv::FrameTransform::j_left)
        .def_readonly("j_right", &ucinv::FrameTransform::j_right)
        .def_readonly("solution_normalizer", &ucinv::FrameTransform::solution_normalizer);

    m.def("pinv",
          [](const ucinv::Matrix& a, std::optional<double> rank_tolerance) {
              return ucinv::pinv(a, rank_tolerance);
          },
          py::arg("a"), py::arg("rank_tolerance") = py::none(),
          "Moore-Penrose pseudoinverse via SVD");
    m.def("svd", &ucinv::svd, py::arg("a"));
    m.def("kron", &ucinv::kron, py::arg("a"), py::arg("b"), "Kronecker product");
    m.def("rotation_embed", &ucinv::rotation_embed, py::arg("theta"), py::arg("dim"),
          py::arg("axis_a"), py::arg("axis_b"));
    m.def("diag_from", &ucinv::diag_from, py::arg("values"));

    m.def("scale_decompose",
          [](const ucinv::Matrix& a, const ucinv::BalanceSettings& settings) {
              return ucinv::scale_decompose(a, settings);
          },
          py::arg("a"), py::arg("settings") = ucinv::BalanceSettings{},
          "Diagonal decomposition A = diag(d) S diag(e) with balanced core S");

    m.def("uc_inverse",
          [](const ucinv::Matrix& a, const ucinv::BalanceSettings& settings) {
              return ucinv::uc_inverse(a, settings);
          },
          py::arg("a"), py::arg("settings") = ucinv::BalanceSettings{},
          "Unit-consistent generalized inverse");
    m.def("mixed_inverse",
          [](const ucinv::Matrix& a, Eigen::Index unit_vars,
             const ucinv::BalanceSettings& settings) {
              return ucinv::mixed_inverse(ucinv::BlockPartition::split(a, unit_vars), settings);
          },
          py::arg("a"), py::arg("unit_vars"), py::arg("settings") = ucinv::BalanceSettings{},
          "Block inverse: unit-consistent on the leading block, Moore-Penrose on the trailing");
    m.def("apply_inverse",
          [](const std::string& kind, const ucinv::Matrix& a, Eigen::Index unit_vars) {
              return ucinv::apply_inverse(kind_from_name(kind, unit_vars), a);
          },
          py::arg("kind"), py::arg("a"), py::arg("unit_vars") = 0);

    m.def("check_unit_consistency",
          [](const std::string& kind, const ucinv::Matrix& a, const ucinv::Vector& d,
             const ucinv::Vector& e, Eigen::Index unit_vars) {
              return ucinv::check_unit_consistency(kind_from_name(kind, unit_vars), a, d, e);
          },
          py::arg("kind"), py::arg("a"), py::arg("d_diag"), py::arg("e_diag"),
          py::arg("unit_vars") = 0);
    m.def("check_rotation_consistency",
          [](const std::string& kind, const ucinv::Matrix& a, const ucinv::Matrix& u,
             const ucinv::Matrix& v, Eigen::Index unit_vars) {
              return ucinv::check_rotation_consistency(kind_from_name(kind, unit_vars), a, u, v);
          },
          py::arg("kind"), py::arg("a"), py::arg("u"), py::arg("v"), py::arg("unit_vars") = 0);

    m.def("arm_forward",
          [](double a1, double a2, const Eigen::Vector3d& q) {
              ucinv::ArmModel model{a1, a2, q};
              return ucinv::arm_forward(model);
          },
          py::arg("a1"), py::arg("a2"), py::arg("q"));
    m.def("arm_jacobian",
          [](double a1, double a2, const Eigen::Vector3d& q) {
              ucinv::ArmModel model{a1, a2, q};
              return ucinv::arm_jacobian(model);
          },
          py::arg("a1"), py::arg("a2"), py::arg("q"));
    m.def("rover_forward",
          [](double theta0, const ucinv::Vector& q) {
              ucinv::RoverModel model;
              model.theta0 = theta0;
              model.q = q;
              return ucinv::rover_forward(model);
          },
          py::arg("theta0"), py::arg("q"));
    m.def("rover_jacobian",
          [](double theta0, const ucinv::Vector& q) {
              ucinv::RoverModel model;
              model.theta0 = theta0;
              model.q = q;
              return ucinv::rover_jacobian(model);
          },
          py::arg("theta0"), py::arg("q"));
    m.def("arm_unit_transform", &ucinv::arm_unit_transform, py::arg("c"));
    m.def("rover_frame_transform", &ucinv::rover_frame_transform, py::arg("c"),
          py::arg("theta_prime"));

    m.def("scenario_names", []() {
        std::vector<std::string> names;
        for (const ucinv::ScenarioSpec& s : ucinv::scenario_registry()) names.push_back(s.name);
        return names;
    });
    m.def("run_scenario",
          [](const std::string& name) {
              const ucinv::ScenarioSpec* spec = ucinv::find_scenario(name);
              if (!spec) throw std::invalid_argument("unknown scenario: " + name);
              const ucinv::ScenarioOutcome outcome = ucinv::run_scenario(*spec);
              py::dict out = run_dict(outcome.result);
              out["pass"] = outcome.passed;
              py::list checks;
              for (const ucinv::CheckResult& c : outcome.checks) {
                  py::dict cd;
                  cd["label"] = c.label;
                  cd["source"] = c.source;
                  cd["deviation"] = c.deviation;
                  cd["tolerance"] = c.tolerance;
                  cd["pass"] = c.passed;
                  checks.append(cd);
              }
              out["checks"] = checks;
              return out;
          },
          py::arg("name"), "Run a built-in scenario and evaluate its expectations");
    m.def("simulate",
          [](const std::string& model, const std::string& inverse, double unit_scale,
             double frame_rotation, double dt, double duration) {
              return run_dict(ucinv::run(
                  make_config(model, inverse, unit_scale, frame_rotation, dt, duration)));
          },
          py::arg("model"), py::arg("inverse"), py::arg("unit_scale") = 1.0,
          py::arg("frame_rotation") = 0.0, py::arg("dt") = 1e-3, py::arg("duration") = 0.1,
          "Run the standard arm or rover problem under the chosen inverse and units");

    m.def("verify",
          [](const std::string& suite, std::uint64_t seed, int trials) {
              py::list out;
              for (const ucinv::VerifyReport& r : ucinv::run_verify(suite, seed, trials)) {
                  py::dict rd;
                  rd["suite"] = r.suite;
                  rd["pass"] = r.passed;
                  py::list checks;
                  for (const ucinv::VerifyCheck& c : r.checks) {
                      py::dict cd;
                      cd["label"] = c.label;
                      cd["measured"] = c.worst;
                      cd["bound"] = c.tolerance;
                      cd["pass"] = c.passed;
                      checks.append(cd);
                  }
                  rd["checks"] = checks;
                  out.append(rd);
              }
              return out;
          },
          py::arg("suite"), py::arg("seed") = ucinv::kDefaultVerifySeed,
          py::arg("trials") = ucinv::kDefaultVerifyTrials);
}
