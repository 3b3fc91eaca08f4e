#include "ucinv/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace ucinv {

void ArmModel::validate() const {
    if (!(a1 > 0.0) || !(a2 > 0.0)) throw std::invalid_argument("ArmModel: link lengths must be positive");
    if (!q.allFinite()) throw std::invalid_argument("ArmModel: state must be finite");
    if (q(2) < 0.0) throw std::invalid_argument("ArmModel: extension must be non-negative");
}

Eigen::Vector3d arm_forward(const ArmModel& model) {
    model.validate();
    const double s1 = std::sin(model.q(0));
    const double c1 = std::cos(model.q(0));
    const double s12 = std::sin(model.q(0) + model.q(1));
    const double c12 = std::cos(model.q(0) + model.q(1));
    const double l = model.q(2);
    return {model.a1 * c1 + model.a2 * c12 + l * s12,
            model.a1 * s1 + model.a2 * s12 - l * c12,
            0.0};
}

Matrix arm_jacobian(const ArmModel& model) {
    model.validate();
    const double s1 = std::sin(model.q(0));
    const double c1 = std::cos(model.q(0));
    const double s12 = std::sin(model.q(0) + model.q(1));
    const double c12 = std::cos(model.q(0) + model.q(1));
    const double l = model.q(2);
    Matrix j = Matrix::Zero(3, 3);
    j(0, 0) = -model.a1 * s1 - model.a2 * s12 + l * c12;
    j(0, 1) = -model.a2 * s12 + l * c12;
    j(0, 2) = s12;
    j(1, 0) = model.a1 * c1 + model.a2 * c12 + l * s12;
    j(1, 1) = model.a2 * c12 + l * s12;
    j(1, 2) = -c12;
    return j;
}

void RoverModel::validate() const {
    if (!std::isfinite(theta0)) throw std::invalid_argument("RoverModel: theta0 must be finite");
    if (!q.allFinite()) throw std::invalid_argument("RoverModel: state must be finite");
    if (q(1) < 0.0) throw std::invalid_argument("RoverModel: extension must be non-negative");
}

Eigen::Matrix<double, 5, 1> rover_forward(const RoverModel& model) {
    model.validate();
    const double s0 = std::sin(model.theta0);
    const double c0 = std::cos(model.theta0);
    const double s1 = std::sin(model.q(0));
    const double c1 = std::cos(model.q(0));
    const double l = model.q(1);
    Eigen::Matrix<double, 5, 1> p = Eigen::Matrix<double, 5, 1>::Zero();
    p(0) = model.q(2) + l * s0 * c1;
    p(1) = model.q(3) + l * s0 * s1;
    p(2) = model.q(4) - l * c0;
    return p;
}

Matrix rover_jacobian(const RoverModel& model) {
    model.validate();
    const double s0 = std::sin(model.theta0);
    const double c0 = std::cos(model.theta0);
    const double s1 = std::sin(model.q(0));
    const double c1 = std::cos(model.q(0));
    const double l = model.q(1);
    Matrix j = Matrix::Zero(5, 5);
    j(0, 0) = -l * s0 * s1;
    j(0, 1) = s0 * c1;
    j(0, 2) = 1.0;
    j(1, 0) = l * s0 * c1;
    j(1, 1) = s0 * s1;
    j(1, 3) = 1.0;
    j(2, 1) = -c0;
    j(2, 4) = 1.0;
    return j;
}

BlockPartition rover_partition(const Matrix& j) {
    if (j.rows() != 5 || j.cols() != 5) {
        throw std::invalid_argument("rover_partition: expected a 5x5 Jacobian");
    }
    return BlockPartition::split(j, 2);
}

FrameTransform identity_transform(Eigen::Index dim) {
    FrameTransform t;
    t.v_left = Matrix::Identity(dim, dim);
    t.j_left = Matrix::Identity(dim, dim);
    t.j_right = Matrix::Identity(dim, dim);
    t.solution_normalizer = Matrix::Identity(dim, dim);
    return t;
}

FrameTransform arm_unit_transform(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("arm_unit_transform: scale must be positive");
    }
    FrameTransform t = identity_transform(3);
    t.scale = c;
    t.v_left *= c;
    t.j_right = diag_from({c, c, 1.0});
    t.solution_normalizer = diag_from({1.0, 1.0, 1.0 / c});
    return t;
}

FrameTransform rover_frame_transform(double c, double theta_prime) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("rover_frame_transform: scale must be positive");
    }
    if (!std::isfinite(theta_prime)) {
        throw std::invalid_argument("rover_frame_transform: rotation must be finite");
    }
    FrameTransform t;
    t.scale = c;
    t.rotation = theta_prime;
    // Coordinates of planar vectors pick up R(-theta') when the frame
    // rotates by +theta'.
    t.j_left = rotation_embed(-theta_prime, 5, 0, 1);
    t.v_left = c * t.j_left;
    t.j_right = diag_from({c, 1.0, 1.0, 1.0, 1.0}) * rotation_embed(theta_prime, 5, 2, 3);
    t.solution_normalizer = t.j_right / c;
    return t;
}

}  // namespace ucinv
