#ifndef UCINV_KINEMATICS_HPP
#define UCINV_KINEMATICS_HPP

#include "ucinv/generalized_inverse.hpp"
#include "ucinv/matrix.hpp"

namespace ucinv {

/// Planar arm with two revolute joints and one prismatic extension.
/// State q = [theta1 (rad), theta2 (rad), l (length units)].
struct ArmModel {
    double a1 = 1.0;  // first link length
    double a2 = 1.1;  // second link length
    Eigen::Vector3d q{0.0, 0.0, 0.0};

    void validate() const;
};

/// Tip position [x, y, z]; the mechanism is planar so z = 0.
Eigen::Vector3d arm_forward(const ArmModel& model);

/// 3x3 Jacobian of the tip position with respect to q; the third row is
/// identically zero.
Matrix arm_jacobian(const ArmModel& model);

/// Planar rover carrying an arm inclined at the fixed angle theta0.
/// State q = [theta1 (rad), l, x1, y1, z1] (lengths in length units).
struct RoverModel {
    double theta0 = 0.7853981633974483;  // pi/4
    Eigen::Matrix<double, 5, 1> q = Eigen::Matrix<double, 5, 1>::Zero();

    void validate() const;
};

/// Tip position padded to length 5: [x, y, z, 0, 0].
Eigen::Matrix<double, 5, 1> rover_forward(const RoverModel& model);

/// 5x5 Jacobian; rows 4-5 are identically zero and the base-velocity
/// columns carry an identity pattern in the task rows.
Matrix rover_jacobian(const RoverModel& model);

/// Quadrants of the 5x5 rover Jacobian: [theta1, l] are the unit-bearing
/// variables (W 2x2), [x1, y1, z1] the Euclidean ones (Z 3x3).
BlockPartition rover_partition(const Matrix& j);

/// Factors describing a change of length unit (scale c) and, for the
/// rover, a rotation of the Euclidean frame. The transformed system is
///   (v_left * v) = (j_left * J * j_right) * qdot_t
/// and solution_normalizer maps qdot_t back to baseline units and frame.
struct FrameTransform {
    Matrix v_left;
    Matrix j_left;
    Matrix j_right;
    Matrix solution_normalizer;
    double scale = 1.0;
    double rotation = 0.0;
};

FrameTransform identity_transform(Eigen::Index dim);

/// Meters-to-(c*meters) change for the arm: v scales by c, the Jacobian's
/// angle columns scale by c, the prismatic column is unchanged.
FrameTransform arm_unit_transform(double c);

/// Unit change plus a frame rotation by theta_prime for the rover. The
/// rotated frame's x-axis leads the original by theta_prime, so planar
/// coordinates transform by R(-theta_prime) and the arm heading enters the
/// transformed Jacobian as theta1 - theta_prime. Base-velocity columns are
/// re-expressed in the rotated frame, which makes the right factor (and
/// the normalizer) block-diagonal rather than diagonal when
/// theta_prime != 0.
FrameTransform rover_frame_transform(double c, double theta_prime);

}  // namespace ucinv

#endif
