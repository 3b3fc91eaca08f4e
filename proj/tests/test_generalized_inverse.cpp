#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucinv/generalized_inverse.hpp"
#include "ucinv/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using ucinv::BlockPartition;
using ucinv::InverseKind;
using ucinv::Matrix;
using ucinv::Vector;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix random_matrix(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = dist(rng);
    return a;
}

Matrix rover_jacobian_at_start() {
    ucinv::RoverModel rover;
    rover.q << kPi / 4.0, 1.1, 0.0, 0.0, 0.0;
    return ucinv::rover_jacobian(rover);
}

}  // namespace

TEST_CASE("uc inverse of a nonsingular diagonal is the exact inverse") {
    Matrix a(2, 2);
    a << 2, 0, 0, 8;
    Matrix expected(2, 2);
    expected << 0.5, 0, 0, 0.125;
    CHECK(ucinv::max_abs(ucinv::uc_inverse(a) - expected) < 1e-12);
}

TEST_CASE("uc inverse of the geometric rank-1 matrix") {
    Matrix a(2, 2);
    a << 1, 2, 4, 8;
    Matrix expected(2, 2);
    expected << 0.25, 0.0625, 0.125, 0.03125;
    const Matrix g = ucinv::uc_inverse(a);
    CHECK(ucinv::max_abs(g - expected) < 1e-12);
    // generalized-inverse axioms
    CHECK(ucinv::max_abs(a * g * a - a) < 1e-12);
    CHECK(ucinv::max_abs(g * a * g - g) < 1e-12);
}

TEST_CASE("uc inverse solves the rover problem to the reference joint rates") {
    const Matrix j = rover_jacobian_at_start();
    Vector v(5);
    v << 2, 0, -1, 0, 0;
    const Vector qdot = ucinv::uc_inverse(j) * v;
    Vector expected(5);
    expected << -1.2121, 1.3536, 0.6566, -0.0101, -0.0429;
    CHECK((qdot - expected).cwiseAbs().maxCoeff() < 1e-3);
    Vector frozen(5);
    frozen << -1.212121212121, 1.353553390589, 0.656556638039, -0.010110028628, -0.042893218816;
    CHECK((qdot - frozen).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("uc inverse equals the exact inverse for nonsingular matrices") {
    std::mt19937_64 rng(31);
    double worst = 0;
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> size(2, 5);
        const Eigen::Index n = size(rng);
        const Matrix a = random_matrix(rng, n, n) + 2.0 * Matrix::Identity(n, n);
        worst = std::max(worst, ucinv::max_abs(ucinv::uc_inverse(a) - Matrix(a.inverse())));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("generalized-inverse axioms hold for the uc inverse on random matrices") {
    std::mt19937_64 rng(37);
    double worst = 0;
    for (int t = 0; t < 80; ++t) {
        std::uniform_int_distribution<int> size(1, 6);
        const Matrix a = random_matrix(rng, size(rng), size(rng));
        const Matrix g = ucinv::uc_inverse(a);
        worst = std::max(worst, (a * g * a - a).norm() / std::max(1.0, a.norm()));
        worst = std::max(worst, (g * a * g - g).norm() / std::max(1.0, g.norm()));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("mixed inverse collapses to block diagonal when X and Y vanish") {
    std::mt19937_64 rng(41);
    BlockPartition p;
    p.w = random_matrix(rng, 2, 2) + 2.0 * Matrix::Identity(2, 2);
    p.z = random_matrix(rng, 3, 3);
    p.x = Matrix::Zero(2, 3);
    p.y = Matrix::Zero(3, 2);
    const Matrix mi = ucinv::mixed_inverse(p);
    CHECK(ucinv::max_abs(mi.topLeftCorner(2, 2) - ucinv::uc_inverse(p.w)) < 1e-12);
    CHECK(ucinv::max_abs(mi.bottomRightCorner(3, 3) - ucinv::pinv(p.z)) < 1e-12);
    CHECK(mi.topRightCorner(2, 3).isZero(1e-14));
    CHECK(mi.bottomLeftCorner(3, 2).isZero(1e-14));
}

TEST_CASE("mixed inverse equals the exact inverse for well-conditioned square input") {
    std::mt19937_64 rng(43);
    double worst = 0;
    for (int t = 0; t < 60; ++t) {
        const Matrix a = random_matrix(rng, 4, 4) + 2.5 * Matrix::Identity(4, 4);
        const Matrix mi = ucinv::mixed_inverse(BlockPartition::split(a, 2));
        worst = std::max(worst, ucinv::max_abs(mi - Matrix(a.inverse())));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("mixed inverse reproduces the rover reference solution") {
    const Matrix j = rover_jacobian_at_start();
    const BlockPartition p = ucinv::rover_partition(j);
    Vector v(5);
    v << 2, 0, -1, 0, 0;
    const Vector qdot = ucinv::mixed_inverse(p) * v;
    Vector frozen(5);
    frozen << -1.818181818182, 2.707106781187, -0.353553390593, -0.353553390593, 0.914213562373;
    CHECK((qdot - frozen).cwiseAbs().maxCoeff() < 1e-9);
    // hand-derived intermediate: W^-1 applied to the leading task velocity
    const Vector w_inv_v1 = p.w.fullPivLu().solve(v.head(2));
    CHECK(w_inv_v1(0) == doctest::Approx(-1.8182).epsilon(1e-4));
    CHECK(w_inv_v1(1) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("mixed inverse rejects malformed partitions") {
    BlockPartition p;
    p.w = Matrix::Zero(2, 3);  // not square
    p.x = Matrix::Zero(2, 2);
    p.y = Matrix::Zero(2, 3);
    p.z = Matrix::Zero(2, 2);
    CHECK_THROWS_AS(ucinv::mixed_inverse(p), std::invalid_argument);

    BlockPartition q;
    q.w = Matrix::Zero(2, 2);
    q.x = Matrix::Zero(3, 3);  // wrong row count
    q.y = Matrix::Zero(3, 2);
    q.z = Matrix::Zero(3, 3);
    CHECK_THROWS_AS(ucinv::mixed_inverse(q), std::invalid_argument);

    CHECK_THROWS_AS(BlockPartition::split(Matrix::Zero(3, 4), 2), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::split(Matrix::Zero(4, 4), 5), std::invalid_argument);
}

TEST_CASE("block partition splits and reassembles exactly") {
    std::mt19937_64 rng(47);
    const Matrix a = random_matrix(rng, 5, 5);
    const BlockPartition p = BlockPartition::split(a, 2);
    CHECK((p.assemble() - a).norm() == 0.0);
    CHECK(p.unit_count() == 2);
    CHECK(p.rotation_count() == 3);
}

TEST_CASE("unit-consistency law holds for the uc inverse across nine orders of magnitude") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> size(2, 6);
    std::uniform_real_distribution<double> expo(-3.0, 3.0);
    double worst = 0;
    for (int t = 0; t < 80; ++t) {
        const Eigen::Index m = size(rng), n = size(rng);
        const Matrix a = random_matrix(rng, m, n);
        Vector d(n), e(m);
        for (Eigen::Index i = 0; i < n; ++i) d(i) = std::pow(10.0, expo(rng));
        for (Eigen::Index i = 0; i < m; ++i) e(i) = std::pow(10.0, expo(rng));
        worst = std::max(worst, ucinv::check_unit_consistency(InverseKind::uc(), a, d, e));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("unit-consistency deviation is zero under identity scales") {
    std::mt19937_64 rng(59);
    const Matrix a = random_matrix(rng, 4, 3);
    CHECK(ucinv::check_unit_consistency(InverseKind::uc(), a, Vector::Ones(3), Vector::Ones(4)) <
          1e-12);
    CHECK(ucinv::check_unit_consistency(InverseKind::mp(), a, Vector::Ones(3), Vector::Ones(4)) <
          1e-12);
}

TEST_CASE("the mp inverse breaks the unit-consistency law on the arm Jacobian") {
    ucinv::ArmModel arm;
    arm.q = Eigen::Vector3d(kPi / 6, kPi / 6, 0.7);
    const Matrix j = ucinv::arm_jacobian(arm);
    Vector d(3), e(3);
    d << 100, 100, 1;
    e << 100, 100, 100;
    CHECK(ucinv::check_unit_consistency(InverseKind::mp(), j, d, e) > 1e-2);
    CHECK(ucinv::check_unit_consistency(InverseKind::uc(), j, d, e) < 1e-8);
}

TEST_CASE("unit-consistency check rejects non-positive scales") {
    const Matrix a = Matrix::Identity(2, 2);
    Vector d(2), e(2);
    d << 1, 0;
    e << 1, 1;
    CHECK_THROWS_AS(ucinv::check_unit_consistency(InverseKind::uc(), a, d, e),
                    std::invalid_argument);
    d << 1, -2;
    CHECK_THROWS_AS(ucinv::check_unit_consistency(InverseKind::uc(), a, d, e),
                    std::invalid_argument);
}

TEST_CASE("rotation-consistency law holds for the mp inverse") {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> gauss;
    double worst = 0;
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> size(2, 5);
        const Eigen::Index m = size(rng), n = size(rng);
        const Matrix a = random_matrix(rng, m, n);
        Matrix gu(m, m), gv(n, n);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) gu(i, j) = gauss(rng);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) gv(i, j) = gauss(rng);
        const Matrix u = Eigen::HouseholderQR<Matrix>(gu).householderQ();
        const Matrix v = Eigen::HouseholderQR<Matrix>(gv).householderQ();
        worst = std::max(worst, ucinv::check_rotation_consistency(InverseKind::mp(), a, u, v));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("rotation-consistency check edge cases") {
    std::mt19937_64 rng(67);
    const Matrix a = random_matrix(rng, 4, 4);
    CHECK(ucinv::check_rotation_consistency(InverseKind::uc(), a, Matrix::Identity(4, 4),
                                            Matrix::Identity(4, 4)) < 1e-12);
    CHECK_THROWS_AS(
        ucinv::check_rotation_consistency(InverseKind::mp(), a, 2.0 * Matrix::Identity(4, 4),
                                          Matrix::Identity(4, 4)),
        std::invalid_argument);
}

TEST_CASE("the uc inverse breaks rotation consistency on the rover Jacobian") {
    const Matrix j = rover_jacobian_at_start();
    const Matrix u = ucinv::rotation_embed(kPi / 6, 5, 0, 1);
    CHECK(ucinv::check_rotation_consistency(InverseKind::uc(), j, u, Matrix::Identity(5, 5)) >
          1e-2);
}

TEST_CASE("uc inverse distributes over Kronecker products") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> size(1, 4);
    double worst2 = 0, worst3 = 0;
    for (int t = 0; t < 40; ++t) {
        const Matrix a = random_matrix(rng, size(rng), size(rng));
        const Matrix b = random_matrix(rng, size(rng), size(rng));
        worst2 = std::max(worst2, ucinv::max_abs(ucinv::uc_inverse(ucinv::kron(a, b)) -
                                                 ucinv::kron(ucinv::uc_inverse(a),
                                                             ucinv::uc_inverse(b))));
        std::uniform_int_distribution<int> small(1, 3);
        const Matrix c = random_matrix(rng, small(rng), small(rng));
        const Matrix d = random_matrix(rng, small(rng), small(rng));
        const Matrix e = random_matrix(rng, small(rng), small(rng));
        worst3 = std::max(
            worst3, ucinv::max_abs(ucinv::uc_inverse(ucinv::kron(ucinv::kron(c, d), e)) -
                                   ucinv::kron(ucinv::kron(ucinv::uc_inverse(c),
                                                           ucinv::uc_inverse(d)),
                                               ucinv::uc_inverse(e))));
    }
    CHECK(worst2 < 1e-8);
    CHECK(worst3 < 1e-8);
}

TEST_CASE("inverse kind parsing") {
    CHECK(InverseKind::parse("mp").family == InverseKind::Family::MoorePenrose);
    CHECK(InverseKind::parse("uc").family == InverseKind::Family::UnitConsistent);
    const InverseKind mixed = InverseKind::parse("mixed", 2);
    CHECK(mixed.family == InverseKind::Family::Mixed);
    CHECK(mixed.unit_vars == 2);
    CHECK_THROWS_AS(InverseKind::parse("drazin"), std::invalid_argument);
    CHECK(InverseKind::mp().name() == "mp");
    CHECK(InverseKind::uc().name() == "uc");
    CHECK(InverseKind::mixed(2).name() == "mixed");
}
