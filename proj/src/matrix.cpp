#include "ucinv/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ucinv {

void require_finite(const Matrix& a, const char* context) {
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(context) + ": matrix has non-finite entries");
    }
}

double max_abs(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

SvdResult svd(const Matrix& a) {
    require_finite(a, "svd");
    if (a.size() == 0) {
        return {Matrix(a.rows(), 0), Vector(0), Matrix(a.cols(), 0)};
    }
    Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Matrix pinv(const Matrix& a, std::optional<double> rank_tolerance) {
    require_finite(a, "pinv");
    if (rank_tolerance && (*rank_tolerance < 0.0 || !std::isfinite(*rank_tolerance))) {
        throw std::invalid_argument("pinv: rank tolerance must be finite and non-negative");
    }
    if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());

    const SvdResult dec = svd(a);
    const double sigma_max = dec.singular_values.size() > 0 ? dec.singular_values(0) : 0.0;
    const double cutoff = rank_tolerance
        ? *rank_tolerance
        : static_cast<double>(std::max(a.rows(), a.cols())) * sigma_max *
              std::numeric_limits<double>::epsilon();

    Vector inv_sigma = Vector::Zero(dec.singular_values.size());
    for (Eigen::Index i = 0; i < dec.singular_values.size(); ++i) {
        if (dec.singular_values(i) > cutoff && dec.singular_values(i) > 0.0) {
            inv_sigma(i) = 1.0 / dec.singular_values(i);
        }
    }
    return dec.v * inv_sigma.asDiagonal() * dec.u.transpose();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_finite(a, "kron");
    require_finite(b, "kron");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix rotation_embed(double theta, Eigen::Index dim, Eigen::Index axis_a, Eigen::Index axis_b) {
    if (!std::isfinite(theta)) throw std::invalid_argument("rotation_embed: non-finite angle");
    if (dim < 1) throw std::invalid_argument("rotation_embed: dimension must be positive");
    if (axis_a < 0 || axis_a >= dim || axis_b < 0 || axis_b >= dim || axis_a == axis_b) {
        throw std::invalid_argument("rotation_embed: axes must be distinct indices in [0, dim)");
    }
    Matrix out = Matrix::Identity(dim, dim);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    out(axis_a, axis_a) = c;
    out(axis_a, axis_b) = -s;
    out(axis_b, axis_a) = s;
    out(axis_b, axis_b) = c;
    return out;
}

Matrix diag_from(const std::vector<double>& values) {
    const Eigen::Index n = static_cast<Eigen::Index>(values.size());
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(values[static_cast<std::size_t>(i)])) {
            throw std::invalid_argument("diag_from: non-finite value");
        }
        out(i, i) = values[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace ucinv
