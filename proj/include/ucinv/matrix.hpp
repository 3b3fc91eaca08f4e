#ifndef UCINV_MATRIX_HPP
#define UCINV_MATRIX_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace ucinv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Throws std::invalid_argument if any entry of `a` is NaN or infinite.
void require_finite(const Matrix& a, const char* context);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix& a);

struct SvdResult {
    Matrix u;                 // orthonormal columns, m x r
    Vector singular_values;   // non-increasing, >= 0
    Matrix v;                 // orthonormal columns, n x r
};

/// Full SVD of a dense matrix, singular values sorted non-increasing.
SvdResult svd(const Matrix& a);

/// Moore-Penrose pseudoinverse via SVD. With no explicit tolerance the
/// rank cutoff is max(rows, cols) * sigma_max * machine epsilon.
Matrix pinv(const Matrix& a, std::optional<double> rank_tolerance = std::nullopt);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// dim x dim identity with a plane rotation by `theta` planted at the
/// (axis_a, axis_b) coordinate pair.
Matrix rotation_embed(double theta, Eigen::Index dim, Eigen::Index axis_a, Eigen::Index axis_b);

/// Square diagonal matrix from a list of values; empty list gives 0x0.
Matrix diag_from(const std::vector<double>& values);

}  // namespace ucinv

#endif
