#include "ucinv/generalized_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ucinv {

BlockPartition BlockPartition::split(const Matrix& a, Eigen::Index unit_count) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("BlockPartition::split: matrix must be square");
    }
    if (unit_count < 0 || unit_count > a.rows()) {
        throw std::invalid_argument("BlockPartition::split: split index out of range");
    }
    const Eigen::Index m = unit_count;
    const Eigen::Index n = a.rows() - m;
    BlockPartition p;
    p.w = a.topLeftCorner(m, m);
    p.x = a.topRightCorner(m, n);
    p.y = a.bottomLeftCorner(n, m);
    p.z = a.bottomRightCorner(n, n);
    return p;
}

Matrix BlockPartition::assemble() const {
    const Eigen::Index m = unit_count();
    const Eigen::Index n = rotation_count();
    Matrix a(m + n, m + n);
    a.topLeftCorner(m, m) = w;
    a.topRightCorner(m, n) = x;
    a.bottomLeftCorner(n, m) = y;
    a.bottomRightCorner(n, n) = z;
    return a;
}

std::string InverseKind::name() const {
    switch (family) {
        case Family::MoorePenrose: return "mp";
        case Family::UnitConsistent: return "uc";
        case Family::Mixed: return "mixed";
    }
    return "mp";
}

InverseKind InverseKind::parse(const std::string& name, Eigen::Index unit_vars) {
    if (name == "mp") return mp();
    if (name == "uc") return uc();
    if (name == "mixed") return mixed(unit_vars);
    throw std::invalid_argument("unknown inverse kind: " + name);
}

void BalanceDiagnostics::absorb(const ScaleDecomposition& dec) {
    ++decompositions;
    max_iterations = std::max(max_iterations, dec.iterations);
    if (!dec.converged) ++nonconverged;
}

Matrix uc_inverse(const Matrix& a, const BalanceSettings& settings,
                  BalanceDiagnostics* diagnostics) {
    const ScaleDecomposition dec = scale_decompose(a, settings);
    if (diagnostics) diagnostics->absorb(dec);
    return dec.col_scales.cwiseInverse().asDiagonal() * pinv(dec.core) *
           dec.row_scales.cwiseInverse().asDiagonal();
}

Matrix mixed_inverse(const BlockPartition& p, const BalanceSettings& settings,
                     BalanceDiagnostics* diagnostics) {
    const Eigen::Index m = p.w.rows();
    const Eigen::Index n = p.z.rows();
    if (p.w.cols() != m || p.z.cols() != n) {
        throw std::invalid_argument("mixed_inverse: W and Z blocks must be square");
    }
    if (p.x.rows() != m || p.x.cols() != n || p.y.rows() != n || p.y.cols() != m) {
        throw std::invalid_argument("mixed_inverse: off-diagonal block shapes do not conform");
    }
    if (m == 0) return pinv(p.z);
    if (n == 0) return uc_inverse(p.w, settings, diagnostics);

    const Matrix z_pinv = pinv(p.z);
    const Matrix w_uc = uc_inverse(p.w, settings, diagnostics);
    const Matrix schur_w = p.w - p.x * z_pinv * p.y;  // unit-bearing Schur complement
    const Matrix schur_z = p.z - p.y * w_uc * p.x;    // Euclidean Schur complement
    const Matrix top_left = uc_inverse(schur_w, settings, diagnostics);
    const Matrix bottom_right = pinv(schur_z);

    Matrix out(m + n, m + n);
    out.topLeftCorner(m, m) = top_left;
    out.topRightCorner(m, n) = -w_uc * p.x * bottom_right;
    out.bottomLeftCorner(n, m) = -z_pinv * p.y * top_left;
    out.bottomRightCorner(n, n) = bottom_right;
    return out;
}

Matrix apply_inverse(const InverseKind& kind, const Matrix& a, const BalanceSettings& settings,
                     BalanceDiagnostics* diagnostics) {
    switch (kind.family) {
        case InverseKind::Family::MoorePenrose:
            return pinv(a);
        case InverseKind::Family::UnitConsistent:
            return uc_inverse(a, settings, diagnostics);
        case InverseKind::Family::Mixed:
            return mixed_inverse(BlockPartition::split(a, kind.unit_vars), settings, diagnostics);
    }
    return pinv(a);
}

namespace {

void require_positive(const Vector& diag, const char* context) {
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (!(diag(i) > 0.0) || !std::isfinite(diag(i))) {
            throw std::invalid_argument(std::string(context) + ": scales must be strictly positive");
        }
    }
}

double relative_max_abs_deviation(const Matrix& lhs, const Matrix& rhs, const Matrix& reference) {
    return max_abs(lhs - rhs) / std::max(1.0, max_abs(reference));
}

}  // namespace

double check_unit_consistency(const InverseKind& kind, const Matrix& a,
                              const Vector& d_diag, const Vector& e_diag,
                              const BalanceSettings& settings) {
    require_finite(a, "check_unit_consistency");
    if (d_diag.size() != a.cols() || e_diag.size() != a.rows()) {
        throw std::invalid_argument(
            "check_unit_consistency: scale lengths must match matrix shape (d: cols, e: rows)");
    }
    require_positive(d_diag, "check_unit_consistency");
    require_positive(e_diag, "check_unit_consistency");

    const Matrix base = apply_inverse(kind, a, settings);
    const Matrix scaled = e_diag.asDiagonal() * a * d_diag.cwiseInverse().asDiagonal();
    const Matrix lhs = apply_inverse(kind, scaled, settings);
    const Matrix rhs = d_diag.asDiagonal() * base * e_diag.cwiseInverse().asDiagonal();
    return relative_max_abs_deviation(lhs, rhs, base);
}

double check_rotation_consistency(const InverseKind& kind, const Matrix& a,
                                  const Matrix& u, const Matrix& v,
                                  const BalanceSettings& settings) {
    require_finite(a, "check_rotation_consistency");
    if (u.rows() != u.cols() || u.rows() != a.rows() || v.rows() != v.cols() ||
        v.rows() != a.cols()) {
        throw std::invalid_argument("check_rotation_consistency: factor shapes do not conform");
    }
    const double ortho_tol = 1e-10;
    if (max_abs(u.transpose() * u - Matrix::Identity(u.rows(), u.rows())) > ortho_tol ||
        max_abs(v.transpose() * v - Matrix::Identity(v.rows(), v.rows())) > ortho_tol) {
        throw std::invalid_argument("check_rotation_consistency: factors must be orthonormal");
    }

    const Matrix base = apply_inverse(kind, a, settings);
    const Matrix lhs = apply_inverse(kind, u * a * v, settings);
    const Matrix rhs = v.transpose() * base * u.transpose();
    return relative_max_abs_deviation(lhs, rhs, base);
}

}  // namespace ucinv
