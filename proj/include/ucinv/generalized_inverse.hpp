#ifndef UCINV_GENERALIZED_INVERSE_HPP
#define UCINV_GENERALIZED_INVERSE_HPP

#include "ucinv/matrix.hpp"
#include "ucinv/scale_decomposition.hpp"

#include <string>

namespace ucinv {

/// Quadrants of a square matrix [[W, X], [Y, Z]] where the leading
/// `unit_count` variables carry physical units and the trailing
/// `rotation_count` variables share a Euclidean frame.
struct BlockPartition {
    Matrix w;  // unit_count x unit_count
    Matrix x;  // unit_count x rotation_count
    Matrix y;  // rotation_count x unit_count
    Matrix z;  // rotation_count x rotation_count

    Eigen::Index unit_count() const { return w.rows(); }
    Eigen::Index rotation_count() const { return z.rows(); }

    /// Splits a square matrix at index `unit_count`.
    static BlockPartition split(const Matrix& a, Eigen::Index unit_count);
    Matrix assemble() const;
};

struct InverseKind {
    enum class Family { MoorePenrose, UnitConsistent, Mixed };

    Family family = Family::MoorePenrose;
    Eigen::Index unit_vars = 0;  // block split, Mixed only

    static InverseKind mp() { return {Family::MoorePenrose, 0}; }
    static InverseKind uc() { return {Family::UnitConsistent, 0}; }
    static InverseKind mixed(Eigen::Index unit_vars) { return {Family::Mixed, unit_vars}; }

    std::string name() const;
    static InverseKind parse(const std::string& name, Eigen::Index unit_vars = 0);
};

/// Accumulated convergence information from the balancing runs behind a
/// sequence of UC/mixed inverse evaluations.
struct BalanceDiagnostics {
    int decompositions = 0;
    int max_iterations = 0;
    int nonconverged = 0;

    void absorb(const ScaleDecomposition& dec);
};

/// Unit-consistent generalized inverse: with A = D S E from the scale
/// decomposition, returns E^-1 pinv(S) D^-1. Invariant under positive
/// diagonal rescaling of A's rows and columns.
Matrix uc_inverse(const Matrix& a, const BalanceSettings& settings = {},
                  BalanceDiagnostics* diagnostics = nullptr);

/// Block generalized inverse treating the W block as unit-bearing (UC)
/// and the Z block as Euclidean (MP):
///   [  ucinv(W - X pinv(Z) Y)             -ucinv(W) X pinv(Z - Y ucinv(W) X) ]
///   [ -pinv(Z) Y ucinv(W - X pinv(Z) Y)    pinv(Z - Y ucinv(W) X)            ]
/// Requires square W and Z.
Matrix mixed_inverse(const BlockPartition& p, const BalanceSettings& settings = {},
                     BalanceDiagnostics* diagnostics = nullptr);

/// Dispatch on the inverse family. `a` must be square for Mixed.
Matrix apply_inverse(const InverseKind& kind, const Matrix& a,
                     const BalanceSettings& settings = {},
                     BalanceDiagnostics* diagnostics = nullptr);

/// Deviation of inv(E A D^-1) from D inv(A) E^-1 for the chosen inverse,
/// as a max-abs difference relative to max(1, ||inv(A)||_maxabs).
/// Zero (up to roundoff) for the UC inverse; generically large for MP.
double check_unit_consistency(const InverseKind& kind, const Matrix& a,
                              const Vector& d_diag, const Vector& e_diag,
                              const BalanceSettings& settings = {});

/// Deviation of inv(U A V) from V^T inv(A) U^T for orthonormal U, V,
/// relative to max(1, ||inv(A)||_maxabs). Zero (up to roundoff) for the
/// MP inverse; generically large for UC.
double check_rotation_consistency(const InverseKind& kind, const Matrix& a,
                                  const Matrix& u, const Matrix& v,
                                  const BalanceSettings& settings = {});

}  // namespace ucinv

#endif
