#ifndef UCINV_SCALE_DECOMPOSITION_HPP
#define UCINV_SCALE_DECOMPOSITION_HPP

#include "ucinv/matrix.hpp"

namespace ucinv {

struct BalanceSettings {
    /// Stop when the variance of the column sums of the log-magnitude
    /// matrix changes by no more than this between sweeps.
    double convergence_tolerance = 1e-22;
    int max_iterations = 1000;
    /// An entry takes part in the balancing iff |entry| > zero_threshold.
    double zero_threshold = 0.0;
};

/// A = diag(row_scales) * core * diag(col_scales), where the nonzero
/// entries of every row and column of `core` have |product| = 1 and the
/// zero pattern and signs of `core` match A exactly.
struct ScaleDecomposition {
    Vector row_scales;  // strictly positive, length = rows of A
    Vector col_scales;  // strictly positive, length = cols of A
    Matrix core;
    bool converged = true;
    int iterations = 0;

    Matrix reconstruct() const;
};

/// Alternating log-domain balancing: each sweep subtracts per-column then
/// per-row means of the log magnitudes over the participating entries,
/// accumulating the offsets that become the diagonal scales. Rows and
/// columns with no participating entries are left untouched.
ScaleDecomposition scale_decompose(const Matrix& a, const BalanceSettings& settings = {});

}  // namespace ucinv

#endif
