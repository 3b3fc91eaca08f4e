#include "ucinv/scale_decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace ucinv {

namespace {

// Sample variance of the column sums of L (all entries, masked ones are 0).
double column_sum_variance(const Matrix& l) {
    const Eigen::Index n = l.cols();
    if (n <= 1) return 0.0;
    Vector sums = l.colwise().sum();
    const double mean = sums.mean();
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double d = sums(j) - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(n - 1);
}

}  // namespace

Matrix ScaleDecomposition::reconstruct() const {
    return row_scales.asDiagonal() * core * col_scales.asDiagonal();
}

ScaleDecomposition scale_decompose(const Matrix& a, const BalanceSettings& settings) {
    require_finite(a, "scale_decompose");
    if (settings.convergence_tolerance <= 0.0) {
        throw std::invalid_argument("scale_decompose: tolerance must be positive");
    }
    if (settings.max_iterations < 1) {
        throw std::invalid_argument("scale_decompose: max_iterations must be >= 1");
    }
    if (settings.zero_threshold < 0.0) {
        throw std::invalid_argument("scale_decompose: zero_threshold must be non-negative");
    }

    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();

    ScaleDecomposition out;
    out.row_scales = Vector::Ones(m);
    out.col_scales = Vector::Ones(n);
    out.core = Matrix::Zero(m, n);
    if (a.size() == 0) return out;

    // Log magnitudes of the participating entries; mask marks participation.
    Matrix l = Matrix::Zero(m, n);
    Matrix mask = Matrix::Zero(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(a(i, j)) > settings.zero_threshold) {
                l(i, j) = std::log(std::abs(a(i, j)));
                mask(i, j) = 1.0;
            }
        }
    }
    const Vector row_counts = mask.rowwise().sum();
    const Vector col_counts = mask.colwise().sum();

    Vector u = Vector::Zero(m);  // accumulated row offsets
    Vector v = Vector::Zero(n);  // accumulated column offsets

    double current = 0.0;
    double previous = 1.0;
    int iterations = 0;
    bool converged = false;
    while (iterations < settings.max_iterations) {
        if (std::abs(previous - current) <= settings.convergence_tolerance) {
            converged = true;
            break;
        }
        // Column pass: subtract each column's mean over its participating entries.
        for (Eigen::Index j = 0; j < n; ++j) {
            if (col_counts(j) <= 0.0) continue;
            double p = 0.0;
            for (Eigen::Index i = 0; i < m; ++i) p += l(i, j);
            p /= col_counts(j);
            for (Eigen::Index i = 0; i < m; ++i) l(i, j) -= p * mask(i, j);
            v(j) -= p;
        }
        // Row pass.
        for (Eigen::Index i = 0; i < m; ++i) {
            if (row_counts(i) <= 0.0) continue;
            double p = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) p += l(i, j);
            p /= row_counts(i);
            for (Eigen::Index j = 0; j < n; ++j) l(i, j) -= p * mask(i, j);
            u(i) -= p;
        }
        previous = current;
        current = column_sum_variance(l);
        ++iterations;
    }
    out.converged = converged || std::abs(previous - current) <= settings.convergence_tolerance;
    out.iterations = iterations;

    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (mask(i, j) > 0.0) {
                const double sign = a(i, j) > 0.0 ? 1.0 : -1.0;
                out.core(i, j) = sign * std::exp(l(i, j));
            }
            // entries at or below the threshold are treated as zero
        }
    }
    out.row_scales = (-u.array()).exp();
    out.col_scales = (-v.array()).exp();
    return out;
}

}  // namespace ucinv
