#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"

namespace massbound {

// Singular values below this fraction of sigma_1 count as zero when forming
// the pseudo-inverse.
inline constexpr double kPinvRankCutoff = 1e-12;

// Thin SVD, A = U diag(sigma) V^T with sigma descending.  For an m x n input
// with r = min(m, n): U is m x r, V is n x r.  Columns of U belonging to zero
// singular values are left as zero.
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;
};

namespace detail {

// One-sided Jacobi on the columns of a (rows >= cols assumed).
inline SvdResult svd_tall(const Matrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix b = a;
    Matrix v = Matrix::identity(n);

    constexpr int kMaxSweeps = 100;
    constexpr double kOrthTol = 1e-14;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    app += b(i, p) * b(i, p);
                    aqq += b(i, q) * b(i, q);
                    apq += b(i, p) * b(i, q);
                }
                if (std::abs(apq) <= kOrthTol * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                if (zeta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < m; ++i) {
                    const double bp = b(i, p), bq = b(i, q);
                    b(i, p) = c * bp - s * bq;
                    b(i, q) = s * bp + c * bq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            SvdResult r;
            r.singular_values.resize(n);
            std::vector<std::size_t> order(n);
            for (std::size_t j = 0; j < n; ++j) {
                double s2 = 0.0;
                for (std::size_t i = 0; i < m; ++i) s2 += b(i, j) * b(i, j);
                r.singular_values[j] = std::sqrt(s2);
            }
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&r](std::size_t i, std::size_t j) {
                return r.singular_values[i] > r.singular_values[j];
            });
            std::vector<double> sorted(n);
            r.u = Matrix(m, n);
            r.v = Matrix(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t o = order[j];
                sorted[j] = r.singular_values[o];
                if (sorted[j] > 0.0)
                    for (std::size_t i = 0; i < m; ++i) r.u(i, j) = b(i, o) / sorted[j];
                for (std::size_t i = 0; i < n; ++i) r.v(i, j) = v(i, o);
            }
            r.singular_values = std::move(sorted);
            return r;
        }
    }
    throw NonConvergence("svd: one-sided Jacobi sweeps exhausted", 1.0);
}

}  // namespace detail

inline SvdResult svd(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0)
        throw InvalidArgument("svd: empty matrix");
    if (a.rows() >= a.cols()) return detail::svd_tall(a);
    SvdResult t = detail::svd_tall(a.transposed());
    return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

// sigma_1 >= sigma_2 >= ... >= 0
inline std::vector<double> singular_values(const Matrix& a) {
    return svd(a).singular_values;
}

// Moore-Penrose pseudo-inverse via SVD, truncating sigma_i < 1e-12 * sigma_1.
// Rank-deficient input is fine; the all-zero matrix maps to all zeros.
inline Matrix pseudo_inverse(const Matrix& a) {
    const SvdResult d = svd(a);
    const double cutoff = kPinvRankCutoff * (d.singular_values.empty() ? 0.0 : d.singular_values.front());
    Matrix pinv(a.cols(), a.rows());
    for (std::size_t r = 0; r < d.singular_values.size(); ++r) {
        const double s = d.singular_values[r];
        if (s <= 0.0 || s < cutoff) continue;
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double vs = d.v(i, r) / s;
            if (vs == 0.0) continue;
            for (std::size_t j = 0; j < a.rows(); ++j) pinv(i, j) += vs * d.u(j, r);
        }
    }
    return pinv;
}

}  // namespace massbound
