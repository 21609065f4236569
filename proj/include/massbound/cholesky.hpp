#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"

namespace massbound {

// Lower-triangular Cholesky factor L with L * L^T = A.
class LowerTriangularFactor {
public:
    explicit LowerTriangularFactor(Matrix l) : l_(std::move(l)) {}

    const Matrix& matrix() const noexcept { return l_; }
    std::size_t n() const noexcept { return l_.rows(); }

    // L y = b
    std::vector<double> solve_lower(std::span<const double> b) const {
        if (b.size() != n()) throw DimensionMismatch("solve_lower: length mismatch");
        std::vector<double> y(n());
        for (std::size_t i = 0; i < n(); ++i) {
            double s = b[i];
            for (std::size_t j = 0; j < i; ++j) s -= l_(i, j) * y[j];
            y[i] = s / l_(i, i);
        }
        return y;
    }

    // L^T x = b
    std::vector<double> solve_lower_transposed(std::span<const double> b) const {
        if (b.size() != n()) throw DimensionMismatch("solve_lower_transposed: length mismatch");
        std::vector<double> x(n());
        for (std::size_t ip = n(); ip > 0; --ip) {
            const std::size_t i = ip - 1;
            double s = b[i];
            for (std::size_t j = i + 1; j < n(); ++j) s -= l_(j, i) * x[j];
            x[i] = s / l_(i, i);
        }
        return x;
    }

    // (L L^T) x = b
    std::vector<double> solve(std::span<const double> b) const {
        return solve_lower_transposed(solve_lower(b));
    }

private:
    Matrix l_;
};

// Cholesky factorization of a symmetric matrix.  A pivot at or below
// 1e-13 * max|a_ii| fails with the offending pivot index, which is the
// signal that the input is not positive definite.
inline LowerTriangularFactor cholesky(const SymmetricMatrix& a) {
    const std::size_t n = a.n();
    const double pivot_floor = 1e-13 * a.max_abs_diagonal();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= pivot_floor) throw NotPositiveDefinite(j);
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return LowerTriangularFactor(std::move(l));
}

}  // namespace massbound
