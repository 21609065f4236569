#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"

namespace massbound {

// Full spectrum of a real symmetric matrix: ascending eigenvalues and the
// matching orthonormal eigenvector columns.
struct SpectrumResult {
    std::vector<double> values;
    Matrix vectors;
};

// Deterministic eigenvector orientation: the entry of largest magnitude in
// each column is made positive, ties broken by lowest row index.
inline void apply_sign_convention(Matrix& vectors) {
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        std::size_t imax = 0;
        double best = std::abs(vectors(0, j));
        for (std::size_t i = 1; i < vectors.rows(); ++i) {
            const double a = std::abs(vectors(i, j));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        if (vectors(imax, j) < 0.0)
            for (std::size_t i = 0; i < vectors.rows(); ++i) vectors(i, j) = -vectors(i, j);
    }
}

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi diagonalization.  Converges when the off-diagonal Frobenius
// norm drops to 1e-12 * ||A||_F; capped at 100 sweeps.
inline SpectrumResult sym_eigen(const SymmetricMatrix& input) {
    const std::size_t n = input.n();
    Matrix a = input.to_matrix();
    Matrix v = Matrix::identity(n);

    constexpr int kMaxSweeps = 100;
    const double threshold = 1e-12 * input.frobenius_norm();

    double off = detail::off_diagonal_norm(a);
    for (int sweep = 0; sweep < kMaxSweeps && off > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip - s * (aiq + tau * aip);
                    a(p, i) = a(i, p);
                    a(i, q) = aiq + s * (aip - tau * aiq);
                    a(q, i) = a(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip - s * (viq + tau * vip);
                    v(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
        off = detail::off_diagonal_norm(a);
    }
    if (off > threshold)
        throw NonConvergence("sym_eigen: Jacobi sweeps exhausted", off);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SpectrumResult r;
    r.values.resize(n);
    r.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        r.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = v(i, order[j]);
    }
    apply_sign_convention(r.vectors);
    return r;
}

// Largest eigenvalue magnitude; equals the operator 2-norm for symmetric input.
inline double spectral_radius(const SymmetricMatrix& a) {
    const SpectrumResult r = sym_eigen(a);
    return std::max(std::abs(r.values.front()), std::abs(r.values.back()));
}

}  // namespace massbound
