#pragma once

// Test-only fixtures and independent oracles.  Nothing in this header may
// route through the library kernel it is used to check: determinants go via
// partial-pivot elimination, inverses via Gauss-Jordan, pencil eigenvalues
// via det sign scans.

#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "massbound/matrix.hpp"

namespace testutil {

using massbound::Matrix;
using massbound::SymmetricMatrix;
using Rng = std::mt19937;

inline SymmetricMatrix random_symmetric(std::size_t n, Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    SymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a.set(i, j, u(rng));
    return a;
}

// Gram-Schmidt on a Gaussian sample; redraws on near-dependence.
inline Matrix random_orthogonal(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        while (true) {
            std::vector<double> col(n);
            for (double& x : col) x = g(rng);
            for (std::size_t p = 0; p < j; ++p) {
                double proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += q(i, p) * col[i];
                for (std::size_t i = 0; i < n; ++i) col[i] -= proj * q(i, p);
            }
            const double nrm = massbound::norm(col);
            if (nrm > 1e-6) {
                for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / nrm;
                break;
            }
        }
    }
    return q;
}

// Q diag(eigs) Q^T, symmetrized entry by entry.
inline SymmetricMatrix spd_from_eigs(const Matrix& q, std::span<const double> eigs) {
    const std::size_t n = q.rows();
    SymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += q(i, l) * eigs[l] * q(j, l);
            a.set(i, j, s);
        }
    return a;
}

// Random SPD matrix with eigenvalues log-uniform in [eig_lo, eig_hi];
// eigenvalues are reported back ascending through *eigs_out when given.
inline SymmetricMatrix random_spd(std::size_t n, Rng& rng, double eig_lo, double eig_hi,
                                  std::vector<double>* eigs_out = nullptr) {
    std::uniform_real_distribution<double> u(std::log(eig_lo), std::log(eig_hi));
    std::vector<double> eigs(n);
    for (double& e : eigs) e = std::exp(u(rng));
    std::sort(eigs.begin(), eigs.end());
    if (eigs_out) *eigs_out = eigs;
    return spd_from_eigs(random_orthogonal(n, rng), eigs);
}

inline std::vector<double> random_vector(std::size_t n, Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

// Determinant by Gaussian elimination with partial pivoting.
inline double det_partial_pivot(Matrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("det: square input required");
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
        if (a(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

// Dense inverse by Gauss-Jordan with partial pivoting.
inline Matrix invert_gauss_jordan(Matrix a) {
    const std::size_t n = a.rows();
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
        if (a(piv, c) == 0.0) throw std::invalid_argument("invert: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        const double d = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a(r, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Generalized eigenvalues of K v = lambda M v located by scanning
// det(K - lambda M) for sign changes on a fine grid, then bisecting.
inline std::vector<double> pencil_eigs_det_scan(const SymmetricMatrix& m,
                                                const SymmetricMatrix& k, double lo, double hi,
                                                int grid_points) {
    const auto f = [&](double lam) {
        Matrix a = k.to_matrix();
        for (std::size_t i = 0; i < m.n(); ++i)
            for (std::size_t j = 0; j < m.n(); ++j) a(i, j) -= lam * m(i, j);
        return det_partial_pivot(a);
    };
    std::vector<double> roots;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= grid_points; ++i) {
        const double x = lo + (hi - lo) * i / grid_points;
        const double fx = f(x);
        if (prev_f == 0.0) {
            roots.push_back(prev_x);
        } else if ((prev_f < 0.0) != (fx < 0.0)) {
            double a = prev_x, b = x, fa = prev_f;
            for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::abs(b)); ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

}  // namespace testutil
