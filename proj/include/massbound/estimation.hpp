#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"
#include "massbound/svd.hpp"
#include "massbound/sym_eigen.hpp"

namespace massbound {

// Surrogate mass matrix reconstructed from k canonical left/right pairs:
// M' = G V+.  Only its largest singular value is trusted downstream (M' need
// not be symmetric for k < n); half of it is the recommended alpha for the
// bound curve.
class MassEstimate {
public:
    MassEstimate(Matrix left, Matrix right)
        : left_(std::move(left)), right_(std::move(right)) {
        if (left_.rows() != right_.rows() || left_.cols() != right_.cols())
            throw DimensionMismatch("MassEstimate: left/right shapes differ");
        if (left_.cols() == 0) throw InvalidArgument("MassEstimate: k must be >= 1");
        m_prime_ = left_ * pseudo_inverse(right_);
        rho_ = singular_values(m_prime_).front();
        recommended_alpha_ = 0.5 * rho_;
    }

    std::size_t n() const noexcept { return left_.rows(); }
    std::size_t k() const noexcept { return left_.cols(); }
    const Matrix& left_pairs() const noexcept { return left_; }
    const Matrix& right_pairs() const noexcept { return right_; }
    const Matrix& m_prime() const noexcept { return m_prime_; }
    double rho() const noexcept { return rho_; }
    double recommended_alpha() const noexcept { return recommended_alpha_; }

private:
    Matrix left_;
    Matrix right_;
    Matrix m_prime_;
    double rho_;
    double recommended_alpha_;
};

inline MassEstimate estimate_mass(const Matrix& left, const Matrix& right) {
    return MassEstimate(left, right);
}

inline double recommend_alpha(const MassEstimate& est) {
    return est.recommended_alpha();
}

struct Sigma1Check {
    double lhs;   // sigma_1(g v+)
    double rhs;   // sigma_1(M)
    bool holds;   // lhs <= rhs + 1e-9
};

// Verifies sigma_1(g v+) <= sigma_1(M) for a single pair with g = M v.
inline Sigma1Check sigma1_check(std::span<const double> g, std::span<const double> v,
                                const SymmetricMatrix& mass) {
    if (g.size() != mass.n() || v.size() != mass.n())
        throw DimensionMismatch("sigma1_check: vector lengths do not match mass dimension");
    if (norm(v) == 0.0) throw ZeroVector("sigma1_check: v must be nonzero");
    const std::vector<double> mv = mass.apply(v);
    double dev = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        dev += (g[i] - mv[i]) * (g[i] - mv[i]);
        scale += mv[i] * mv[i];
    }
    if (std::sqrt(dev) > 1e-8 * std::max(1.0, std::sqrt(scale)))
        throw PreconditionViolated("sigma1_check: g does not equal M v");

    Matrix gcol(g.size(), 1), vcol(v.size(), 1);
    gcol.set_col(0, g);
    vcol.set_col(0, v);
    const double lhs = singular_values(gcol * pseudo_inverse(vcol)).front();
    const double rhs = singular_values(mass.to_matrix()).front();
    return {lhs, rhs, lhs <= rhs + 1e-9};
}

// Extends an estimate with one more canonically scaled pair (<g, v> = 1).
// A right vector that repeats an existing column (after sign normalization,
// within 1e-10 relative) is rejected as a duplicate mode.
inline MassEstimate refine_with_pairs(const MassEstimate& existing,
                                      std::span<const double> new_left,
                                      std::span<const double> new_right) {
    if (new_left.size() != existing.n() || new_right.size() != existing.n())
        throw DimensionMismatch("refine_with_pairs: vector lengths do not match");
    if (std::abs(dot(new_left, new_right) - 1.0) > 1e-8)
        throw PreconditionViolated("refine_with_pairs: pair is not canonically scaled");

    const auto sign_normalized = [](std::vector<double> c) {
        std::size_t imax = 0;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (std::abs(c[i]) > std::abs(c[imax])) imax = i;
        if (c[imax] < 0.0)
            for (double& x : c) x = -x;
        return c;
    };

    const std::vector<double> cand =
        sign_normalized(std::vector<double>(new_right.begin(), new_right.end()));
    const double cand_norm = norm(cand);
    for (std::size_t j = 0; j < existing.k(); ++j) {
        const std::vector<double> col = sign_normalized(existing.right_pairs().col(j));
        double diff = 0.0;
        for (std::size_t i = 0; i < col.size(); ++i)
            diff += (col[i] - cand[i]) * (col[i] - cand[i]);
        if (std::sqrt(diff) <= 1e-10 * cand_norm)
            throw DuplicatePair("refine_with_pairs: right vector repeats an existing mode");
    }

    Matrix left(existing.n(), existing.k() + 1), right(existing.n(), existing.k() + 1);
    for (std::size_t j = 0; j < existing.k(); ++j) {
        left.set_col(j, existing.left_pairs().col(j));
        right.set_col(j, existing.right_pairs().col(j));
    }
    left.set_col(existing.k(), new_left);
    right.set_col(existing.k(), new_right);
    return MassEstimate(std::move(left), std::move(right));
}

}  // namespace massbound
