#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "massbound/cholesky.hpp"
#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"
#include "massbound/sym_eigen.hpp"

namespace massbound {

// A mass-stiffness pencil (M, K): K v = lambda M v.  The mass matrix must be
// symmetric positive definite (entries in kg, stiffness in N/m); the
// constructor verifies this by factorization.
class MassStiffnessSystem {
public:
    MassStiffnessSystem(SymmetricMatrix mass, SymmetricMatrix stiffness)
        : mass_(std::move(mass)), stiffness_(std::move(stiffness)) {
        if (mass_.n() != stiffness_.n())
            throw DimensionMismatch("MassStiffnessSystem: mass and stiffness dimensions differ");
        cholesky(mass_);  // throws NotPositiveDefinite if M is not SPD
    }

    std::size_t n() const noexcept { return mass_.n(); }
    const SymmetricMatrix& mass() const noexcept { return mass_; }
    const SymmetricMatrix& stiffness() const noexcept { return stiffness_; }

private:
    SymmetricMatrix mass_;
    SymmetricMatrix stiffness_;
};

// Modal data for k retained pairs: ascending eigenvalues (rad^2/s^2),
// mass-normalized right eigenvectors V, and canonical left eigenvectors
// G = M V.  Canonical scaling makes G^T V = I_k, which is the one invariant
// checkable without M itself and is enforced here.
class ModalData {
public:
    ModalData(std::vector<double> eigenvalues, Matrix right_vectors, Matrix left_vectors)
        : eigenvalues_(std::move(eigenvalues)),
          right_(std::move(right_vectors)),
          left_(std::move(left_vectors)) {
        const std::size_t k = eigenvalues_.size();
        if (k == 0) throw InvalidArgument("ModalData: at least one pair required");
        if (right_.cols() != k || left_.cols() != k || right_.rows() != left_.rows())
            throw DimensionMismatch("ModalData: eigenvalue/eigenvector shapes disagree");
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (eigenvalues_[i] > eigenvalues_[i + 1])
                throw InvalidArgument("ModalData: eigenvalues must be ascending");
        const Matrix gram = left_.transposed() * right_;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                if (std::abs(gram(i, j) - want) > 1e-8)
                    throw PreconditionViolated("ModalData: G^T V deviates from identity");
            }
    }

    std::size_t n() const noexcept { return right_.rows(); }
    std::size_t k() const noexcept { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    const Matrix& right_vectors() const noexcept { return right_; }
    const Matrix& left_vectors() const noexcept { return left_; }
    std::vector<double> right(std::size_t i) const { return right_.col(i); }
    std::vector<double> left(std::size_t i) const { return left_.col(i); }

    ModalData truncated(std::size_t k) const {
        if (k == 0 || k > eigenvalues_.size())
            throw InvalidArgument("truncated: k out of range");
        std::vector<double> vals(eigenvalues_.begin(), eigenvalues_.begin() + k);
        Matrix r(n(), k), l(n(), k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n(); ++i) {
                r(i, j) = right_(i, j);
                l(i, j) = left_(i, j);
            }
        return ModalData(std::move(vals), std::move(r), std::move(l));
    }

private:
    std::vector<double> eigenvalues_;
    Matrix right_;
    Matrix left_;
};

// Mass and optional stiffness deltas applied to a system.
struct Perturbation {
    explicit Perturbation(SymmetricMatrix dm) : delta_mass(std::move(dm)) {}
    Perturbation(SymmetricMatrix dm, SymmetricMatrix dk)
        : delta_mass(std::move(dm)), delta_stiffness(std::move(dk)) {}

    SymmetricMatrix delta_mass;
    std::optional<SymmetricMatrix> delta_stiffness;
};

struct RealizabilityCertificate {
    bool realizable;
    double least_eigenvalue;
};

// Positive kinetic energy for every velocity is equivalent to all mass
// eigenvalues being positive; the least one is returned as the certificate.
inline RealizabilityCertificate realizability_certificate(const SymmetricMatrix& mass) {
    const double least = sym_eigen(mass).values.front();
    return {least > 0.0, least};
}

// KE = 1/2 <xdot, M xdot>, in joules for kg and m/s inputs.
inline double kinetic_energy(const SymmetricMatrix& mass, std::span<const double> velocity) {
    return 0.5 * dot(velocity, mass.apply(velocity));
}

// Canonical left eigenvectors G = M V, columnwise.
inline Matrix left_eigenvectors(const SymmetricMatrix& mass, const Matrix& right) {
    if (right.rows() != mass.n())
        throw DimensionMismatch("left_eigenvectors: row count does not match mass dimension");
    Matrix g(right.rows(), right.cols());
    for (std::size_t j = 0; j < right.cols(); ++j) g.set_col(j, mass.apply(right.col(j)));
    return g;
}

// Rescales an arbitrarily scaled measured left eigenvector so <g, v> = 1,
// the scale at which g coincides with M v for a mass-normalized v.
inline std::vector<double> canonicalize_left(std::span<const double> raw_left,
                                             std::span<const double> right) {
    const double s = dot(raw_left, right);
    if (std::abs(s) < 1e-14 * norm(raw_left) * norm(right))
        throw DegenerateScaling("canonicalize_left: <raw_left, right> vanishes");
    std::vector<double> g(raw_left.begin(), raw_left.end());
    for (double& x : g) x /= s;
    return g;
}

// Solves K v = lambda M v by reduction to the standard symmetric problem
// L^-1 K L^-T y = lambda y with M = L L^T, then v = L^-T y rescaled to
// v^T M v = 1.  Returns the full modal data (k = n).
inline ModalData solve_pencil(const MassStiffnessSystem& sys) {
    const std::size_t n = sys.n();
    const LowerTriangularFactor fac = cholesky(sys.mass());

    // S = L^-1 K L^-T, assembled columnwise and symmetrized against roundoff.
    Matrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) x.set_col(j, fac.solve_lower(sys.stiffness().to_matrix().col(j)));
    Matrix st(n, n);
    for (std::size_t j = 0; j < n; ++j) st.set_col(j, fac.solve_lower(x.transposed().col(j)));
    const SymmetricMatrix s = SymmetricMatrix::symmetrize(st.transposed());

    const SpectrumResult eig = sym_eigen(s);
    Matrix v(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> col = fac.solve_lower_transposed(eig.vectors.col(j));
        const double m_norm = std::sqrt(dot(col, sys.mass().apply(col)));
        for (double& c : col) c /= m_norm;
        v.set_col(j, col);
    }
    apply_sign_convention(v);
    return ModalData(eig.values, v, left_eigenvectors(sys.mass(), v));
}

// Lumped-mass spring chain.  M = diag(masses); the stiffness couples
// neighbor i to i+1 through springs[i], with K[n-1][n-1] = springs[n-1]
// (see the README for the boundary-condition variants).
inline MassStiffnessSystem build_chain(std::span<const double> masses,
                                       std::span<const double> springs) {
    const std::size_t n = masses.size();
    if (n < 2) throw InvalidArgument("build_chain: need at least two masses");
    if (springs.size() != n)
        throw InvalidArgument("build_chain: springs list must match masses list in length");
    for (double m : masses)
        if (!(m > 0.0)) throw InvalidArgument("build_chain: masses must be positive");
    for (double k : springs)
        if (!(k > 0.0)) throw InvalidArgument("build_chain: spring rates must be positive");

    SymmetricMatrix mass = SymmetricMatrix::diagonal(masses);
    SymmetricMatrix stiff(n);
    stiff.set(0, 0, springs[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) stiff.set(i, i, springs[i - 1] + springs[i]);
    stiff.set(n - 1, n - 1, springs[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) stiff.set(i, i + 1, -springs[i]);
    return MassStiffnessSystem(std::move(mass), std::move(stiff));
}

struct PerturbedSystem {
    MassStiffnessSystem system;
    ModalData modal;
    RealizabilityCertificate certificate;
};

// Forms (M + dM, K + dK) and solves it.  Throws NotPositiveDefinite when the
// perturbed mass loses positive definiteness, which is exactly the failure
// the admissibility bound exists to rule out ahead of time.
inline PerturbedSystem apply_perturbation(const MassStiffnessSystem& sys, const Perturbation& p) {
    if (p.delta_mass.n() != sys.n())
        throw DimensionMismatch("apply_perturbation: delta_mass dimension mismatch");
    SymmetricMatrix mass = sys.mass() + p.delta_mass;
    SymmetricMatrix stiffness = sys.stiffness();
    if (p.delta_stiffness) {
        if (p.delta_stiffness->n() != sys.n())
            throw DimensionMismatch("apply_perturbation: delta_stiffness dimension mismatch");
        stiffness = stiffness + *p.delta_stiffness;
    }
    const RealizabilityCertificate cert = realizability_certificate(mass);
    MassStiffnessSystem modified(std::move(mass), std::move(stiffness));
    ModalData modal = solve_pencil(modified);
    return PerturbedSystem{std::move(modified), std::move(modal), cert};
}

}  // namespace massbound
