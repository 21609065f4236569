#pragma once

//
// Certified lower bounds on the least eigenvalue w_1 of a symmetric positive
// definite mass matrix M, using only a left/right eigenvector pair (g, v) of
// the (M, K) pencil with g = M v.
//
// Core bound, for any probe x with <x, v> > 0:
//
//     F(alpha; x) = alpha - ||x|| * ||g - alpha v|| / <x, v>
//
// F(alpha; x) <= w_1 whenever alpha sits strictly closer to w_1 than to every
// other mass eigenvalue (the validity window; for an ascending spectrum this
// is alpha < (w_1 + w_2) / 2).  Choosing x parallel to v maximizes the bound
// and removes x:
//
//     F(alpha) = alpha - ||g - alpha v|| / ||v||
//
// Admissibility of a mass perturbation dM follows from eigenvalue
// interlacing: w_1(M) + w_1(dM) <= w_1(M + dM), so any certified lower bound
// L <= w_1(M) with w_1(dM) > -L keeps M + dM positive definite.
//

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/matrix.hpp"
#include "massbound/sym_eigen.hpp"

namespace massbound {

// One sample of the bound curve.  valid is empty when no reference spectrum
// was available to check the window (the blind, measurement-only setting);
// window_margin = |w_2 - alpha| - |w_1 - alpha| when a spectrum was given.
struct BoundEvaluation {
    double alpha = 0.0;
    double value = 0.0;
    std::optional<bool> valid;
    std::optional<double> window_margin;
};

struct WindowCheck {
    bool valid;
    double margin;
};

// General form with an explicit probe vector x.
inline double f_alpha_general(std::span<const double> x, std::span<const double> g1,
                              std::span<const double> v1, double alpha) {
    if (g1.size() != v1.size() || x.size() != v1.size())
        throw DimensionMismatch("f_alpha_general: vector lengths differ");
    const double nx = norm(x);
    if (nx == 0.0) throw ZeroVector("f_alpha_general: x must be nonzero");
    const double xv = dot(x, v1);
    if (xv <= 0.0)
        throw NonPositiveInnerProduct("f_alpha_general: <x, v1> must be positive");
    double r = 0.0;
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const double d = g1[i] - alpha * v1[i];
        r += d * d;
    }
    return alpha - nx * std::sqrt(r) / xv;
}

// Probe chosen parallel to v1, the tightest and practical form.
inline double f_alpha(std::span<const double> g1, std::span<const double> v1, double alpha) {
    if (g1.size() != v1.size())
        throw DimensionMismatch("f_alpha: vector lengths differ");
    const double nv = norm(v1);
    if (nv == 0.0) throw ZeroVector("f_alpha: v1 must be nonzero");
    double r = 0.0;
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const double d = g1[i] - alpha * v1[i];
        r += d * d;
    }
    return alpha - std::sqrt(r) / nv;
}

// alpha is admissible when it lies strictly closer to w_1 than to every other
// mass eigenvalue.  The margin is reported against w_2; a tie (margin 0) is
// invalid.  Expects an ascending spectrum of length >= 2.
inline WindowCheck validity_window(std::span<const double> mass_spectrum, double alpha) {
    if (mass_spectrum.size() < 2)
        throw InvalidArgument("validity_window: spectrum needs at least two entries");
    const double d1 = std::abs(mass_spectrum[0] - alpha);
    bool valid = true;
    for (std::size_t i = 1; i < mass_spectrum.size(); ++i)
        if (!(d1 < std::abs(mass_spectrum[i] - alpha))) {
            valid = false;
            break;
        }
    const double margin = std::abs(mass_spectrum[1] - alpha) - d1;
    return {valid, margin};
}

struct SweepResult {
    std::vector<BoundEvaluation> samples;
    std::optional<std::size_t> best_index;

    std::optional<BoundEvaluation> best() const {
        if (!best_index) return std::nullopt;
        return samples[*best_index];
    }
};

// Evaluates F(alpha) over an ascending grid.  With a reference spectrum the
// window check runs per sample and best is the maximal valid value (ties go
// to the smallest alpha); without one validity stays unknown and best is
// absent.  Samples are returned in grid order.
inline SweepResult sweep(std::span<const double> g1, std::span<const double> v1,
                         std::span<const double> alpha_grid,
                         std::optional<std::span<const double>> reference_spectrum = std::nullopt) {
    if (alpha_grid.empty()) throw InvalidArgument("sweep: empty alpha grid");
    for (std::size_t i = 0; i + 1 < alpha_grid.size(); ++i)
        if (alpha_grid[i] > alpha_grid[i + 1])
            throw InvalidArgument("sweep: alpha grid must be ascending");

    SweepResult result;
    result.samples.reserve(alpha_grid.size());
    for (double alpha : alpha_grid) {
        BoundEvaluation e;
        e.alpha = alpha;
        e.value = f_alpha(g1, v1, alpha);
        if (reference_spectrum) {
            const WindowCheck w = validity_window(*reference_spectrum, alpha);
            e.valid = w.valid;
            e.window_margin = w.margin;
        }
        result.samples.push_back(e);
    }
    for (std::size_t i = 0; i < result.samples.size(); ++i) {
        const BoundEvaluation& e = result.samples[i];
        if (!e.valid || !*e.valid) continue;
        if (!result.best_index || e.value > result.samples[*result.best_index].value)
            result.best_index = i;
    }
    return result;
}

// Spectrum of (M - alpha I)^-1 as a function of the spectrum of M: each
// w_i maps to 1 / (w_i - alpha).  Input order is preserved.
inline std::vector<double> shift_invert_spectrum(std::span<const double> mass_spectrum,
                                                 double alpha) {
    double wmax = 0.0;
    for (double w : mass_spectrum) wmax = std::max(wmax, std::abs(w));
    for (double w : mass_spectrum)
        if (std::abs(alpha - w) <= 1e-12 * wmax)
            throw SingularShift("shift_invert_spectrum: alpha coincides with an eigenvalue");
    std::vector<double> out;
    out.reserve(mass_spectrum.size());
    for (double w : mass_spectrum) out.push_back(1.0 / (w - alpha));
    return out;
}

struct AdmissibilityVerdict {
    bool admissible;
    double margin;
};

// Given a certified lower bound L <= w_1(M), a perturbation dM is admissible
// when w_1(dM) > -L: interlacing then guarantees w_1(M + dM) > 0 for every M
// with w_1(M) >= L.  Not admissible means not certified, not impossible.
inline AdmissibilityVerdict admissible_perturbation(double lower_bound_w1,
                                                    const SymmetricMatrix& delta_mass) {
    const double delta_least = sym_eigen(delta_mass).values.front();
    const double margin = delta_least + lower_bound_w1;
    return {delta_least > -lower_bound_w1, margin};
}

}  // namespace massbound
