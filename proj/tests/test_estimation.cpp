#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "massbound/bounds.hpp"
#include "massbound/estimation.hpp"
#include "massbound/modal.hpp"
#include "massbound/reference_systems.hpp"
#include "oracles.hpp"

using namespace massbound;
using Catch::Approx;

TEST_CASE("full-information estimate reproduces the mass matrix") {
    for (const char* name : {"M1", "M2"}) {
        const MassStiffnessSystem sys = reference_system(name);
        const ModalData md = solve_pencil(sys);
        const MassEstimate est = estimate_mass(md.left_vectors(), md.right_vectors());
        const Matrix diff = est.m_prime() - sys.mass().to_matrix();
        REQUIRE(diff.frobenius_norm() <= 1e-8 * sys.mass().frobenius_norm());
        // square V makes M' symmetric as well
        REQUIRE((est.m_prime() - est.m_prime().transposed()).frobenius_norm() <=
                1e-8 * sys.mass().frobenius_norm());
    }
}

TEST_CASE("rank-1 estimate from a single pair") {
    Matrix g(2, 1), v(2, 1);
    g(0, 0) = 2.0;
    v(0, 0) = 1.0;
    const MassEstimate est = estimate_mass(g, v);
    REQUIRE(est.m_prime()(0, 0) == Approx(2.0));
    REQUIRE(est.m_prime()(0, 1) == Approx(0.0).margin(1e-15));
    REQUIRE(est.m_prime()(1, 0) == Approx(0.0).margin(1e-15));
    REQUIRE(est.m_prime()(1, 1) == Approx(0.0).margin(1e-15));
    REQUIRE(est.rho() == Approx(2.0));
    REQUIRE(est.recommended_alpha() == Approx(1.0));
}

TEST_CASE("k = 1 estimate on the reference chain (frozen oracle value)") {
    const ModalData md = solve_pencil(reference_system("M1")).truncated(1);
    const MassEstimate est = estimate_mass(md.left_vectors(), md.right_vectors());
    REQUIRE(est.rho() == Approx(22.0814099773).epsilon(1e-9));
    REQUIRE(est.rho() <= 30.0 + 1e-9);  // capped by sigma_1 of the true mass
    // rank-1 identity: sigma_1(g v+) = ||g|| / ||v||
    REQUIRE(est.rho() == Approx(norm(md.left(0)) / norm(md.right(0))).epsilon(1e-10));
}

TEST_CASE("recommended alpha is half the reconstructed spectral radius") {
    const ModalData md = solve_pencil(reference_system("M2"));
    const MassEstimate full = estimate_mass(md.left_vectors(), md.right_vectors());
    REQUIRE(full.rho() == Approx(200.0).epsilon(1e-9));
    REQUIRE(recommend_alpha(full) == Approx(100.0).epsilon(1e-9));
    REQUIRE(full.recommended_alpha() == 0.5 * full.rho());

    // degenerate data: zero left vectors give rho = 0 and alpha = 0
    Matrix g(3, 1), v(3, 1);
    v(0, 0) = 1.0;
    const MassEstimate zero = estimate_mass(g, v);
    REQUIRE(zero.rho() == 0.0);
    REQUIRE(recommend_alpha(zero) == 0.0);
}

TEST_CASE("sigma1_check on simple fixtures") {
    const Sigma1Check a =
        sigma1_check(std::vector<double>{1.0, 0.0}, std::vector<double>{1.0, 0.0},
                     SymmetricMatrix::identity(2));
    REQUIRE(a.lhs == Approx(1.0));
    REQUIRE(a.rhs == Approx(1.0));
    REQUIRE(a.holds);

    const Sigma1Check b = sigma1_check(std::vector<double>{2.0, 0.0}, std::vector<double>{1.0, 0.0},
                                       SymmetricMatrix::diagonal(std::vector<double>{2, 3}));
    REQUIRE(b.lhs == Approx(2.0));
    REQUIRE(b.rhs == Approx(3.0));
    REQUIRE(b.holds);

    // g must actually equal M v
    REQUIRE_THROWS_AS(sigma1_check(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 0.0},
                                   SymmetricMatrix::diagonal(std::vector<double>{2, 3})),
                      PreconditionViolated);
    REQUIRE_THROWS_AS(sigma1_check(std::vector<double>{0.0, 0.0}, std::vector<double>{0.0, 0.0},
                                   SymmetricMatrix::identity(2)),
                      ZeroVector);
}

TEST_CASE("sigma1_check holds across random SPD trials") {
    testutil::Rng rng(112358);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const SymmetricMatrix m = testutil::random_spd(n, rng, 0.1, 10.0);
        std::vector<double> v = testutil::random_vector(n, rng, 2.0);
        if (norm(v) < 1e-6) continue;
        const Sigma1Check c = sigma1_check(m.apply(v), v, m);
        REQUIRE(c.holds);
    }
}

TEST_CASE("refining with more pairs matches the stacked estimate") {
    const ModalData md = solve_pencil(reference_system("M1"));
    const ModalData one = md.truncated(1);
    MassEstimate est = estimate_mass(one.left_vectors(), one.right_vectors());
    est = refine_with_pairs(est, md.left(1), md.right(1));
    est = refine_with_pairs(est, md.left(2), md.right(2));

    const ModalData three = md.truncated(3);
    const MassEstimate direct = estimate_mass(three.left_vectors(), three.right_vectors());
    REQUIRE(est.k() == 3);
    REQUIRE((est.m_prime() - direct.m_prime()).frobenius_norm() <= 1e-12);
    REQUIRE(est.rho() == Approx(direct.rho()).epsilon(1e-12));
}

TEST_CASE("refine rejects duplicates and uncanonical pairs") {
    const ModalData md = solve_pencil(reference_system("M1"));
    const ModalData one = md.truncated(1);
    const MassEstimate est = estimate_mass(one.left_vectors(), one.right_vectors());

    REQUIRE_THROWS_AS(refine_with_pairs(est, md.left(0), md.right(0)), DuplicatePair);

    // sign-flipped repeat is still the same mode
    std::vector<double> flipped_v = md.right(0), flipped_g = md.left(0);
    for (double& x : flipped_v) x = -x;
    for (double& x : flipped_g) x = -x;
    REQUIRE_THROWS_AS(refine_with_pairs(est, flipped_g, flipped_v), DuplicatePair);

    std::vector<double> off_scale = md.left(1);
    for (double& x : off_scale) x *= 2.0;
    REQUIRE_THROWS_AS(refine_with_pairs(est, off_scale, md.right(1)), PreconditionViolated);
}

TEST_CASE("rho sequence over growing k on the M2 chain (frozen oracle values)") {
    const ModalData md = solve_pencil(reference_system("M2"));
    const double expected[5] = {155.825298347, 192.055415044, 196.453360837, 197.552425921, 200.0};
    double prev = 0.0;
    for (std::size_t k = 1; k <= 5; ++k) {
        const ModalData part = md.truncated(k);
        const MassEstimate est = estimate_mass(part.left_vectors(), part.right_vectors());
        REQUIRE(est.rho() == Approx(expected[k - 1]).epsilon(1e-6));
        REQUIRE(est.rho() >= prev - 1e-9);  // nondecreasing on this fixture
        prev = est.rho();
    }
    REQUIRE(prev == Approx(200.0).epsilon(1e-9));
}

TEST_CASE("F(alpha) is invariant under joint positive rescaling of the pair") {
    testutil::Rng rng(90210);
    std::uniform_real_distribution<double> us(1e-3, 1e3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const std::vector<double> v = testutil::random_vector(n, rng, 2.0);
        if (norm(v) < 1e-6) continue;
        const std::vector<double> g = testutil::random_vector(n, rng, 2.0);
        const double alpha = us(rng) * 0.01;
        const double base = f_alpha(g, v, alpha);
        const double s = us(rng);
        std::vector<double> gs = g, vs = v;
        for (double& x : gs) x *= s;
        for (double& x : vs) x *= s;
        REQUIRE(f_alpha(gs, vs, alpha) == Approx(base).epsilon(1e-12).margin(1e-12));
    }
}

TEST_CASE("estimate_mass validates shapes") {
    REQUIRE_THROWS_AS(estimate_mass(Matrix(3, 2), Matrix(3, 1)), DimensionMismatch);
    REQUIRE_THROWS_AS(estimate_mass(Matrix(3, 2), Matrix(2, 2)), DimensionMismatch);
}
