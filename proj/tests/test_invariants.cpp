#include <catch2/catch_amalgamated.hpp>

#include "lattes/invariants.hpp"

using namespace lattes;
using Catch::Approx;

static const cplx I(0.0, 1.0);

TEST_CASE("basis for G(2,1,2): degrees and the Flatto criterion") {
    const InvariantBasis B = basis_g212();
    REQUIRE(B.degrees == std::vector<int>{2, 4});
    CHECK(B.degree_product() == 8);
    CHECK(B.degree_product() == static_cast<long>(gmp2(2, 1).order()));
    // Jacobian vanishes on mirrors, not at a generic point
    CHECK(std::abs(check_jacobian_nonzero(B, {1.0, 2.0}) - cplx(-24.0, 0.0)) < 1e-12);
    CHECK(std::abs(check_jacobian_nonzero(B, {1.0, 1.0})) < 1e-12);
    CHECK(std::abs(check_jacobian_nonzero(B, {0.0, 0.0})) < 1e-15);
}

TEST_CASE("basis symmetry spot checks") {
    const InvariantBasis B = basis_g212();
    const Vec2 t{cplx(0.7, -0.3), cplx(-1.2, 0.4)};
    const Vec2 swapped{t[1], t[0]};
    CHECK(std::abs(B.polys[0].eval(swapped) - B.polys[0].eval(t)) < 1e-14);
    const Vec2 flipped{-t[0], t[1]};
    CHECK(std::abs(B.polys[1].eval(flipped) - B.polys[1].eval(t)) < 1e-14);
}

TEST_CASE("invariance under G(2,1,2) and failure under G(4,1,2)") {
    const InvariantBasis B = basis_g212();
    CHECK(check_invariance(B, gmp2(2, 1), 50) < 1e-10);
    CHECK(check_invariance(B, gmp2(4, 1), 50) > 0.1);
    // any basis is invariant under the trivial group
    FiniteGroup triv{Lattice2(gaussian_lattice())};
    triv.elements.push_back({Mat2::identity(), {0.0, 0.0}});
    CHECK(check_invariance(B, triv, 20) < 1e-15);
}

TEST_CASE("homogeneity validation in the constructor") {
    Poly2 bad;
    bad.coeffs[{1, 0}] = 1.0;
    bad.coeffs[{2, 0}] = 1.0;
    CHECK_THROWS_AS(InvariantBasis({bad}, {2}), std::invalid_argument);
}

TEST_CASE("phi evaluation") {
    const InvariantBasis B = basis_g212();
    const Vec2 y = phi_eval(B, {1.0, I});
    CHECK(std::abs(y[0]) < 1e-15);             // 1 + i^2 = 0
    CHECK(std::abs(y[1] + 1.0) < 1e-15);       // 1 * i^2 = -1
    const Vec2 zero = phi_eval(B, {0.0, 0.0});
    CHECK(std::abs(zero[0]) + std::abs(zero[1]) < 1e-15);

    // constant on G(2,1,2) orbits
    Rng rng(401);
    const FiniteGroup G = gmp2(2, 1);
    for (int s = 0; s < 100; ++s) {
        const Vec2 t{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
        const Vec2 base = phi_eval(B, t);
        for (const auto& g : G.elements) {
            const Vec2 yg = phi_eval(B, g.A.apply(t));
            CHECK(std::abs(yg[0] - base[0]) + std::abs(yg[1] - base[1]) < 1e-10);
        }
    }
}

TEST_CASE("singularity equation for G(2,1,2)") {
    // pullback identity: lhs(Phi(t)) = 2 (|t1|^2 + |t2|^2)
    const InvariantBasis B = basis_g212();
    Rng rng(402);
    for (int s = 0; s < 50; ++s) {
        const Vec2 t{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
        const Vec2 th = phi_eval(B, t);
        CHECK(std::abs(singularity_lhs_g212(th[0], th[1]) -
                       2.0 * (std::norm(t[0]) + std::norm(t[1]))) < 1e-10);
    }
    CHECK(singularity_lhs_g212(0.0, 0.0) == Approx(0.0).margin(1e-15));
    // double root: theta1^2 = 4 theta2, both terms collapse to |theta1|
    CHECK(singularity_lhs_g212(2.0, 1.0) == Approx(4.0));
    // branch independence under sqrt sign flip
    for (int s = 0; s < 25; ++s) {
        const cplx t1 = rng.uniform_complex(-1.0, 1.0), t2 = rng.uniform_complex(-1.0, 1.0);
        const cplx root = std::sqrt(t1 * t1 - 4.0 * t2);
        const double flipped = std::abs(t1 - root) + std::abs(t1 + root);
        CHECK(singularity_lhs_g212(t1, t2) == Approx(flipped));
    }
}

TEST_CASE("one-dimensional singularity equation") {
    CHECK(singularity_lhs_1d(0.0, 2) == Approx(0.0).margin(1e-300));
    CHECK(singularity_lhs_1d(-4.0, 2) == Approx(4.0));
    CHECK_THROWS_AS(singularity_lhs_1d(1.0, 5), std::invalid_argument);
    Rng rng(403);
    for (int s = 0; s < 25; ++s) {
        const cplx t = rng.uniform_complex(-1.5, 1.5);
        for (const int m : {2, 3, 4, 6})
            CHECK(std::abs(singularity_lhs_1d(cpow_int(t, m), m) - std::norm(t)) < 1e-12);
    }
}

TEST_CASE("boundary defining value") {
    const HermitianForm H = HermitianForm::scalar(-1.0);
    CHECK(boundary_defining_value(cplx(0.7, 0.3), {0.0, 0.0}, H) == Approx(0.7));
    // orbit independence under the invariance group of H
    Rng rng(404);
    const FiniteGroup G = gmp2(2, 1);
    for (int s = 0; s < 25; ++s) {
        const Vec2 t{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
        const cplx w = rng.uniform_complex(-1.0, 1.0);
        const double base = boundary_defining_value(w, t, H);
        for (const auto& g : G.elements)
            CHECK(std::abs(boundary_defining_value(w, g.A.apply(t), H) - base) < 1e-10);
    }
}
