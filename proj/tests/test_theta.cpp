#include <catch2/catch_amalgamated.hpp>

#include "lattes/theta.hpp"

using namespace lattes;
using Catch::Approx;

static const cplx I(0.0, 1.0);
static const cplx tau = I;

namespace {
const LatticeConstants& consts() {
    static const LatticeConstants k = compute_constants(gaussian_lattice());
    return k;
}
}  // namespace

TEST_CASE("theta divisor zeros on the Gaussian lattice") {
    // theta11 vanishes on the lattice, theta00 at the half-period (1+i)/2
    CHECK(std::abs(theta(theta11(), 0.0, tau)) < 1e-12);
    CHECK(std::abs(theta(theta11(), cplx(3.0, -2.0), tau)) < 1e-10);
    CHECK(std::abs(theta(theta00(), cplx(0.5, 0.5), tau)) < 1e-12);
    CHECK(std::abs(theta(theta00(), cplx(0.5 - 2.0, 0.5 + 1.0), tau)) < 1e-10);
}

TEST_CASE("theta quasi-periodicity matches the series factors") {
    Rng rng(201);
    for (int s = 0; s < 50; ++s) {
        const cplx z = rng.uniform_complex(-1.5, 1.5);
        for (const ThetaChar ch : {theta00(), theta11(), theta_char(1, 0), theta_char(0, 1)}) {
            const cplx base = theta(ch, z, tau);
            const cplx r1 = theta(ch, z + 1.0, tau) / base;
            const cplx e1 = std::exp(cplx(0.0, 2.0 * kPi) * ch.a.value());
            CHECK(std::abs(r1 - e1) / std::abs(e1) < 1e-10);
            const cplx r2 = theta(ch, z + tau, tau) / base;
            const cplx e2 =
                std::exp(-cplx(0.0, kPi) * tau - cplx(0.0, 2.0 * kPi) * (z + ch.b.value()));
            CHECK(std::abs(r2 - e2) / std::abs(e2) < 1e-10);
        }
    }
}

TEST_CASE("theta rejects a degenerate tau and oversize arguments") {
    CHECK_THROWS_AS(theta(theta00(), 0.0, cplx(1.0, -2.0)), convergence_error);
    CHECK_THROWS_AS(theta(theta00(), 0.0, cplx(1.0, 0.0)), convergence_error);
    // reduction keeps the series short even far from the base cell
    CHECK_NOTHROW(theta(theta00(), cplx(500.25, -301.5), tau));
    // a nearly degenerate tau pushes the truncation index past the hard cap
    CHECK_THROWS_AS(theta(theta00(), cplx(0.3, 0.0005), cplx(0.0, 0.001)), convergence_error);
}

TEST_CASE("theta_deriv agrees with a central finite difference") {
    Rng rng(202);
    const double h = 1e-6;
    for (int s = 0; s < 20; ++s) {
        const cplx z = rng.uniform_complex(-1.0, 1.0);
        for (const ThetaChar ch : {theta00(), theta11()}) {
            const cplx fd = (theta(ch, z + h, tau) - theta(ch, z - h, tau)) / (2.0 * h);
            CHECK(std::abs(theta_deriv(ch, z, tau) - fd) < 1e-7);
        }
    }
}

TEST_CASE("theta_deriv parity at the origin") {
    CHECK(std::abs(theta_deriv(theta11(), 0.0, tau)) > 1.0);  // simple zero
    CHECK(std::abs(theta_deriv(theta00(), 0.0, tau)) < 1e-12);  // even function
}

TEST_CASE("normalized theta satisfies the 1-D multiplicator law") {
    Rng rng(203);
    for (const ThetaChar ch : {theta00(), theta11(), theta_char(1, 0), theta_char(0, 1)}) {
        const cplx a1 = std::exp(cplx(0.0, 2.0 * kPi) * ch.a.value());
        const cplx ai = std::exp(-cplx(0.0, 2.0 * kPi) * ch.b.value());
        for (int s = 0; s < 10; ++s) {
            const cplx z = rng.uniform_complex(-1.0, 1.0);
            const cplx base = normalized_theta(ch, z);
            // e_1(z) = alpha(1) e^{pi (z + 1/2)}
            const cplx e1 = a1 * std::exp(kPi * (z + 0.5));
            CHECK(std::abs(normalized_theta(ch, z + 1.0) / base - e1) / std::abs(e1) < 1e-10);
            // e_i(z) = alpha(i) e^{pi (-i z + 1/2)}
            const cplx ei = ai * std::exp(kPi * (-I * z + 0.5));
            CHECK(std::abs(normalized_theta(ch, z + I) / base - ei) / std::abs(ei) < 1e-10);
        }
    }
    // theta11 picks up alpha(i) = e^{-i pi} = -1
    CHECK(std::abs(std::exp(-cplx(0.0, 2.0 * kPi) * theta11().b.value()) + 1.0) < 1e-15);
}

TEST_CASE("normalized theta at the origin is plain theta") {
    for (const ThetaChar ch : {theta00(), theta11()})
        CHECK(std::abs(normalized_theta(ch, 0.0) - theta(ch, 0.0, tau)) < 1e-14);
}

TEST_CASE("lattice constants of the Gaussian lattice") {
    const LatticeConstants& k = consts();
    // c = theta11'(0)^2 / theta00(0)^2 and alpha = wp(1/2); on this lattice the
    // two constants coincide numerically
    CHECK(k.c.imag() == Approx(0.0).margin(1e-12));
    CHECK(k.alpha.real() == Approx(6.875185818020).epsilon(1e-9));
    CHECK(std::abs(k.c - k.alpha) < 1e-9);
    // alpha = wp(1/2) by construction, wp(i/2) = -alpha, wp((1+i)/2) = 0
    CHECK(std::abs(wp(cplx(0.5, 0.0), k) - k.alpha) < 1e-12);
    CHECK(std::abs(wp(cplx(0.0, 0.5), k) + k.alpha) < 1e-9);
    CHECK(std::abs(wp(cplx(0.5, 0.5), k)) < 1e-10);
    CHECK_THROWS_AS(compute_constants(Lattice(cplx(0.2, 1.3))), std::invalid_argument);
}

TEST_CASE("wp pole guard") {
    const LatticeConstants& k = consts();
    CHECK_THROWS_AS(wp(cplx(0.0, 0.0), k), pole_error);
    CHECK_THROWS_AS(wp(cplx(2.0, -1.0) + cplx(1e-8, 0.0), k), pole_error);
    CHECK_THROWS_AS(wp_lattice_sum(cplx(1.0, 1.0), k.lattice, 60), pole_error);
    CHECK_THROWS_AS(wp_prime(cplx(0.0, 0.0), k.lattice, 60), pole_error);
}

TEST_CASE("wp evenness, periodicity and quarter-turn antisymmetry") {
    const LatticeConstants& k = consts();
    Rng rng(204);
    for (int s = 0; s < 20; ++s) {
        const cplx z = cplx(rng.uniform(0.1, 0.45), rng.uniform(0.1, 0.45));
        const cplx p = wp(z, k);
        const double scale = 1.0 + std::abs(p);
        CHECK(std::abs(wp(-z, k) - p) / scale < 1e-9);
        CHECK(std::abs(wp(z + cplx(3.0, -2.0), k) - p) / scale < 1e-9);
        CHECK(std::abs(wp(I * z, k) + p) / scale < 1e-9);
    }
}

TEST_CASE("theta-quotient wp agrees with the lattice-sum oracle") {
    const LatticeConstants& k = consts();
    Rng rng(205);
    int accepted = 0;
    while (accepted < 20) {
        const cplx z = rng.uniform_complex(0.1, 0.9);
        if (std::abs(z - cplx(0.5, 0.5)) < 0.1) continue;  // near the zero of wp
        const cplx a = wp(z, k);
        if (std::abs(a) < 0.5) continue;
        const cplx b = wp_lattice_sum(z, k.lattice, 60);
        CHECK(std::abs(a - b) / std::abs(b) < 1e-3);
        ++accepted;
    }
}

TEST_CASE("wp_lattice_sum basics") {
    const LatticeConstants& k = consts();
    CHECK_THROWS_AS(wp_lattice_sum(cplx(0.3, 0.2), k.lattice, 10), std::invalid_argument);
    // evenness of the truncated sum
    Rng rng(206);
    for (int s = 0; s < 10; ++s) {
        const cplx z = cplx(rng.uniform(0.1, 0.4), rng.uniform(0.1, 0.4));
        const cplx a = wp_lattice_sum(z, k.lattice, 30);
        const cplx b = wp_lattice_sum(-z, k.lattice, 30);
        CHECK(std::abs(a - b) / (1.0 + std::abs(a)) < 1e-9);
    }
    // principal part 1/z^2 near the origin
    for (const double r : {1e-3, 1e-4}) {
        const cplx z(r, 0.7 * r);
        const cplx lead = 1.0 / (z * z);
        CHECK(std::abs(wp_lattice_sum(z, k.lattice, 30) - lead) / std::abs(lead) < 1e-4);
    }
}

TEST_CASE("wp_prime sign convention and oddness") {
    const LatticeConstants& k = consts();
    // wp'(z) ~ -2/z^3 near the origin
    const cplx z(1e-3, 5e-4);
    const cplx lead = -2.0 / (z * z * z);
    CHECK(std::abs(wp_prime(z, k.lattice, 40) - lead) / std::abs(lead) < 1e-4);
    Rng rng(207);
    for (int s = 0; s < 10; ++s) {
        const cplx w = cplx(rng.uniform(0.1, 0.4), rng.uniform(0.1, 0.4));
        const cplx a = wp_prime(w, k.lattice, 40);
        CHECK(std::abs(a + wp_prime(-w, k.lattice, 40)) / (1.0 + std::abs(a)) < 1e-9);
    }
    // half-periods are critical points (finite-difference cross-check)
    const double h = 1e-6;
    const cplx fd = (wp(cplx(0.5 + h, 0.0), k) - wp(cplx(0.5 - h, 0.0), k)) / (2.0 * h);
    CHECK(std::abs(fd) < 1e-4);
    CHECK(std::abs(wp_prime(cplx(0.5, 0.0), k.lattice, 60)) < 1e-3);
}

TEST_CASE("lattice-sum wp_prime matches the theta-route derivative") {
    const LatticeConstants& k = consts();
    Rng rng(208);
    for (int s = 0; s < 10; ++s) {
        const cplx z = cplx(rng.uniform(0.1, 0.45), rng.uniform(0.1, 0.45));
        const cplx a = wp_prime(z, k.lattice, 60);
        const cplx b = wp_prime_theta(z, k);
        CHECK(std::abs(a - b) / (1.0 + std::abs(b)) < 1e-3);
    }
}

TEST_CASE("differential equation wp'^2 = 4 wp (wp^2 - alpha^2)") {
    const LatticeConstants& k = consts();
    Rng rng(209);
    for (int s = 0; s < 20; ++s) {
        const cplx z = cplx(rng.uniform(0.08, 0.46), rng.uniform(0.08, 0.46));
        const cplx p = wp(z, k);
        const cplx dp = wp_prime_theta(z, k);
        const cplx rhs = 4.0 * p * (p * p - k.alpha * k.alpha);
        CHECK(std::abs(dp * dp - rhs) / (1.0 + std::abs(rhs)) < 1e-6);
    }
}

TEST_CASE("addition formula") {
    const LatticeConstants& k = consts();
    Rng rng(210);
    int accepted = 0;
    while (accepted < 50) {
        const cplx x = cplx(rng.uniform(0.06, 0.44), rng.uniform(0.06, 0.44));
        const cplx y = cplx(rng.uniform(0.55, 0.93), rng.uniform(0.06, 0.44));
        const cplx px = wp(x, k), py = wp(y, k);
        if (std::abs(px - py) < 1e-2) continue;
        const auto near_pole = [&](cplx w) {
            const auto r = reduce(w, k.lattice);
            return detail::pole_distance(r.z0, k.lattice) < 2e-2;
        };
        if (near_pole(x + y) || near_pole(x - y)) continue;
        const cplx dx = wp_prime_theta(x, k), dy = wp_prime_theta(y, k);
        const cplx lhs = (px - py) * (px - py) * wp(x + y, k);
        const cplx rhs = 0.25 * (dx - dy) * (dx - dy) - (px + py) * (px - py) * (px - py);
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) < 1e-6);
        ++accepted;
    }
}
