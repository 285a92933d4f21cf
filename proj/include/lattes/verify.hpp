#pragma once

// The verification suites: every quantitative identity the library asserts,
// run with explicit sample counts, seeds and tolerances, producing a
// machine-readable report. The CLI and the acceptance tests both drive these.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "lattes/core.hpp"
#include "lattes/green.hpp"
#include "lattes/groups.hpp"
#include "lattes/hermitian.hpp"
#include "lattes/invariants.hpp"
#include "lattes/maps.hpp"
#include "lattes/projective.hpp"
#include "lattes/sigma.hpp"
#include "lattes/theta.hpp"

namespace lattes {

struct CheckRecord {
    std::string id;
    long n_samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    bool overall_pass = true;
    double wall_seconds = 0.0;  // human-readable output only, excluded from JSON

    void add(const std::string& id, long n, std::uint64_t seed, double tol, double residual) {
        CheckRecord r{id, n, seed, tol, residual, residual <= tol};
        overall_pass = overall_pass && r.pass;
        checks.push_back(std::move(r));
    }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks) {
            overall_pass = overall_pass && c.pass;
            checks.push_back(c);
        }
        wall_seconds += other.wall_seconds;
    }
};

struct VerifyConfig {
    int samples = 100;
    std::uint64_t seed = 20020817;
    double tol_scale = 1.0;
    int p_max = 40;
};

namespace verify_detail {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

inline const LatticeConstants& constants() {
    static const LatticeConstants k = compute_constants(gaussian_lattice());
    return k;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// theta suite: series quasi-periodicity, divisors, wp routes and identities

inline VerificationReport run_theta_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "theta";
    const LatticeConstants& k = verify_detail::constants();
    const cplx tau(0.0, 1.0);
    const cplx I(0.0, 1.0);
    const double ts = cfg.tol_scale;

    {  // quasi-periodicity over a 3x3 block of fundamental domains
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.qp");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        for (int s = 0; s < n; ++s) {
            const cplx z = rng.uniform_complex(-1.5, 1.5);
            for (const ThetaChar ch : {theta00(), theta11(), theta_char(1, 0), theta_char(0, 1)}) {
                const cplx base = theta(ch, z, tau);
                const cplx r1 = theta(ch, z + 1.0, tau) / base;
                const cplx e1 = std::exp(cplx(0.0, 2.0 * kPi) * ch.a.value());
                const cplx r2 = theta(ch, z + tau, tau) / base;
                const cplx e2 = std::exp(-cplx(0.0, kPi) * tau - cplx(0.0, 2.0 * kPi) * (z + ch.b.value()));
                worst = std::max(worst, std::abs(r1 - e1) / std::abs(e1));
                worst = std::max(worst, std::abs(r2 - e2) / std::abs(e2));
            }
        }
        rep.add("theta.quasi_periodicity", n, seed, 1e-10 * ts, worst);
    }
    {  // divisor zeros at lattice translates; away from the base cell the
        // value is measured relative to the quasi-periodicity factor (an exact
        // zero scaled by e^{pi n^2} only reproduces roundoff at that scale)
        double worst = 0.0;
        int n = 0;
        for (int m = -2; m <= 2; ++m) {
            for (int nn = -2; nn <= 2; ++nn) {
                const cplx gamma = cplx(double(m), 0.0) + double(nn) * tau;
                const double e11 =
                    std::abs(detail::quasi_periodicity_factor(theta11(), 0.0, tau, m, nn));
                const double e00 = std::abs(
                    detail::quasi_periodicity_factor(theta00(), cplx(0.5, 0.5), tau, m, nn));
                worst = std::max(worst, std::abs(theta(theta11(), gamma, tau)) / std::max(1.0, e11));
                worst = std::max(
                    worst, std::abs(theta(theta00(), cplx(0.5, 0.5) + gamma, tau)) / std::max(1.0, e00));
                ++n;
            }
        }
        rep.add("theta.divisor_zeros", n, 0, 1e-10 * ts, worst);
    }
    {  // termwise derivative vs central finite difference
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.fd");
        Rng rng(seed);
        double worst = 0.0;
        const double h = 1e-6;
        const int n = 20;
        for (int s = 0; s < n; ++s) {
            const cplx z = rng.uniform_complex(-1.0, 1.0);
            for (const ThetaChar ch : {theta00(), theta11()}) {
                const cplx fd = (theta(ch, z + h, tau) - theta(ch, z - h, tau)) / (2.0 * h);
                worst = std::max(worst, std::abs(theta_deriv(ch, z, tau) - fd));
            }
        }
        rep.add("theta.deriv_finite_difference", n, seed, 1e-7 * ts, worst);
        // theta00 is even (derivative vanishes at 0), theta11 has a simple zero
        double parity = std::abs(theta_deriv(theta00(), 0.0, tau));
        if (std::abs(theta_deriv(theta11(), 0.0, tau)) < 1.0) parity = std::max(parity, 1.0);
        rep.add("theta.deriv_odd_even", 2, 0, 1e-10 * ts, parity);
    }
    {  // normalized theta against the 1-D multiplicator law
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.norm");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 20;
        for (int s = 0; s < n; ++s) {
            const cplx z = rng.uniform_complex(-1.0, 1.0);
            for (const ThetaChar ch : {theta00(), theta11()}) {
                const cplx a1 = std::exp(cplx(0.0, 2.0 * kPi) * ch.a.value());
                const cplx ai = std::exp(-cplx(0.0, 2.0 * kPi) * ch.b.value());
                const cplx base = normalized_theta(ch, z);
                const cplx e1 = a1 * std::exp(kPi * (z + 0.5));
                const cplx e2 = ai * std::exp(kPi * (-I * z + 0.5));
                worst = std::max(worst, std::abs(normalized_theta(ch, z + 1.0) / base - e1) / std::abs(e1));
                worst = std::max(worst, std::abs(normalized_theta(ch, z + I) / base - e2) / std::abs(e2));
            }
        }
        rep.add("theta.normalized_multiplicator", n, seed, 1e-10 * ts, worst);
    }
    {  // theta-quotient wp vs the truncated lattice sum
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.wp_oracle");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 20;
        int accepted = 0;
        while (accepted < n) {
            const cplx z = detail::draw_wp_safe(rng, k.lattice, 5e-2);
            const cplx a = wp(z, k);
            if (std::abs(a) < 0.5) continue;
            const cplx b = wp_lattice_sum(z, k.lattice, 60);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
            ++accepted;
        }
        rep.add("theta.wp_oracle_agreement", n, seed, 1e-3 * ts, worst);
    }
    {  // evenness, periodicity and the quarter-turn antisymmetry
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.wp_sym");
        Rng rng(seed);
        double weven = 0.0, wper = 0.0, wrot = 0.0;
        const int n = 20;
        for (int s = 0; s < n; ++s) {
            const cplx z = detail::draw_wp_safe(rng, k.lattice);
            const cplx p = wp(z, k);
            const double scale = 1.0 + std::abs(p);
            weven = std::max(weven, std::abs(wp(-z, k) - p) / scale);
            wper = std::max(wper, std::abs(wp(z + cplx(1.0, 2.0), k) - p) / scale);
            wrot = std::max(wrot, std::abs(wp(I * z, k) + p) / scale);
        }
        rep.add("theta.wp_even_periodic", n, seed, 1e-9 * ts, std::max(weven, wper));
        rep.add("theta.wp_quarter_turn", n, seed, 1e-9 * ts, wrot);
    }
    {  // wp'^2 = 4 wp (wp^2 - alpha^2)
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.wp_de");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 20;
        for (int s = 0; s < n; ++s) {
            const cplx z = detail::draw_wp_safe(rng, k.lattice);
            const cplx p = wp(z, k);
            const cplx dp = wp_prime_theta(z, k);
            const cplx rhs = 4.0 * p * (p * p - k.alpha * k.alpha);
            worst = std::max(worst, std::abs(dp * dp - rhs) / (1.0 + std::abs(rhs)));
        }
        rep.add("theta.wp_differential_equation", n, seed, 1e-6 * ts, worst);
    }
    {  // lattice-sum wp' against the theta route, and its sign convention
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.wp_prime");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 10;
        for (int s = 0; s < n; ++s) {
            const cplx z = detail::draw_wp_safe(rng, k.lattice);
            const cplx a = wp_prime(z, k.lattice, 60);
            const cplx b = wp_prime_theta(z, k);
            worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
        }
        rep.add("theta.wp_prime_oracle", n, seed, 1e-3 * ts, worst);
    }
    {  // addition formula
        const std::uint64_t seed = derive_seed(cfg.seed, "theta.addition");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        int accepted = 0;
        while (accepted < n) {
            const cplx x = detail::draw_wp_safe(rng, k.lattice);
            const cplx y = detail::draw_wp_safe(rng, k.lattice);
            if (detail::near_half_lattice(x + y, k.lattice, 2e-2)) continue;
            if (detail::near_half_lattice(x - y, k.lattice, 2e-2)) continue;
            const cplx px = wp(x, k), py = wp(y, k);
            if (std::abs(px - py) < 1e-2) continue;
            const cplx dx = wp_prime_theta(x, k), dy = wp_prime_theta(y, k);
            const cplx lhs = (px - py) * (px - py) * wp(x + y, k);
            const cplx rhs = 0.25 * (dx - dy) * (dx - dy) - (px + py) * (px - py) * (px - py);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
            ++accepted;
        }
        rep.add("theta.wp_addition_formula", n, seed, 1e-6 * ts, worst);
    }
    {  // constants: wp(1/2) = alpha = -wp(i/2), wp((1+i)/2) = 0, oracle match
        double worst = std::abs(wp(cplx(0.5, 0.0), k) - k.alpha);
        worst = std::max(worst, std::abs(wp(cplx(0.0, 0.5), k) + k.alpha));
        worst = std::max(worst, std::abs(wp(cplx(0.5, 0.5), k)));
        rep.add("theta.constants_half_periods", 3, 0, 1e-9 * ts, worst);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// hermitian suite: type law, Lattes condition, metric and lift identities

inline VerificationReport run_hermitian_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "hermitian";
    const LatticeConstants& k = verify_detail::constants();
    const double ts = cfg.tol_scale;
    const BundleType T5 = situation5_type(k);
    const Lattice2 L2(k.lattice);

    {  // semicharacter law for the situation-5 type and reference types
        double worst = semicharacter_law_check(T5);
        const HermitianForm Hid = HermitianForm::scalar(1.0);
        const BundleType Tid(Hid, induced_semicharacter(Hid, L2, {1.0, 1.0, 1.0, 1.0}), L2);
        worst = std::max(worst, semicharacter_law_check(Tid));
        const HermitianForm H0 = HermitianForm::scalar(0.0);
        const BundleType T0(H0, induced_semicharacter(H0, L2, {1.0, 1.0, 1.0, 1.0}), L2);
        worst = std::max(worst, semicharacter_law_check(T0));
        rep.add("hermitian.semicharacter_law", 3, 0, 1e-10 * ts, worst);
    }
    {  // measured semicharacter of the lift coordinates (all four generators = 1)
        double consistency = 0.0;
        const auto vals = measure_situation5_semicharacter(k, &consistency);
        double worst = consistency;
        for (const cplx& v : vals) worst = std::max(worst, std::abs(v - cplx(1.0, 0.0)));
        rep.add("hermitian.semicharacter_generators", 4, 0, 1e-8 * ts, worst);
    }
    for (int i = 1; i <= 3; ++i) {  // (H_D, alpha_D) = (2H, alpha^2)
        const auto r = check_lattes_condition(T5, {dilation(i), {0.0, 0.0}}, 2);
        rep.add("hermitian.lattes_condition_d" + std::to_string(i), 4, 0, 1e-9 * ts,
                std::max(r.h_residual, r.alpha_residual));
    }
    {  // (H_g, alpha_g) = (H, alpha) over the whole situation-5 group
        const FiniteGroup G = situation5_group();
        double worst = 0.0;
        for (const auto& g : G.elements) {
            const BundleType TP = pullback_type(T5, {g.A, g.t});
            worst = std::max(worst, (TP.H.M - T5.H.M).max_abs());
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(TP.alpha.gen[j] - T5.alpha.gen[j]));
        }
        rep.add("hermitian.group_type_invariance", static_cast<long>(G.order()), 0, 1e-9 * ts, worst);
    }
    {  // pullback functoriality on an affine pair
        const AffineEndo phi{dilation(2), {0.0, 0.0}};
        const AffineEndo psi{Mat2{0.0, 1.0, 1.0, 0.0}, {cplx(0.5, 0.5), cplx(0.5, 0.5)}};
        const BundleType lhs = pullback_type(T5, compose(phi, psi));
        const BundleType rhs = pullback_type(pullback_type(T5, phi), psi);
        double worst = (lhs.H.M - rhs.H.M).max_abs();
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(lhs.alpha.gen[j] - rhs.alpha.gen[j]));
        rep.add("hermitian.pullback_functoriality", 1, 0, 1e-9 * ts, worst);
    }
    {  // multiplicator cocycle and cross-check against normalized theta
        const std::uint64_t seed = derive_seed(cfg.seed, "hermitian.cocycle");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 25;
        const auto gens = lattice2_generators(L2);
        for (int s = 0; s < n; ++s) {
            const Vec2 x{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const Vec2 g1 = gens[static_cast<std::size_t>(rng.uniform_int(0, 3))];
            const Vec2 g2 = gens[static_cast<std::size_t>(rng.uniform_int(0, 3))];
            const cplx lhs = multiplicator(T5, g1 + g2, x);
            const cplx rhs = multiplicator(T5, g1, x + g2) * multiplicator(T5, g2, x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        rep.add("hermitian.multiplicator_cocycle", n, seed, 1e-9 * ts, worst);
    }
    {  // e_0 = 1
        rep.add("hermitian.multiplicator_identity", 1, 0, 1e-12 * ts,
                std::abs(multiplicator(T5, {0.0, 0.0}, {cplx(0.3, 0.1), cplx(-0.2, 0.7)}) - 1.0));
    }
    {  // metric invariance along the lattice action
        const std::uint64_t seed = derive_seed(cfg.seed, "hermitian.metric");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        const auto gens = lattice2_generators(L2);
        for (int s = 0; s < n; ++s) {
            const Vec2 x{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const cplx u = rng.uniform_complex(-1.0, 1.0);
            const Vec2 g = gens[static_cast<std::size_t>(rng.uniform_int(0, 3))];
            const double q0 = metric_q(T5, 1.0, x, u);
            const double q1 = metric_q(T5, 1.0, x + g, multiplicator(T5, g, x) * u);
            worst = std::max(worst, std::abs(q1 - q0) / q0);
        }
        rep.add("hermitian.metric_invariance", n, seed, 1e-10 * ts, worst);
    }
    {  // q o D = q^d with delta = 1 (tau = 0) for all three dilations
        const std::uint64_t seed = derive_seed(cfg.seed, "hermitian.qlift");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 100;
        for (int s = 0; s < n; ++s) {
            const Vec2 x{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const cplx u = rng.uniform_complex(-1.0, 1.0);
            for (int i = 1; i <= 3; ++i) {
                const AffineEndo D{dilation(i), {0.0, 0.0}};
                const double delta = delta_normalization(T5, D, 2);
                const auto [xd, ud] = lift_morphism(T5, D, 2, x, u);
                const double lhs = metric_q(T5, delta, xd, ud);
                const double rhs = std::pow(metric_q(T5, delta, x, u), 2);
                worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, rhs));
            }
        }
        rep.add("hermitian.metric_degree_two", n, seed, 1e-9 * ts, worst);
    }
    {  // delta normalization for an affine endomorphism with nonzero translation
        const AffineEndo D{Mat2::scalar(cplx(1.0, 1.0)), {cplx(0.5, 0.5), cplx(0.5, 0.5)}};
        const auto cond = check_lattes_condition(T5, D, 2);
        double worst = cond.ok ? 0.0 : 1.0;
        const double delta = delta_normalization(T5, D, 2);
        worst = std::max(worst, std::abs(delta - std::exp(-0.5 * kPi * T5.H.quad(D.t))));
        const std::uint64_t seed = derive_seed(cfg.seed, "hermitian.delta");
        Rng rng(seed);
        const int n = 50;
        for (int s = 0; s < n; ++s) {
            const Vec2 x{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const cplx u = rng.uniform_complex(-1.0, 1.0);
            const auto [xd, ud] = lift_morphism(T5, D, 2, x, u);
            const double lhs = metric_q(T5, delta, xd, ud);
            const double rhs = std::pow(metric_q(T5, delta, x, u), 2);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, rhs));
        }
        rep.add("hermitian.delta_normalization", n, seed, 1e-9 * ts, worst);
    }
    {  // lift equivariance e^{pi H(tau, A gamma)} e_gamma^d(x) = e_{A gamma}(phi x)
        const std::uint64_t seed = derive_seed(cfg.seed, "hermitian.equivariance");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        const auto gens = lattice2_generators(L2);
        const AffineEndo D{Mat2::scalar(cplx(1.0, 1.0)), {cplx(0.5, 0.5), cplx(0.5, 0.5)}};
        for (int s = 0; s < n; ++s) {
            const Vec2 x{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const Vec2 g = gens[static_cast<std::size_t>(rng.uniform_int(0, 3))];
            const Vec2 Ag = D.A.apply(g);
            const Vec2 phix = D.A.apply(x) + D.t;
            const cplx lhs = std::exp(kPi * T5.H.eval(D.t, Ag)) * cpow_int(multiplicator(T5, g, x), 2);
            const cplx rhs = multiplicator(T5, Ag, phix);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        rep.add("hermitian.lift_equivariance", n, seed, 1e-9 * ts, worst);
    }
    {  // epsilon0: equivariance identity and the two degenerate cases
        const Vec2 x0{cplx(0.25, 0.5), cplx(-0.125, 0.375)};
        const Vec2 t{cplx(0.01, -0.02), cplx(0.03, 0.004)};
        const Mat2 A = Mat2{0.0, 1.0, 1.0, 0.0};
        const Vec2 At = A.apply(t);
        const cplx lhs = epsilon0(x0, t, T5.H) / epsilon0(x0, At, T5.H);
        const cplx rhs = std::exp(-kPi * T5.H.eval(x0, t)) / std::exp(-kPi * T5.H.eval(x0, At));
        double worst = std::abs(lhs - rhs);
        worst = std::max(worst, std::abs(epsilon0(x0, {0.0, 0.0}, T5.H) - 1.0));
        worst = std::max(worst, std::abs(epsilon0({0.0, 0.0}, t, T5.H) - 1.0));
        rep.add("hermitian.epsilon0", 3, 0, 1e-12 * ts, worst);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// groups suite: enumerated orders, closure, unitarity, stabilizers, registry

inline VerificationReport run_groups_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "groups";
    const double ts = cfg.tol_scale;

    {  // orders against 2 m^2 / p
        double worst = 0.0;
        const int cases[5][2] = {{2, 1}, {3, 1}, {4, 1}, {6, 1}, {4, 2}};
        for (const auto& c : cases) {
            const FiniteGroup G = gmp2(c[0], c[1]);
            const long expect = 2L * c[0] * c[0] / c[1];
            worst = std::max(worst, std::abs(double(G.order()) - double(expect)));
        }
        rep.add("groups.gmp2_orders", 5, 0, 0.5, worst);
    }
    {  // S3 representation: order six, closed, contains the swap
        const FiniteGroup S = s3_rep();
        double worst = std::abs(double(S.order()) - 6.0);
        worst = std::max(worst, S.is_closed() ? 0.0 : 1.0);
        worst = std::max(worst, S.member({Mat2{0.0, 1.0, 1.0, 0.0}, {0.0, 0.0}}) ? 0.0 : 1.0);
        rep.add("groups.s3_representation", 6, 0, 0.5, worst);
    }
    {  // closure fixed point for the groups in play
        double worst = 0.0;
        worst = std::max(worst, gmp2(2, 1).is_closed() ? 0.0 : 1.0);
        worst = std::max(worst, gmp2(4, 2).is_closed() ? 0.0 : 1.0);
        worst = std::max(worst, situation5_group().is_closed() ? 0.0 : 1.0);
        rep.add("groups.closure_fixed_point", 3, 0, 0.5, worst);
    }
    {  // unitarity of the reflection groups for the standard form
        double worst = 0.0;
        const int cases[5][2] = {{2, 1}, {3, 1}, {4, 1}, {6, 1}, {4, 2}};
        for (const auto& c : cases)
            worst = std::max(worst, check_H_invariance(gmp2(c[0], c[1]),
                                                       HermitianForm::scalar(1.0), 5, cfg.seed));
        rep.add("groups.gmp2_unitarity", 5, cfg.seed, 1e-12 * ts, worst);
    }
    {  // the printed S3 matrices are not unitary for the standard form (reported)
        const double resid = check_H_invariance(s3_rep(), HermitianForm::scalar(1.0), 5, cfg.seed);
        rep.add("groups.s3_not_standard_unitary", 6, cfg.seed, 0.5, resid > 0.1 ? 0.0 : 1.0);
    }
    {  // situation-5 coset structure: order 32, linear parts in G(4,2,2), 2 cosets
        const FiniteGroup G5 = situation5_group();
        const FiniteGroup G422 = gmp2(4, 2);
        double worst = std::abs(double(G5.order()) - 32.0);
        int with_translation = 0;
        for (const auto& g : G5.elements) {
            if (!G422.member({g.A, {0.0, 0.0}})) worst = std::max(worst, 1.0);
            if (!g.is_linear()) ++with_translation;
        }
        worst = std::max(worst, std::abs(double(with_translation) - 16.0));
        const GroupElement tr{Mat2::identity(), {cplx(0.5, 0.5), cplx(0.5, 0.5)}};
        const GroupElement tr2 = G5.product(tr, tr);
        worst = std::max(worst, G5.element_equal(tr2, {Mat2::identity(), {0.0, 0.0}}) ? 0.0 : 1.0);
        rep.add("groups.situation5_structure", static_cast<long>(G5.order()), 0, 0.5, worst);
    }
    {  // reflections generate G(2,1,2)
        const FiniteGroup G = gmp2(2, 1);
        const auto refl = reflections(G);
        const FiniteGroup R = group_closure(refl, G.lattice);
        double worst = std::abs(double(R.order()) - double(G.order()));
        worst = std::max(worst, std::abs(double(refl.size()) - 4.0));
        rep.add("groups.reflections_generate", static_cast<long>(refl.size()), 0, 0.5, worst);
    }
    {  // point stabilizers: generic trivial, the origin keeps all linear parts
        const FiniteGroup G5 = situation5_group();
        const FiniteGroup s_gen = stabilizer_of_point(G5, {cplx(0.1234, 0.271), cplx(0.377, 0.141)});
        const FiniteGroup s_0 = stabilizer_of_point(G5, {0.0, 0.0});
        double worst = std::abs(double(s_gen.order()) - 1.0);
        worst = std::max(worst, std::abs(double(s_0.order()) - 16.0));
        worst = std::max(worst, s_0.is_closed() ? 0.0 : 1.0);
        rep.add("groups.point_stabilizers", 2, 0, 0.5, worst);
    }
    {  // line stabilizer of {(x, ix + (1+i)/2)}: order 2, the quoted generator
        const FiniteGroup G5 = situation5_group();
        const FiniteGroup stab = stabilizer_of_line(G5, {cplx(0.0, 1.0), cplx(0.5, 0.5)});
        double worst = std::abs(double(stab.order()) - 2.0);
        const Mat2 want{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
        bool found = false;
        for (const auto& e : stab.elements)
            if ((e.A - want).max_abs() <= 1e-9) found = true;
        worst = std::max(worst, found ? 0.0 : 1.0);
        worst = std::max(worst, stab.is_closed() ? 0.0 : 1.0);
        rep.add("groups.line_stabilizer", static_cast<long>(stab.order()), 0, 0.5, worst);
    }
    {  // reflection predicate spot checks
        double worst = 0.0;
        worst = std::max(worst, is_reflection({Mat2{0.0, 1.0, 1.0, 0.0}, {0.0, 0.0}}) ? 0.0 : 1.0);
        worst = std::max(worst, is_reflection({Mat2::identity(), {0.0, 0.0}}) ? 1.0 : 0.0);
        worst = std::max(worst, is_reflection({Mat2::scalar(-1.0), {0.0, 0.0}}) ? 1.0 : 0.0);
        rep.add("groups.reflection_predicate", 3, 0, 0.5, worst);
    }
    {  // registry: six entries, entry 5 reads "6 droites", entry 1 has order 8
        const auto reg = classification_registry();
        double worst = std::abs(double(reg.size()) - 6.0);
        worst = std::max(worst, reg[4].branch_locus == "6 droites" ? 0.0 : 1.0);
        worst = std::max(worst, std::abs(double(reg[0].build().order()) - 8.0));
        rep.add("groups.classification_registry", 6, 0, 0.5, worst);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// invariants suite: Flatto criterion, orbit constancy, singularity equations

inline VerificationReport run_invariants_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "invariants";
    const double ts = cfg.tol_scale;
    const InvariantBasis B = basis_g212();
    const FiniteGroup G = gmp2(2, 1);

    {  // Flatto: degree product equals the order, Jacobian nonzero generically
        double worst = std::abs(double(B.degree_product()) - double(G.order()));
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.flatto");
        Rng rng(seed);
        const Vec2 t{rng.uniform_complex(0.5, 1.5), rng.uniform_complex(-1.5, -0.5)};
        worst = std::max(worst, std::abs(check_jacobian_nonzero(B, t)) > 1e-6 ? 0.0 : 1.0);
        rep.add("invariants.flatto_criterion", 1, seed, 0.5, worst);
    }
    {  // invariance under G(2,1,2), non-invariance under G(4,1,2)
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.inv");
        const double good = check_invariance(B, G, 50, seed);
        rep.add("invariants.basis_invariance", 50, seed, 1e-10 * ts, good);
        const double bad = check_invariance(B, gmp2(4, 1), 50, seed);
        rep.add("invariants.basis_not_g412_invariant", 50, seed, 0.5, bad > 0.1 ? 0.0 : 1.0);
    }
    {  // orbit constancy of the chart
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.orbit");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 100;
        for (int s = 0; s < n; ++s) {
            const Vec2 t{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
            const Vec2 y = phi_eval(B, t);
            for (const auto& g : G.elements) {
                const Vec2 yg = phi_eval(B, g.A.apply(t));
                worst = std::max(worst, std::abs(yg[0] - y[0]) + std::abs(yg[1] - y[1]));
            }
        }
        rep.add("invariants.orbit_constancy", n, seed, 1e-10 * ts, worst);
    }
    {  // pullback identity of the singularity equation
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.pullback");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        for (int s = 0; s < n; ++s) {
            const Vec2 t{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
            const Vec2 th = phi_eval(B, t);
            const double lhs = singularity_lhs_g212(th[0], th[1]);
            worst = std::max(worst, std::abs(lhs - 2.0 * (std::norm(t[0]) + std::norm(t[1]))));
        }
        rep.add("invariants.singularity_pullback", n, seed, 1e-10 * ts, worst);
    }
    {  // branch independence of the square root
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.branch");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 25;
        for (int s = 0; s < n; ++s) {
            const cplx t1 = rng.uniform_complex(-1.0, 1.0), t2 = rng.uniform_complex(-1.0, 1.0);
            const cplx root = std::sqrt(t1 * t1 - 4.0 * t2);
            const double plus = std::abs(t1 + root) + std::abs(t1 - root);
            const double minus = std::abs(t1 - root) + std::abs(t1 + root);
            worst = std::max(worst, std::abs(plus - minus));
            worst = std::max(worst, std::abs(singularity_lhs_g212(t1, t2) - plus));
        }
        rep.add("invariants.branch_independence", n, seed, 1e-12 * ts, worst);
    }
    {  // one-dimensional chart |t^m|^{2/m} = |t|^2
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.1d");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 25;
        for (int s = 0; s < n; ++s) {
            const cplx t = rng.uniform_complex(-1.5, 1.5);
            for (const int m : {2, 3, 4, 6})
                worst = std::max(worst,
                                 std::abs(singularity_lhs_1d(cpow_int(t, m), m) - std::norm(t)));
        }
        rep.add("invariants.pullback_1d", n, seed, 1e-12 * ts, worst);
    }
    {  // chart defining value: orbit independence and t = 0
        const std::uint64_t seed = derive_seed(cfg.seed, "invariants.chart");
        Rng rng(seed);
        const HermitianForm H = HermitianForm::scalar(-1.0);
        double worst = 0.0;
        const int n = 25;
        for (int s = 0; s < n; ++s) {
            const Vec2 t{rng.uniform_complex(-0.5, 0.5), rng.uniform_complex(-0.5, 0.5)};
            const cplx w = rng.uniform_complex(-1.0, 1.0);
            const double base = boundary_defining_value(w, t, H);
            for (const auto& g : G.elements)
                worst = std::max(worst, std::abs(boundary_defining_value(w, g.A.apply(t), H) - base));
        }
        worst = std::max(worst, std::abs(boundary_defining_value(cplx(0.7, 0.3), {0.0, 0.0}, H) - 0.7));
        rep.add("invariants.boundary_chart_orbit", n, seed, 1e-10 * ts, worst);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// dynamics suite: wp identities, sigma forms, semi-conjugacy, orbit graphs

inline VerificationReport run_dynamics_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "dynamics";
    const LatticeConstants& k = verify_detail::constants();
    const double ts = cfg.tol_scale;

    for (int ident = 1; ident <= 3; ++ident) {  // the three wp identities
        const std::uint64_t seed = derive_seed(cfg.seed, "dynamics.wpid" + std::to_string(ident));
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        int accepted = 0;
        while (accepted < n) {
            const cplx x = detail::draw_wp_safe(rng, k.lattice);
            const cplx y = detail::draw_wp_safe(rng, k.lattice);
            if (ident >= 2) {
                if (detail::near_half_lattice(x + y, k.lattice, 2e-2)) continue;
                if (detail::near_half_lattice(x - y, k.lattice, 2e-2)) continue;
            } else {
                if (detail::near_half_lattice(x + cplx(0.0, 1.0) * x, k.lattice, 2e-2)) continue;
            }
            worst = std::max(worst, wp_identity(ident, x, y, k));
            ++accepted;
        }
        rep.add("dynamics.wp_identity_" + std::to_string(ident), n, seed, 1e-7 * ts, worst);
    }
    {  // sigma in theta form vs wp form
        const std::uint64_t seed = derive_seed(cfg.seed, "dynamics.sigma_forms");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 50;
        int accepted = 0;
        while (accepted < n) {
            const cplx x = detail::draw_wp_safe(rng, k.lattice);
            const cplx y = detail::draw_wp_safe(rng, k.lattice);
            worst = std::max(worst, proj_distance(sigma_theta(x, y, k), sigma_wp(x, y, k)));
            ++accepted;
        }
        rep.add("dynamics.sigma_theta_vs_wp", n, seed, 1e-7 * ts, worst);
    }
    {  // projective lattice invariance and coordinate swap symmetry of sigma
        const std::uint64_t seed = derive_seed(cfg.seed, "dynamics.sigma_sym");
        Rng rng(seed);
        double winv = 0.0, wswap = 0.0;
        const int n = 20;
        for (int s = 0; s < n; ++s) {
            const cplx x = detail::draw_wp_safe(rng, k.lattice);
            const cplx y = detail::draw_wp_safe(rng, k.lattice);
            const cplx g1 = cplx(rng.uniform_int(-2, 2), rng.uniform_int(-2, 2));
            const cplx g2 = cplx(rng.uniform_int(-2, 2), rng.uniform_int(-2, 2));
            winv = std::max(winv, proj_distance(sigma_theta(x + g1, y + g2, k), sigma_theta(x, y, k)));
            wswap = std::max(wswap, proj_distance(sigma_theta(x, y, k), sigma_theta(y, x, k)));
        }
        rep.add("dynamics.sigma_lattice_invariance", n, seed, 1e-8 * ts, winv);
        rep.add("dynamics.sigma_swap_symmetry", n, seed, 1e-10 * ts, wswap);
    }
    for (int i = 1; i <= 3; ++i) {  // Prop 5.2 semi-conjugacies
        const std::uint64_t seed = derive_seed(cfg.seed, "dynamics.semiconj" + std::to_string(i));
        const int n = std::max(cfg.samples, 100);
        const double worst = check_semiconjugacy(i, k, n, seed);
        rep.add("dynamics.semiconjugacy_f" + std::to_string(i), n, seed, 1e-6 * ts, worst);
    }
    {  // homogeneity of the built-in maps
        const std::uint64_t seed = derive_seed(cfg.seed, "dynamics.homog");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 20;
        for (const MapId id : {MapId::F1, MapId::F2, MapId::F3, MapId::G, MapId::Power}) {
            const HomogeneousMap F = builtin_map(id);
            for (int s = 0; s < n; ++s) {
                const Vec3 z{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0),
                             rng.uniform_complex(-1.0, 1.0)};
                const cplx lam = rng.uniform_complex(0.5, 1.5);
                const Vec3 a = F.eval(lam * z);
                const Vec3 b = cpow_int(lam, F.degree) * F.eval(z);
                const double scale = std::max(1e-12, max_abs(b));
                worst = std::max(worst, max_abs(a + cplx(-1.0) * b) / scale);
            }
        }
        rep.add("dynamics.map_homogeneity", n, seed, 1e-10 * ts, worst);
    }
    {  // critical line tables verify by sampled Jacobian vanishing
        double worst = 0.0;
        try {
            for (const MapId id : {MapId::F1, MapId::F2, MapId::F3, MapId::G, MapId::Power})
                critical_lines(id);
        } catch (const std::exception&) {
            worst = 1.0;
        }
        rep.add("dynamics.critical_lines_verified", 5, 0, 0.5, worst);
    }
    {  // the post-critical diagram of g: all eight arrows, six post-critical lines
        const PostCriticalGraph g = post_critical_graph(MapId::G);
        double worst = g.closed ? 0.0 : 1.0;
        worst = std::max(worst, std::abs(double(g.post_critical_count()) - 6.0));
        const std::pair<const char*, const char*> arrows[8] = {
            {"{X=0}", "{Z=0}"}, {"{Z=0}", "{Y=Z}"}, {"{Y=Z}", "{X=Y}"}, {"{X=Y}", "{X=Z}"},
            {"{X=Z}", "{Y=Z}"}, {"{X=2Y}", "{X=0}"}, {"{X=2Z}", "{Y=0}"}, {"{Y=0}", "{X=Z}"},
        };
        int found = 0;
        for (const auto& [from, to] : arrows) {
            for (std::size_t nidx = 0; nidx < g.nodes.size(); ++nidx) {
                if (line_name(g.nodes[nidx]) == from && g.edge_to[nidx] >= 0 &&
                    line_name(g.nodes[static_cast<std::size_t>(g.edge_to[nidx])]) == to)
                    ++found;
            }
        }
        worst = std::max(worst, std::abs(double(found) - 8.0));
        // every resolved node has out-degree exactly one by construction
        rep.add("dynamics.postcritical_g_diagram", 8, 0, 0.5, worst);
    }
    {  // f1, f2, f3 are critically finite at line level
        double worst = 0.0;
        for (const MapId id : {MapId::F1, MapId::F2, MapId::F3}) {
            const PostCriticalGraph g = post_critical_graph(id);
            if (!g.closed) worst = 1.0;
        }
        rep.add("dynamics.postcritical_f_closed", 3, 0, 0.5, worst);
    }
    {  // obstruction report for g: counts and the stabilizer ingredients
        const LattesObstructionReport r = lattes_obstruction_report(MapId::G, k);
        double worst = std::abs(double(r.post_critical_lines) - 6.0);
        worst = std::max(worst, r.candidate_entries == std::vector<int>{5} ? 0.0 : 1.0);
        worst = std::max(worst, std::abs(double(r.candidate_line_stabilizer_order) - 2.0));
        const Mat2 want{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
        worst = std::max(worst, (r.stabilizer_generator - want).max_abs() <= 1e-9 ? 0.0 : 1.0);
        worst = std::max(worst, r.critical_on_X0 ? 0.0 : 1.0);
        rep.add("dynamics.obstruction_report_g", 1, 0, 0.5, worst);
    }
    {  // branch locus of sigma: six lines containing the f1 post-critical set
        const std::vector<ProjLine> branch = situation5_branch_lines(k);
        double worst = std::abs(double(branch.size()) - 6.0);
        const LattesObstructionReport r = lattes_obstruction_report(MapId::F1, k);
        worst = std::max(worst, r.post_critical_inside_branch ? 0.0 : 1.0);
        rep.add("dynamics.branch_locus_lines", static_cast<long>(branch.size()), 0, 0.5, worst);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// green suite: oracle, functional equations, calibration, profile, boundary

inline VerificationReport run_green_suite(const VerifyConfig& cfg) {
    verify_detail::Timer timer;
    VerificationReport rep;
    rep.suite = "green";
    const LatticeConstants& k = verify_detail::constants();
    const double ts = cfg.tol_scale;
    GreenParams params;
    params.max_iters = cfg.p_max;

    {  // exact closed form on the power map
        const std::uint64_t seed = derive_seed(cfg.seed, "green.power");
        Rng rng(seed);
        const HomogeneousMap P = map_power();
        double worst = 0.0;
        const int n = 100;
        for (int s = 0; s < n; ++s) {
            Vec3 z{rng.uniform_complex(-3.0, 3.0), rng.uniform_complex(-3.0, 3.0),
                   rng.uniform_complex(-3.0, 3.0)};
            if (max_abs(z) < 1e-3) z[0] += 1.0;
            worst = std::max(worst, std::abs(green(P, z, params).value - std::log(max_abs(z))));
        }
        rep.add("green.power_oracle", n, seed, 1e-12 * ts, worst);
    }
    {  // homogeneity and the functional equation on the f1 lift
        const std::uint64_t seed = derive_seed(cfg.seed, "green.funceq");
        Rng rng(seed);
        const HomogeneousMap F = integer_lift(1);
        double whom = 0.0, wfun = 0.0;
        const int n = 100;
        for (int s = 0; s < n; ++s) {
            Vec3 z{rng.uniform_complex(-2.0, 2.0), rng.uniform_complex(-2.0, 2.0),
                   rng.uniform_complex(-2.0, 2.0)};
            if (max_abs(z) < 1e-3) z[2] += 1.0;
            const cplx lam = rng.uniform_complex(0.5, 2.0);
            const double g0 = green(F, z, params).value;
            whom = std::max(whom, std::abs(green(F, lam * z, params).value - g0 - std::log(std::abs(lam))));
            wfun = std::max(wfun, std::abs(green(F, F.eval(z), params).value - 2.0 * g0));
        }
        rep.add("green.homogeneity", n, seed, 1e-9 * ts, whom);
        rep.add("green.functional_equation", n, seed, 1e-9 * ts, wfun);
    }
    {  // Cauchy gap decay ratio around 1/d (reported with a loose band)
        const HomogeneousMap F = integer_lift(1);
        GreenParams full = params;
        full.stop_gap = 0.0;
        const GreenResult r = green(F, {cplx(0.9, 0.4), cplx(-0.2, 1.1), cplx(0.5, -0.7)}, full, true);
        std::vector<double> ratios;
        for (std::size_t p = 10; p + 1 < r.gap_history.size(); ++p)
            if (r.gap_history[p] > 1e-300)
                ratios.push_back(r.gap_history[p + 1] / r.gap_history[p]);
        std::sort(ratios.begin(), ratios.end());
        const double med = ratios.empty() ? 0.0 : ratios[ratios.size() / 2];
        rep.add("green.gap_decay_ratio", static_cast<long>(ratios.size()), 0, 0.2, std::abs(med - 0.5));
    }
    // calibration per dilation
    std::array<CalibrationResult, 4> cals;
    for (int i = 1; i <= 3; ++i) {
        const std::uint64_t seed = derive_seed(cfg.seed, "green.calib" + std::to_string(i));
        cals[i] = calibrate_lift(i, k, 50, seed);
        rep.add("green.calibration_spread_f" + std::to_string(i), 50, seed, 1e-6 * ts, cals[i].spread);
    }
    {  // the calibration ratio is Gamma^2-periodic
        const std::uint64_t seed = derive_seed(cfg.seed, "green.calibper");
        Rng rng(seed);
        const HomogeneousMap F = integer_lift(1);
        const Mat2 D = dilation(1);
        double worst = 0.0;
        const int n = 10;
        int accepted = 0;
        while (accepted < n) {
            const cplx x = rng.uniform_complex(0.0, 1.0), y = rng.uniform_complex(0.0, 1.0);
            const cplx g1 = cplx(rng.uniform_int(-1, 1), rng.uniform_int(-1, 1));
            const cplx g2 = cplx(rng.uniform_int(-1, 1), rng.uniform_int(-1, 1));
            auto ratio_at = [&](cplx xx, cplx yy) -> cplx {
                const Vec3 L = sigma_lift(xx, yy, k);
                const Vec3 FL = F.eval(L);
                const Vec2 d = D.apply({xx, yy});
                const Vec3 LD = sigma_lift(d[0], d[1], k);
                if (std::abs(FL[0]) < 1e-8 * max_abs(FL)) return cplx(0.0, 0.0);
                return LD[0] / FL[0];
            };
            const cplx r0 = ratio_at(x, y);
            const cplx r1 = ratio_at(x + g1, y + g2);
            if (r0 == cplx(0.0, 0.0) || r1 == cplx(0.0, 0.0)) continue;
            worst = std::max(worst, std::abs(r1 - r0) / std::abs(r0));
            ++accepted;
        }
        rep.add("green.calibration_periodicity", n, seed, 1e-6 * ts, worst);
    }
    {  // rescaling by c makes the lift relation exact
        const std::uint64_t seed = derive_seed(cfg.seed, "green.calibres");
        Rng rng(seed);
        double worst = 0.0;
        const int n = 20;
        for (int i = 1; i <= 3; ++i) {
            const HomogeneousMap Fc = integer_lift(i).scaled(cals[i].c);
            const Mat2 D = dilation(i);
            int accepted = 0;
            while (accepted < n) {
                const cplx x = rng.uniform_complex(0.0, 1.0), y = rng.uniform_complex(0.0, 1.0);
                const Vec3 L = sigma_lift(x, y, k);
                const Vec2 d = D.apply({x, y});
                const Vec3 LD = sigma_lift(d[0], d[1], k);
                const Vec3 FL = Fc.eval(L);
                const double scale = max_abs(LD);
                if (scale < 1e-12) continue;
                worst = std::max(worst, max_abs(FL + cplx(-1.0) * LD) / scale);
                ++accepted;
            }
        }
        rep.add("green.calibration_rescaled", 3 * n, seed, 1e-6 * ts, worst);
    }
    // profile fits
    std::array<ProfileFit, 4> fits;
    for (int i = 1; i <= 3; ++i) {
        const std::uint64_t seed = derive_seed(cfg.seed, "green.profile" + std::to_string(i));
        fits[i] = green_profile_check(i, k, std::max(cfg.samples, 100), seed, params);
        rep.add("green.profile_residual_f" + std::to_string(i), std::max(cfg.samples, 100), seed,
                1e-4 * ts, fits[i].max_residual);
        rep.add("green.profile_intercept_f" + std::to_string(i), std::max(cfg.samples, 100), seed,
                1e-4 * ts, std::abs(fits[i].C));
        rep.add("green.profile_lambda_positive_f" + std::to_string(i), std::max(cfg.samples, 100),
                seed, 0.5, fits[i].lambda > 0.0 ? 0.0 : 1.0);
    }
    {  // the fitted lambda agrees across the three dilations
        const double spread = std::max({std::abs(fits[1].lambda - fits[2].lambda),
                                        std::abs(fits[1].lambda - fits[3].lambda),
                                        std::abs(fits[2].lambda - fits[3].lambda)});
        rep.add("green.profile_lambda_consistent", 3, 0, 1e-4 * ts, spread);
    }
    {  // boundary samples sit on {G = 0}; scaling moves G by log 2
        const std::uint64_t seed = derive_seed(cfg.seed, "green.boundary");
        Rng rng(seed);
        const HomogeneousMap F1c = integer_lift(1).scaled(cals[1].c);
        double worst = 0.0, wscale = 0.0;
        const int n = 50;
        int accepted = 0;
        while (accepted < n) {
            const Vec2 x{rng.uniform_complex(0.0, 1.0), rng.uniform_complex(0.0, 1.0)};
            Vec3 z;
            try {
                z = boundary_sample(1, k, fits[1].lambda, x);
            } catch (const degenerate_orbit_error&) {
                continue;
            }
            const double g0 = green(F1c, z, params).value;
            worst = std::max(worst, std::abs(g0));
            wscale = std::max(wscale, std::abs(green(F1c, 2.0 * z, params).value - g0 - std::log(2.0)));
            ++accepted;
        }
        rep.add("green.boundary_zero", n, seed, 1e-4 * ts, worst);
        rep.add("green.boundary_scaling", n, seed, 1e-4 * ts, wscale);
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"theta", "hermitian", "groups", "invariants", "dynamics", "green"};
}

inline VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "theta") return run_theta_suite(cfg);
    if (name == "hermitian") return run_hermitian_suite(cfg);
    if (name == "groups") return run_groups_suite(cfg);
    if (name == "invariants") return run_invariants_suite(cfg);
    if (name == "dynamics") return run_dynamics_suite(cfg);
    if (name == "green") return run_green_suite(cfg);
    if (name == "all") {
        VerificationReport rep;
        rep.suite = "all";
        for (const std::string& s : suite_names()) rep.merge(run_suite(s, cfg));
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace lattes
