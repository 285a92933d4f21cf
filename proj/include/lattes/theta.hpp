#pragma once

// Riemann theta functions with characteristics, their normalized variants on
// the Gaussian lattice, the Weierstrass wp function in theta-quotient and
// lattice-sum form, and the constants alpha, c tying the two together.

#include <cmath>
#include <cstdint>
#include <numeric>

#include "lattes/core.hpp"
#include "lattes/lattice.hpp"

namespace lattes {

// Exact rational characteristic (the half-integers j/2, k/2 in theta_{jk}).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

struct ThetaChar {
    Rational a;
    Rational b;
};

inline ThetaChar theta_char(int j, int k) { return {Rational(j, 2), Rational(k, 2)}; }
inline ThetaChar theta00() { return theta_char(0, 0); }
inline ThetaChar theta11() { return theta_char(1, 1); }

namespace detail {

constexpr int kThetaHardCap = 64;

// Truncation index from the Gaussian tail bound at the reduced argument.
inline int theta_truncation(double a, double im_z, double im_tau, double tol) {
    const double t = im_tau;
    const double y = std::abs(im_z);
    const double L = -std::log(std::min(tol, 0.1));
    const double R = (y + std::sqrt(y * y + t * L / kPi)) / t;
    const int N = static_cast<int>(std::ceil(R + std::abs(a))) + 2;
    return N;
}

struct ThetaSeries {
    cplx value;
    cplx deriv;
};

// Plain series at an already reduced argument; also returns d/dz termwise.
inline ThetaSeries theta_series(const ThetaChar& ch, cplx z, cplx tau, double tol) {
    if (!(tau.imag() > 0.0)) throw convergence_error("theta: Im(tau) must be > 0");
    const double a = ch.a.value();
    const double b = ch.b.value();
    const int N = theta_truncation(a, z.imag(), tau.imag(), tol);
    if (N > kThetaHardCap)
        throw convergence_error("theta: truncation index exceeds hard cap (argument too large?)");
    const cplx ipi(0.0, kPi);
    ThetaSeries out{0.0, 0.0};
    for (int n = -N; n <= N; ++n) {
        const double na = n + a;
        const cplx expo = ipi * tau * (na * na) + 2.0 * ipi * na * (z + b);
        const cplx term = std::exp(expo);
        out.value += term;
        out.deriv += 2.0 * ipi * na * term;
    }
    return out;
}

// Quasi-periodicity factor E with theta(z0 + m + n*tau) = E * theta(z0):
//   E = exp(2*i*pi*(a*m - b*n) - i*pi*tau*n^2 - 2*i*pi*n*z0)
inline cplx quasi_periodicity_factor(const ThetaChar& ch, cplx z0, cplx tau, long m, long n) {
    const cplx ipi(0.0, kPi);
    const double am = ch.a.value() * static_cast<double>(m);
    const double bn = ch.b.value() * static_cast<double>(n);
    const double nn = static_cast<double>(n);
    return std::exp(2.0 * ipi * (am - bn) - ipi * tau * (nn * nn) - 2.0 * ipi * nn * z0);
}

}  // namespace detail

// theta[a,b](z | tau) = sum_n exp(i*pi*tau*(n+a)^2 + 2*i*pi*(n+a)*(z+b)).
// The argument is reduced modulo Z + tau*Z first and the exact quasi-periodicity
// factor reapplied, so the series itself only ever runs over a handful of terms.
inline cplx theta(const ThetaChar& ch, cplx z, cplx tau, double tol = 1e-14) {
    if (!(tau.imag() > 0.0)) throw convergence_error("theta: Im(tau) must be > 0");
    const ReduceResult r = reduce(z, Lattice(tau));
    const cplx E = detail::quasi_periodicity_factor(ch, r.z0, tau, r.m, r.n);
    return E * detail::theta_series(ch, r.z0, tau, tol).value;
}

// d/dz theta[a,b](z | tau), termwise differentiated with the same reduction.
inline cplx theta_deriv(const ThetaChar& ch, cplx z, cplx tau, double tol = 1e-14) {
    if (!(tau.imag() > 0.0)) throw convergence_error("theta: Im(tau) must be > 0");
    const ReduceResult r = reduce(z, Lattice(tau));
    const cplx E = detail::quasi_periodicity_factor(ch, r.z0, tau, r.m, r.n);
    const detail::ThetaSeries s = detail::theta_series(ch, r.z0, tau, tol);
    // theta(z) = E(z0) * theta(z0) with z0 = z - gamma, dE/dz = -2*i*pi*n*E.
    const cplx ipi(0.0, kPi);
    return E * (s.deriv - 2.0 * ipi * static_cast<double>(r.n) * s.value);
}

// Normalized theta on the Gaussian lattice: exp(pi*z^2/2) * theta[a,b](z | i).
// Satisfies f(z+gamma) = e_gamma(z) * f(z) with the multiplicators of the type
// H(z,w) = conj(z)*w, alpha(1) = exp(2*i*pi*a), alpha(i) = exp(-2*i*pi*b).
inline cplx normalized_theta(const ThetaChar& ch, cplx z, double tol = 1e-14) {
    return std::exp(0.5 * kPi * z * z) * theta(ch, z, cplx(0.0, 1.0), tol);
}

// ---------------------------------------------------------------------------
// Weierstrass wp on the Gaussian lattice

struct LatticeConstants {
    cplx alpha;  // wp' ^2 = 4*wp*(wp^2 - alpha^2)
    cplx c;      // wp = c * theta00^2 / theta11^2
    Lattice lattice;
};

inline constexpr double kPoleGuardRadius = 1e-6;

namespace detail {

// Distance from a reduced point to the nearest corner of the fundamental cell.
inline double pole_distance(cplx z0, const Lattice& L) {
    double d = std::abs(z0);
    d = std::min(d, std::abs(z0 - 1.0));
    d = std::min(d, std::abs(z0 - L.tau));
    d = std::min(d, std::abs(z0 - 1.0 - L.tau));
    return d;
}

}  // namespace detail

// wp as the theta quotient c * theta00(z)^2 / theta11(z)^2 (exponentially
// convergent; the lattice sum below is only the cross-check oracle).
inline cplx wp(cplx z, const LatticeConstants& consts, double tol = 1e-14) {
    const ReduceResult r = reduce(z, consts.lattice);
    if (detail::pole_distance(r.z0, consts.lattice) < kPoleGuardRadius)
        throw pole_error("wp: argument within pole guard radius of a lattice point");
    const cplx t00 = theta(theta00(), r.z0, consts.lattice.tau, tol);
    const cplx t11 = theta(theta11(), r.z0, consts.lattice.tau, tol);
    return consts.c * (t00 * t00) / (t11 * t11);
}

// d/dz of the theta quotient (used where the loose lattice sum is too coarse).
inline cplx wp_prime_theta(cplx z, const LatticeConstants& consts, double tol = 1e-14) {
    const ReduceResult r = reduce(z, consts.lattice);
    if (detail::pole_distance(r.z0, consts.lattice) < kPoleGuardRadius)
        throw pole_error("wp: argument within pole guard radius of a lattice point");
    const cplx tau = consts.lattice.tau;
    const cplx t00 = theta(theta00(), r.z0, tau, tol);
    const cplx t11 = theta(theta11(), r.z0, tau, tol);
    const cplx d00 = theta_deriv(theta00(), r.z0, tau, tol);
    const cplx d11 = theta_deriv(theta11(), r.z0, tau, tol);
    return consts.c * 2.0 * t00 * (d00 * t11 - t00 * d11) / (t11 * t11 * t11);
}

// Classical truncated sum 1/z^2 + sum' [1/(z-w)^2 - 1/w^2] over |m|,|n| <= radius.
// The symmetric window cancels the odd tail, leaving O(1/radius^2) error; used
// only as an independent oracle at loose tolerance.
inline cplx wp_lattice_sum(cplx z, const Lattice& L, int radius) {
    if (radius < 20) throw std::invalid_argument("wp_lattice_sum: radius must be >= 20");
    // centered reduction keeps |z| small relative to the window
    ReduceResult r = reduce(z, L);
    cplx z0 = r.z0;
    double s = 0.0, t = 0.0;
    lattice_coordinates(z0, L, s, t);
    if (s >= 0.5) z0 -= 1.0;
    if (t >= 0.5) z0 -= L.tau;
    if (std::abs(z0) < kPoleGuardRadius)
        throw pole_error("wp_lattice_sum: argument within pole guard radius of a lattice point");
    cplx acc = 1.0 / (z0 * z0);
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -radius; n <= radius; ++n) {
            if (m == 0 && n == 0) continue;
            const cplx w = L.point(m, n);
            const cplx dz = z0 - w;
            acc += 1.0 / (dz * dz) - 1.0 / (w * w);
        }
    }
    return acc;
}

// Truncated -2 * sum 1/(z-w)^3; sign convention wp'(z) ~ -2/z^3 near 0.
inline cplx wp_prime(cplx z, const Lattice& L, int radius) {
    if (radius < 20) throw std::invalid_argument("wp_prime: radius must be >= 20");
    ReduceResult r = reduce(z, L);
    cplx z0 = r.z0;
    double s = 0.0, t = 0.0;
    lattice_coordinates(z0, L, s, t);
    if (s >= 0.5) z0 -= 1.0;
    if (t >= 0.5) z0 -= L.tau;
    if (std::abs(z0) < kPoleGuardRadius)
        throw pole_error("wp_prime: argument within pole guard radius of a lattice point");
    cplx acc = 0.0;
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -radius; n <= radius; ++n) {
            const cplx dz = z0 - L.point(m, n);
            acc += 1.0 / (dz * dz * dz);
        }
    }
    return -2.0 * acc;
}

// c from matching the 1/z^2 principal part of wp against the double zero of
// theta11^2 at 0, and alpha = wp(1/2). Gaussian lattice only.
inline LatticeConstants compute_constants(const Lattice& L, double tol = 1e-14) {
    if (std::abs(L.tau - cplx(0.0, 1.0)) > 1e-12)
        throw std::invalid_argument("compute_constants: only tau = i is supported");
    LatticeConstants consts{0.0, 0.0, L};
    const cplx d11 = theta_deriv(theta11(), 0.0, L.tau, tol);
    const cplx t00 = theta(theta00(), 0.0, L.tau, tol);
    consts.c = (d11 * d11) / (t00 * t00);
    consts.alpha = wp(cplx(0.5, 0.0), consts, tol);
    return consts;
}

}  // namespace lattes
