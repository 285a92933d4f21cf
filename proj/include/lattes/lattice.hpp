#pragma once

// Rank-2 lattices Z + tau*Z in the complex plane, their squares, membership
// tests and reduction to the half-open fundamental parallelogram based at 0.

#include <cmath>

#include "lattes/core.hpp"

namespace lattes {

struct Lattice {
    cplx tau;

    explicit Lattice(cplx t) : tau(t) {
        if (!(tau.imag() > 0.0)) throw std::invalid_argument("Lattice: Im(tau) must be > 0");
    }

    cplx point(long m, long n) const { return cplx(double(m), 0.0) + double(n) * tau; }
};

inline Lattice gaussian_lattice() { return Lattice(cplx(0.0, 1.0)); }

// Product lattice Gamma x Gamma in C^2; both factors share tau.
struct Lattice2 {
    Lattice component;

    explicit Lattice2(Lattice l) : component(l) {}
    explicit Lattice2(cplx tau) : component(Lattice(tau)) {}
};

struct ReduceResult {
    cplx z0;     // representative in {s + t*tau : 0 <= s,t < 1}
    cplx gamma;  // z - z0, an exact integer combination m + n*tau
    long m = 0;
    long n = 0;
};

// Writes z = s + t*tau with real s,t by solving the 2x2 real system.
inline void lattice_coordinates(cplx z, const Lattice& L, double& s, double& t) {
    t = z.imag() / L.tau.imag();
    s = z.real() - t * L.tau.real();
}

inline ReduceResult reduce(cplx z, const Lattice& L) {
    double s = 0.0, t = 0.0;
    lattice_coordinates(z, L, s, t);
    ReduceResult r;
    r.m = static_cast<long>(std::floor(s));
    r.n = static_cast<long>(std::floor(t));
    r.gamma = L.point(r.m, r.n);
    r.z0 = z - r.gamma;
    // Guard against s or t landing an ulp below an integer: fold a
    // representative that rounded to the far edge back to the base edge.
    double s0 = 0.0, t0 = 0.0;
    lattice_coordinates(r.z0, L, s0, t0);
    if (s0 >= 1.0) {
        r.m += 1;
        r.gamma += 1.0;
        r.z0 -= 1.0;
    }
    if (t0 >= 1.0) {
        r.n += 1;
        r.gamma += L.tau;
        r.z0 -= L.tau;
    }
    return r;
}

// True iff gamma is within tol of some lattice point m + n*tau.
inline bool contains(cplx gamma, const Lattice& L, double tol = 1e-9) {
    double s = 0.0, t = 0.0;
    lattice_coordinates(gamma, L, s, t);
    const double m = std::round(s);
    const double n = std::round(t);
    return std::abs(gamma - (cplx(m, 0.0) + n * L.tau)) <= tol;
}

// Nearest lattice point coefficients (used by multiplicators and theta reduction).
struct LatticeCoeffs {
    long m = 0;
    long n = 0;
    double error = 0.0;  // distance to the rounded lattice point
};

inline LatticeCoeffs nearest_coeffs(cplx gamma, const Lattice& L) {
    double s = 0.0, t = 0.0;
    lattice_coordinates(gamma, L, s, t);
    LatticeCoeffs c;
    c.m = static_cast<long>(std::llround(s));
    c.n = static_cast<long>(std::llround(t));
    c.error = std::abs(gamma - L.point(c.m, c.n));
    return c;
}

// Equality of two points of the torus C^2 / Gamma^2.
inline bool torus_equal(const Vec2& x, const Vec2& y, const Lattice2& L2, double tol = 1e-9) {
    return contains(x[0] - y[0], L2.component, tol) && contains(x[1] - y[1], L2.component, tol);
}

// Componentwise reduction of a point of C^2 to the fundamental cell (canonical
// representative used when comparing translations modulo Gamma^2).
inline Vec2 reduce2(const Vec2& x, const Lattice2& L2) {
    return {reduce(x[0], L2.component).z0, reduce(x[1], L2.component).z0};
}

}  // namespace lattes
