#pragma once

// Line-bundle types (H, alpha) on the square torus lattice: semicharacter law,
// multiplicators, pullback under affine endomorphisms, the degree-d lift
// compatibility condition, the bundle metric q and its delta normalization.
//
// Sign convention, fixed once for the whole library: a BundleType stores the
// form governing the growth of its normalized theta sections. For the
// situation-5 covering this is the positive-definite form 4*Id (the negative
// of the basin form); every formula below is written for the stored form and
// holds verbatim for either sign.

#include <array>
#include <cmath>

#include "lattes/core.hpp"
#include "lattes/lattice.hpp"

namespace lattes {

struct HermitianForm {
    Mat2 M;  // evaluation H(w, w') = conj(w)^T M w', linear in the second slot

    explicit HermitianForm(Mat2 m) : M(m) {
        if ((M - M.adjoint()).max_abs() > 1e-12)
            throw std::invalid_argument("HermitianForm: matrix is not Hermitian");
    }

    static HermitianForm scalar(double lambda) { return HermitianForm(Mat2::scalar(lambda)); }

    cplx eval(const Vec2& w, const Vec2& wp) const {
        const Vec2 mv = M.apply(wp);
        return std::conj(w[0]) * mv[0] + std::conj(w[1]) * mv[1];
    }

    double quad(const Vec2& w) const { return eval(w, w).real(); }
};

// The four generators of Gamma^2 = (Z + tau Z)^2.
inline std::array<Vec2, 4> lattice2_generators(const Lattice2& L2) {
    const cplx tau = L2.component.tau;
    return {Vec2{1.0, 0.0}, Vec2{tau, 0.0}, Vec2{0.0, 1.0}, Vec2{0.0, tau}};
}

// Semicharacter alpha: Gamma^2 -> S^1, stored by its generator values together
// with the integral pairing E_jk = Im H(g_j, g_k) used by the cocycle
// extension. Keeping the pairing on the object makes an inconsistent (alpha, H)
// combination detectable by semicharacter_law_check instead of silently
// self-consistent.
struct Semicharacter {
    std::array<cplx, 4> gen;
    std::array<std::array<long, 4>, 4> pairing{};

    // alpha(sum_j n_j g_j) via the cocycle law; exact integer arithmetic in the
    // sign, so lattice points may be arbitrarily deep.
    cplx value_from_coeffs(const std::array<long, 4>& n) const {
        cplx v = 1.0;
        long sign_exp = 0;
        for (int j = 0; j < 4; ++j) {
            v *= ipow(gen[j], n[j]);
            for (int k = j + 1; k < 4; ++k) sign_exp += n[j] * n[k] * pairing[j][k];
        }
        if (sign_exp % 2 != 0) v = -v;
        return v;
    }

    // integer power of a unit-modulus value (negative exponents via conjugate)
    static cplx ipow(cplx a, long n) {
        if (n < 0) {
            a = std::conj(a);
            n = -n;
        }
        return cpow_int(a, n);
    }
};

// Semicharacter with its extension pairing induced by H (the consistent way to
// build one).
inline Semicharacter induced_semicharacter(const HermitianForm& H, const Lattice2& L2,
                                           const std::array<cplx, 4>& gen_values) {
    Semicharacter a;
    for (const cplx& v : gen_values)
        if (std::abs(std::abs(v) - 1.0) > 1e-12)
            throw std::invalid_argument("semicharacter: generator value is not unit modulus");
    a.gen = gen_values;
    const auto g = lattice2_generators(L2);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const double e = H.eval(g[j], g[k]).imag();
            const long r = std::lround(e);
            if (std::abs(e - static_cast<double>(r)) > 1e-9)
                throw std::invalid_argument("semicharacter: Im H not integral on generators");
            a.pairing[j][k] = r;
        }
    }
    return a;
}

struct BundleType {
    HermitianForm H;
    Semicharacter alpha;
    Lattice2 lattice;

    BundleType(HermitianForm h, Semicharacter a, Lattice2 l) : H(h), alpha(a), lattice(l) {
        // integrality of Im H on the 4 generators is part of being a type
        const auto g = lattice2_generators(lattice);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const double e = H.eval(g[j], g[k]).imag();
                if (std::abs(e - std::round(e)) > 1e-9)
                    throw std::invalid_argument("BundleType: Im H(Gamma,Gamma) not integral");
            }
    }

    // integer coordinates of a lattice point of Gamma^2 w.r.t. the generators
    std::array<long, 4> lattice_coords(const Vec2& gamma, double tol = 1e-9) const {
        const LatticeCoeffs c0 = nearest_coeffs(gamma[0], lattice.component);
        const LatticeCoeffs c1 = nearest_coeffs(gamma[1], lattice.component);
        if (c0.error > tol || c1.error > tol)
            throw std::invalid_argument("lattice_coords: point is not in Gamma^2");
        return {c0.m, c0.n, c1.m, c1.n};
    }

    cplx alpha_value(const Vec2& gamma) const { return alpha.value_from_coeffs(lattice_coords(gamma)); }
};

// e_gamma(x) = alpha(gamma) * exp(pi * [H(gamma, x) + H(gamma, gamma)/2])
inline cplx multiplicator(const BundleType& T, const Vec2& gamma, const Vec2& x) {
    return T.alpha_value(gamma) * std::exp(kPi * (T.H.eval(gamma, x) + 0.5 * T.H.eval(gamma, gamma)));
}

// Max residual of alpha(g_j + g_k) = alpha(g_j) alpha(g_k) (-1)^{Im H(g_j,g_k)}
// over all ordered generator pairs, with the left side produced by the stored
// cocycle extension and the sign by the stored form.
inline double semicharacter_law_check(const BundleType& T) {
    const auto g = lattice2_generators(T.lattice);
    double worst = 0.0;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            std::array<long, 4> n{};
            n[j] += 1;
            n[k] += 1;
            const cplx lhs = T.alpha.value_from_coeffs(n);
            const double im = T.H.eval(g[j], g[k]).imag();
            const double sign = (std::lround(im) % 2 == 0) ? 1.0 : -1.0;
            const cplx rhs = T.alpha.gen[j] * T.alpha.gen[k] * sign;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

// Affine endomorphism x -> A x + t of the torus (A must map Gamma^2 into itself).
struct AffineEndo {
    Mat2 A;
    Vec2 t{0.0, 0.0};
};

inline AffineEndo compose(const AffineEndo& f, const AffineEndo& g) {
    // (f o g)(x) = A_f (A_g x + t_g) + t_f
    return {f.A * g.A, f.A.apply(g.t) + f.t};
}

inline bool preserves_lattice(const Mat2& A, const Lattice2& L2, double tol = 1e-9) {
    for (const Vec2& g : lattice2_generators(L2)) {
        const Vec2 img = A.apply(g);
        if (!contains(img[0], L2.component, tol) || !contains(img[1], L2.component, tol))
            return false;
    }
    return true;
}

// Pullback type (H_phi, alpha_phi):
//   H_phi(w, w') = H(A w, A w'),  alpha_phi(g) = alpha(A g) e^{2 i pi Im H(A g, t)}
inline BundleType pullback_type(const BundleType& T, const AffineEndo& phi) {
    if (!preserves_lattice(phi.A, T.lattice))
        throw std::invalid_argument("pullback_type: linear part does not preserve the lattice");
    const Mat2 Mphi = phi.A.adjoint() * T.H.M * phi.A;
    const HermitianForm Hphi(Mat2{Mphi.a, Mphi.b, Mphi.c, Mphi.d});
    const auto g = lattice2_generators(T.lattice);
    std::array<cplx, 4> vals;
    for (int j = 0; j < 4; ++j) {
        const Vec2 Ag = phi.A.apply(g[j]);
        vals[j] = T.alpha_value(Ag) * std::exp(cplx(0.0, 2.0 * kPi) * T.H.eval(Ag, phi.t).imag());
    }
    return BundleType(Hphi, induced_semicharacter(Hphi, T.lattice, vals), T.lattice);
}

struct LattesConditionResult {
    bool ok = false;
    double h_residual = 0.0;      // ||H_D - d H|| (max entry)
    double alpha_residual = 0.0;  // max_j |alpha_D(g_j) - alpha(g_j)^d|
};

// Lemma-level compatibility (H_D, alpha_D) = (d H, alpha^d), the existence
// criterion for a degree-d homogeneous lift of D to the bundle.
inline LattesConditionResult check_lattes_condition(const BundleType& T, const AffineEndo& D,
                                                    int d, double tol = 1e-9) {
    if (d < 2) throw std::invalid_argument("check_lattes_condition: d must be >= 2");
    const BundleType TD = pullback_type(T, D);
    LattesConditionResult r;
    r.h_residual = (TD.H.M - T.H.M * cplx(double(d), 0.0)).max_abs();
    for (int j = 0; j < 4; ++j) {
        const cplx want = Semicharacter::ipow(T.alpha.gen[j], d);
        r.alpha_residual = std::max(r.alpha_residual, std::abs(TD.alpha.gen[j] - want));
    }
    r.ok = r.h_residual <= tol && r.alpha_residual <= tol;
    return r;
}

// q_delta(x, u) = delta * e^{-(pi/2) H(x,x)} |u|
inline double metric_q(const BundleType& T, double delta, const Vec2& x, cplx u) {
    if (!(delta > 0.0)) throw std::invalid_argument("metric_q: delta must be > 0");
    return delta * std::exp(-0.5 * kPi * T.H.quad(x)) * std::abs(u);
}

// delta with q_delta o D_lift = q_delta^d:  delta = (e^{-(pi/2) H(tau,tau)})^{1/(d-1)}
inline double delta_normalization(const BundleType& T, const AffineEndo& D, int d) {
    if (d < 2) throw std::invalid_argument("delta_normalization: d must be >= 2");
    return std::exp(-0.5 * kPi * T.H.quad(D.t) / static_cast<double>(d - 1));
}

// The degree-d homogeneous lift {x, u} -> {D x + tau, e^{pi H(tau, A x)} u^d}
// (normalization constant c = 1).
inline std::pair<Vec2, cplx> lift_morphism(const BundleType& T, const AffineEndo& D, int d,
                                           const Vec2& x, cplx u) {
    const Vec2 Ax = D.A.apply(x);
    const cplx fiber = std::exp(kPi * T.H.eval(D.t, Ax)) * cpow_int(u, d);
    return {Ax + D.t, fiber};
}

// Equivariant trivialization twist eps0(x0 + t) = e^{-pi H(x0, t)}.
inline cplx epsilon0(const Vec2& x0, const Vec2& t, const HermitianForm& H) {
    return std::exp(-kPi * H.eval(x0, t));
}

}  // namespace lattes
