#pragma once

// Invariant polynomial bases of the reflection groups, the quotient chart
// Phi = (P_1, ..., P_k), and the explicit left-hand sides of the boundary
// singularity equations.

#include <map>
#include <utility>
#include <vector>

#include "lattes/core.hpp"
#include "lattes/groups.hpp"

namespace lattes {

// Sparse bivariate polynomial, map (i, j) -> coefficient of X^i Y^j.
struct Poly2 {
    std::map<std::pair<int, int>, cplx> coeffs;

    cplx eval(const Vec2& t) const {
        cplx acc = 0.0;
        for (const auto& [e, c] : coeffs) acc += c * cpow_int(t[0], e.first) * cpow_int(t[1], e.second);
        return acc;
    }

    Poly2 dx() const {
        Poly2 d;
        for (const auto& [e, c] : coeffs)
            if (e.first > 0) d.coeffs[{e.first - 1, e.second}] += c * double(e.first);
        return d;
    }

    Poly2 dy() const {
        Poly2 d;
        for (const auto& [e, c] : coeffs)
            if (e.second > 0) d.coeffs[{e.first, e.second - 1}] += c * double(e.second);
        return d;
    }

    bool homogeneous_of(int deg) const {
        for (const auto& [e, c] : coeffs)
            if (std::abs(c) > 0.0 && e.first + e.second != deg) return false;
        return true;
    }
};

struct InvariantBasis {
    std::vector<Poly2> polys;
    std::vector<int> degrees;

    InvariantBasis(std::vector<Poly2> p, std::vector<int> d)
        : polys(std::move(p)), degrees(std::move(d)) {
        if (polys.size() != degrees.size())
            throw std::invalid_argument("InvariantBasis: size mismatch");
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (!polys[k].homogeneous_of(degrees[k]))
                throw std::invalid_argument("InvariantBasis: polynomial not homogeneous of its degree");
    }

    long degree_product() const {
        long p = 1;
        for (int d : degrees) p *= d;
        return p;
    }
};

// (P, Q) = (X^2 + Y^2, X^2 Y^2), the invariant basis for G(2, 1, 2).
inline InvariantBasis basis_g212() {
    Poly2 P, Q;
    P.coeffs[{2, 0}] = 1.0;
    P.coeffs[{0, 2}] = 1.0;
    Q.coeffs[{2, 2}] = 1.0;
    return InvariantBasis({P, Q}, {2, 4});
}

// max over group elements, basis polynomials and sampled points of
// |P(A t) - P(t)| / (1 + |P(t)|)
inline double check_invariance(const InvariantBasis& B, const FiniteGroup& G, int samples = 50,
                               std::uint64_t seed = 2) {
    Rng rng(derive_seed(seed, "invariance"));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Vec2 t{rng.uniform_complex(-1.5, 1.5), rng.uniform_complex(-1.5, 1.5)};
        for (const auto& g : G.elements) {
            const Vec2 gt = g.A.apply(t);
            for (const auto& P : B.polys) {
                const cplx a = P.eval(gt), b = P.eval(t);
                worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
            }
        }
    }
    return worst;
}

// Jacobian determinant of a two-polynomial basis at t (exact partials).
inline cplx check_jacobian_nonzero(const InvariantBasis& B, const Vec2& t) {
    if (B.polys.size() != 2)
        throw std::invalid_argument("check_jacobian_nonzero: expects a 2-polynomial basis");
    const cplx a = B.polys[0].dx().eval(t), b = B.polys[0].dy().eval(t);
    const cplx c = B.polys[1].dx().eval(t), d = B.polys[1].dy().eval(t);
    return a * d - b * c;
}

inline Vec2 phi_eval(const InvariantBasis& B, const Vec2& t) {
    if (B.polys.size() != 2) throw std::invalid_argument("phi_eval: expects a 2-polynomial basis");
    return {B.polys[0].eval(t), B.polys[1].eval(t)};
}

// |theta1 + sqrt(theta1^2 - 4 theta2)| + |theta1 - sqrt(theta1^2 - 4 theta2)|;
// both square-root branches occur, so the output is branch independent.
inline double singularity_lhs_g212(cplx theta1, cplx theta2) {
    const cplx s = std::sqrt(theta1 * theta1 - 4.0 * theta2);
    return std::abs(theta1 + s) + std::abs(theta1 - s);
}

// |y|^{2/m} for a cyclic stabilizer of order m (the one-dimensional chart t -> t^m).
inline double singularity_lhs_1d(cplx y, int m) {
    if (m != 2 && m != 3 && m != 4 && m != 6)
        throw std::invalid_argument("singularity_lhs_1d: m must be one of 2, 3, 4, 6");
    return std::pow(std::abs(y), 2.0 / static_cast<double>(m));
}

// Defining function Re(w) - H(t, t) of the boundary in the chart (y, w),
// evaluated at any preimage t of y (the value only depends on the orbit when H
// is invariant under the stabilizer).
inline double boundary_defining_value(cplx w, const Vec2& t, const HermitianForm& H) {
    return w.real() - H.quad(t);
}

}  // namespace lattes
