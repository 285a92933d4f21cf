#pragma once

// Finite groups of affine torus maps: the imprimitive reflection groups
// G(m, p, 2), the S3 representation from the classification list, the
// situation-5 affine group, closure enumeration, stabilizers and the
// six-entry classification registry.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lattes/core.hpp"
#include "lattes/hermitian.hpp"
#include "lattes/lattice.hpp"

namespace lattes {

struct GroupElement {
    Mat2 A;
    Vec2 t{0.0, 0.0};  // translation, stored reduced to the fundamental cell

    bool is_linear(double tol = 1e-9) const { return max_abs(t) <= tol; }
};

inline constexpr std::size_t kClosureHardCap = 4096;

struct FiniteGroup {
    std::vector<GroupElement> elements;
    Lattice2 lattice;

    explicit FiniteGroup(Lattice2 l) : lattice(l) {}

    std::size_t order() const { return elements.size(); }

    bool element_equal(const GroupElement& a, const GroupElement& b, double tol = 1e-9) const {
        return (a.A - b.A).max_abs() <= tol && torus_equal(a.t, b.t, lattice, tol);
    }

    bool member(const GroupElement& g, double tol = 1e-9) const {
        for (const auto& e : elements)
            if (element_equal(e, g, tol)) return true;
        return false;
    }

    GroupElement canonical(const GroupElement& g) const { return {g.A, reduce2(g.t, lattice)}; }

    GroupElement product(const GroupElement& a, const GroupElement& b) const {
        return canonical({a.A * b.A, a.A.apply(b.t) + a.t});
    }

    GroupElement inverse(const GroupElement& g) const {
        const Mat2 Ai = g.A.inverse();
        return canonical({Ai, cplx(-1.0) * Ai.apply(g.t)});
    }

    bool contains_identity(double tol = 1e-9) const {
        return member({Mat2::identity(), {0.0, 0.0}}, tol);
    }

    // closure + inverse fixed-point verification (reported by tests)
    bool is_closed(double tol = 1e-9) const {
        for (const auto& a : elements)
            for (const auto& b : elements)
                if (!member(product(a, b), tol)) return false;
        for (const auto& a : elements)
            if (!member(inverse(a), tol)) return false;
        return contains_identity(tol);
    }
};

// Closure of a generating set under products modulo Gamma^2.
inline FiniteGroup group_closure(const std::vector<GroupElement>& generators, const Lattice2& L2,
                                 std::size_t cap = kClosureHardCap) {
    FiniteGroup G(L2);
    for (const auto& g : generators)
        if (!preserves_lattice(g.A, L2))
            throw std::invalid_argument("group_closure: generator does not preserve the lattice");
    G.elements.push_back({Mat2::identity(), {0.0, 0.0}});
    std::vector<GroupElement> frontier;
    for (const auto& g : generators) {
        const GroupElement c = G.canonical(g);
        if (!G.member(c)) {
            if (G.elements.size() >= cap)
                throw convergence_error("group_closure: exceeded hard cap");
            G.elements.push_back(c);
            frontier.push_back(c);
        }
    }
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& f : frontier) {
            // products with every known element, both orders
            const std::vector<GroupElement> snapshot = G.elements;
            for (const auto& e : snapshot) {
                for (const GroupElement& p : {G.product(e, f), G.product(f, e)}) {
                    if (!G.member(p)) {
                        if (G.elements.size() >= cap)
                            throw convergence_error("group_closure: exceeded hard cap");
                        G.elements.push_back(p);
                        next.push_back(p);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return G;
}

// G(m, p, 2), generated (following the classification list) by
//   [[0,1],[1,0]], [[0, e^{2 i pi/m}],[e^{-2 i pi/m}, 0]], [[e^{2 i p pi/m},0],[0,1]].
// The natural torus lattice for the entry is attached: square for m = 4,
// hexagonal for m in {3, 6}, and the omega torus for m = 2.
inline FiniteGroup gmp2(int m, int p) {
    if (m < 2 || p < 1 || m % p != 0) throw std::invalid_argument("gmp2: need p | m, m >= 2");
    cplx tau;
    if (m == 4)
        tau = cplx(0.0, 1.0);
    else if (m == 3 || m == 6)
        tau = std::exp(cplx(0.0, kPi / 3.0));  // hexagonal
    else
        tau = std::exp(cplx(0.0, 2.0 * kPi / 3.0));  // omega torus (m = 2)
    const Lattice2 L2(tau);
    const cplx z = std::exp(cplx(0.0, 2.0 * kPi / m));
    const cplx zp = std::exp(cplx(0.0, 2.0 * kPi * p / m));
    const std::vector<GroupElement> gens = {
        {Mat2{0.0, 1.0, 1.0, 0.0}, {0.0, 0.0}},
        {Mat2{0.0, z, std::conj(z), 0.0}, {0.0, 0.0}},
        {Mat2{zp, 0.0, 0.0, 1.0}, {0.0, 0.0}},
    };
    return group_closure(gens, L2);
}

// The six listed matrices of the S3 representation (taken as printed; they are
// not unitary for the standard form, which the H-invariance check reports).
inline FiniteGroup s3_rep() {
    const Lattice2 L2(std::exp(cplx(0.0, 2.0 * kPi / 3.0)));
    FiniteGroup G(L2);
    G.elements = {
        {Mat2{1.0, 0.0, 0.0, 1.0}, {0.0, 0.0}},   {Mat2{-1.0, -1.0, 0.0, 1.0}, {0.0, 0.0}},
        {Mat2{0.0, 1.0, 1.0, 0.0}, {0.0, 0.0}},   {Mat2{1.0, 0.0, -1.0, -1.0}, {0.0, 0.0}},
        {Mat2{-1.0, -1.0, 1.0, 0.0}, {0.0, 0.0}}, {Mat2{0.0, 1.0, -1.0, -1.0}, {0.0, 0.0}},
    };
    return G;
}

// Situation 5: < G(4,2,2), translation by (1+i)/2 * (1,1) > acting on the
// square torus, closed modulo Gamma^2.
inline FiniteGroup situation5_group() {
    const FiniteGroup lin = gmp2(4, 2);
    std::vector<GroupElement> gens = lin.elements;
    const cplx half(0.5, 0.5);
    gens.push_back({Mat2::identity(), {half, half}});
    return group_closure(gens, lin.lattice);
}

// max over elements and sampled vector pairs of |H(Ax, Ay) - H(x, y)|
inline double check_H_invariance(const FiniteGroup& G, const HermitianForm& H, int samples = 20,
                                 std::uint64_t seed = 1) {
    Rng rng(derive_seed(seed, "H-invariance"));
    double worst = 0.0;
    for (const auto& g : G.elements) {
        for (int s = 0; s < samples; ++s) {
            const Vec2 x{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
            const Vec2 y{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0)};
            const cplx lhs = H.eval(g.A.apply(x), g.A.apply(y));
            worst = std::max(worst, std::abs(lhs - H.eval(x, y)));
        }
    }
    return worst;
}

// Subgroup of elements fixing the class of x0 in the torus.
inline FiniteGroup stabilizer_of_point(const FiniteGroup& G, const Vec2& x0, double tol = 1e-9) {
    FiniteGroup S(G.lattice);
    for (const auto& g : G.elements) {
        const Vec2 img = g.A.apply(x0) + g.t;
        if (torus_equal(img, x0, G.lattice, tol)) S.elements.push_back(g);
    }
    return S;
}

// A torus line {(s, M s + v) : s in C} mod Gamma^2. Requires M Gamma <= Gamma
// so that line membership is a single lattice test.
struct TorusLine {
    cplx slope;   // M
    cplx offset;  // v
};

inline bool on_torus_line(const Vec2& p, const TorusLine& line, const Lattice2& L2,
                          double tol = 1e-9) {
    return contains(p[1] - line.slope * p[0] - line.offset, L2.component, tol);
}

// Stabilizer of the line, decided on `samples` parameter values. The default
// is the generic-point stabilizer (elements fixing each sampled line point in
// the torus): that order is the local covering multiplicity along the line,
// the quantity the non-Lattes comparison consumes. Pass setwise = true for the
// subgroup merely mapping the line onto itself.
inline FiniteGroup stabilizer_of_line(const FiniteGroup& G, const TorusLine& line,
                                      int samples = 5, bool setwise = false, double tol = 1e-9) {
    if (samples < 3) throw std::invalid_argument("stabilizer_of_line: samples must be >= 3");
    const Lattice& L = G.lattice.component;
    if (!contains(line.slope * 1.0, L, tol) || !contains(line.slope * L.tau, L, tol))
        throw std::invalid_argument("stabilizer_of_line: slope must map the lattice into itself");
    FiniteGroup S(G.lattice);
    for (const auto& g : G.elements) {
        bool keeps = true;
        for (int s = 0; s < samples && keeps; ++s) {
            const cplx param(0.137 + 0.29 * s, 0.071 + 0.17 * s);
            const Vec2 p{param, line.slope * param + line.offset};
            const Vec2 q = g.A.apply(p) + g.t;
            keeps = setwise ? on_torus_line(q, line, G.lattice, tol)
                            : torus_equal(q, p, G.lattice, tol);
        }
        if (keeps) S.elements.push_back(g);
    }
    return S;
}

// Reflection: non-identity linear element fixing a hyperplane pointwise, i.e.
// eigenvalue 1 with geometric multiplicity exactly 1.
inline bool is_reflection(const GroupElement& g, double tol = 1e-9) {
    if (!g.is_linear(tol)) throw std::invalid_argument("is_reflection: element must be linear");
    const Mat2 AmI = g.A - Mat2::identity();
    if (AmI.max_abs() <= tol) return false;             // identity
    return std::abs(AmI.det()) <= tol;                  // rank(A - I) == 1
}

inline std::vector<GroupElement> reflections(const FiniteGroup& G, double tol = 1e-9) {
    std::vector<GroupElement> out;
    for (const auto& g : G.elements)
        if (g.is_linear(tol) && is_reflection(g, tol)) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Classification registry: the six pairs (A^2, G) with A^2 / G = P^2.

struct ClassificationEntry {
    int label = 0;
    cplx tau;
    std::string group_name;
    std::string branch_locus;
    int branch_line_count = 0;    // number of line components
    bool branch_lines_only = false;  // no conic / dual-curve component
    std::function<FiniteGroup()> build;
};

inline std::vector<ClassificationEntry> classification_registry() {
    const cplx omega = std::exp(cplx(0.0, 2.0 * kPi / 3.0));
    const cplx rho = std::exp(cplx(0.0, kPi / 3.0));
    const cplx i(0.0, 1.0);
    std::vector<ClassificationEntry> reg;
    reg.push_back({1, omega, "G(2,1,2)", "4 droites et une quadrique", 4, false,
                   [] { return gmp2(2, 1); }});
    reg.push_back({2, rho, "G(3,1,2)", "3 droites et une quadrique", 3, false,
                   [] { return gmp2(3, 1); }});
    reg.push_back({3, i, "G(4,1,2)", "3 droites et une quadrique", 3, false,
                   [] { return gmp2(4, 1); }});
    reg.push_back({4, rho, "G(6,1,2)", "3 droites et une quadrique", 3, false,
                   [] { return gmp2(6, 1); }});
    reg.push_back({5, i, "<G(4,2,2), (1+i)/2 (1,1)>", "6 droites", 6, true,
                   [] { return situation5_group(); }});
    reg.push_back({6, omega, "S3", "la courbe duale d'une cubique non singulière", 0, false,
                   [] { return s3_rep(); }});
    return reg;
}

}  // namespace lattes
