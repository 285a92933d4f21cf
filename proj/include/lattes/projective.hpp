#pragma once

// Projective points and lines of P^2, homogeneous polynomial maps of C^3 with
// exact coefficient arithmetic, and the small dense Hermitian eigensolver used
// to fit lines through sampled image points.

#include <array>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lattes/core.hpp"

namespace lattes {

// ---------------------------------------------------------------------------
// Projective points

struct ProjPoint {
    Vec3 v;  // representative, normalized to unit max-modulus

    explicit ProjPoint(const Vec3& raw) : v(raw) {
        const double m = max_abs(raw);
        if (!(m >= 1e-300)) throw std::invalid_argument("ProjPoint: zero coordinate vector");
        v = {raw[0] / m, raw[1] / m, raw[2] / m};
    }
};

// Norm of the cross product of unit representatives: 0 iff projectively equal,
// symmetric, at most 1.
inline double proj_distance(const ProjPoint& p, const ProjPoint& q) {
    const double np = std::sqrt(norm2_sq(p.v)), nq = std::sqrt(norm2_sq(q.v));
    const Vec3 c = cross(p.v, q.v);
    return std::sqrt(norm2_sq(c)) / (np * nq);
}

// ---------------------------------------------------------------------------
// Lines

// The line {z : l . z = 0}, with coefficients normalized to unit Euclidean norm
// and the first coordinate of modulus > phase_tol rotated to be real positive.
struct ProjLine {
    Vec3 l;

    explicit ProjLine(const Vec3& raw) : l(raw) {
        double n = std::sqrt(norm2_sq(raw));
        if (!(n > 0.0)) throw std::invalid_argument("ProjLine: zero coefficient vector");
        Vec3 u{raw[0] / n, raw[1] / n, raw[2] / n};
        for (int j = 0; j < 3; ++j) {
            if (std::abs(u[j]) > 1e-9) {
                const cplx phase = std::abs(u[j]) / u[j];
                u = phase * u;
                break;
            }
        }
        l = u;
    }

    cplx eval(const Vec3& z) const { return l[0] * z[0] + l[1] * z[1] + l[2] * z[2]; }
};

inline double line_distance(const ProjLine& a, const ProjLine& b) {
    const Vec3 d{a.l[0] - b.l[0], a.l[1] - b.l[1], a.l[2] - b.l[2]};
    return std::sqrt(norm2_sq(d));
}

inline bool line_equal(const ProjLine& a, const ProjLine& b, double tol = 1e-8) {
    return line_distance(a, b) <= tol;
}

// Two independent points spanning the line: cross products of the coefficient
// vector with standard basis vectors (cross(l, e) . l = 0 identically).
inline std::array<Vec3, 2> line_basis(const ProjLine& line) {
    std::array<Vec3, 2> basis;
    int got = 0;
    for (int j = 0; j < 3 && got < 2; ++j) {
        Vec3 e{0.0, 0.0, 0.0};
        e[j] = 1.0;
        const Vec3 p = cross(line.l, e);
        if (max_abs(p) < 1e-12) continue;
        if (got == 1 && std::sqrt(norm2_sq(cross(basis[0], p))) < 1e-12 * std::sqrt(norm2_sq(p)))
            continue;  // parallel to the first span vector
        basis[got++] = p;
    }
    if (got < 2) throw std::invalid_argument("line_basis: degenerate coefficient vector");
    return basis;
}

// Human-readable name for a line with small integer coefficients, e.g.
// {X=0}, {Y=Z}, {X=2Y}; falls back to the raw coefficient form.
inline std::string line_name(const ProjLine& line) {
    // find the smallest scaling making every entry a near-integer
    static const char* axis[3] = {"X", "Y", "Z"};
    for (int denom = 1; denom <= 4; ++denom) {
        // try scaling so that the largest entry has modulus `denom`
        double m = 0.0;
        int lead = 0;
        for (int j = 0; j < 3; ++j)
            if (std::abs(line.l[j]) > m) {
                m = std::abs(line.l[j]);
                lead = j;
            }
        const cplx scale = static_cast<double>(denom) / line.l[lead];
        std::array<long, 3> c{};
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
            const cplx s = scale * line.l[j];
            c[j] = std::lround(s.real());
            if (std::abs(s - cplx(double(c[j]), 0.0)) > 1e-6) ok = false;
        }
        if (!ok) continue;
        // canonical sign: first nonzero integer coefficient positive (ties in
        // modulus otherwise make the name depend on fit noise)
        for (int j = 0; j < 3; ++j) {
            if (c[j] == 0) continue;
            if (c[j] < 0)
                for (int s = 0; s < 3; ++s) c[s] = -c[s];
            break;
        }
        // write positive terms on the left, negated negative terms on the right
        std::string lhs, rhs;
        auto append = [&](std::string& side, long k, int j) {
            if (!side.empty()) side += "+";
            if (k != 1) side += std::to_string(k);
            side += axis[j];
        };
        for (int j = 0; j < 3; ++j) {
            if (c[j] > 0) append(lhs, c[j], j);
            if (c[j] < 0) append(rhs, -c[j], j);
        }
        if (lhs.empty()) std::swap(lhs, rhs);
        if (rhs.empty()) rhs = "0";
        return "{" + lhs + "=" + rhs + "}";
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "{(%.3g%+.3gi)X+(%.3g%+.3gi)Y+(%.3g%+.3gi)Z=0}",
                  line.l[0].real(), line.l[0].imag(), line.l[1].real(), line.l[1].imag(),
                  line.l[2].real(), line.l[2].imag());
    return buf;
}

// ---------------------------------------------------------------------------
// Homogeneous polynomial maps of C^3

// Sparse trivariate monomial map: (i, j, k) -> coefficient of x^i y^j z^k.
struct Poly3 {
    std::map<std::array<int, 3>, cplx> coeffs;

    cplx eval(const Vec3& z) const {
        cplx acc = 0.0;
        for (const auto& [e, c] : coeffs)
            acc += c * cpow_int(z[0], e[0]) * cpow_int(z[1], e[1]) * cpow_int(z[2], e[2]);
        return acc;
    }

    Poly3 partial(int var) const {
        Poly3 d;
        for (const auto& [e, c] : coeffs) {
            if (e[var] == 0) continue;
            std::array<int, 3> f = e;
            f[var] -= 1;
            d.coeffs[f] += c * double(e[var]);
        }
        return d;
    }

    Poly3& operator*=(cplx s) {
        for (auto& [e, c] : coeffs) c *= s;
        return *this;
    }
};

// Square of a linear form a x + b y + c z.
inline Poly3 squared_linear_form(cplx a, cplx b, cplx c) {
    Poly3 p;
    p.coeffs[{2, 0, 0}] = a * a;
    p.coeffs[{0, 2, 0}] = b * b;
    p.coeffs[{0, 0, 2}] = c * c;
    p.coeffs[{1, 1, 0}] = 2.0 * a * b;
    p.coeffs[{1, 0, 1}] = 2.0 * a * c;
    p.coeffs[{0, 1, 1}] = 2.0 * b * c;
    return p;
}

struct HomogeneousMap {
    std::array<Poly3, 3> f;
    int degree = 2;

    Vec3 eval(const Vec3& z) const { return {f[0].eval(z), f[1].eval(z), f[2].eval(z)}; }

    // Jacobian determinant at z (exact partial derivatives).
    cplx jacobian_det(const Vec3& z) const {
        cplx J[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) J[r][c] = f[r].partial(c).eval(z);
        return J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
               J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    }

    HomogeneousMap scaled(cplx s) const {
        HomogeneousMap m = *this;
        for (auto& p : m.f) p *= s;
        return m;
    }
};

// ---------------------------------------------------------------------------
// 3x3 Hermitian eigen-decomposition (cyclic Jacobi with complex rotations),
// enough for the line-fitting normal matrices.

struct HermEig3 {
    std::array<double, 3> values;          // ascending
    std::array<Vec3, 3> vectors;           // matching columns, orthonormal
};

inline HermEig3 hermitian_eig3(std::array<std::array<cplx, 3>, 3> A) {
    std::array<std::array<cplx, 3>, 3> V{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += std::norm(A[p][q]);
        if (off < 1e-30) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const cplx apq = A[p][q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = A[p][p].real(), aqq = A[q][q].real();
                // unitary rotation zeroing A[p][q]
                const cplx phase = apq / std::abs(apq);
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                const cplx sp = s * phase;
                // rows/cols p and q: [c, conj(sp); -sp, c] style rotation
                for (int k = 0; k < 3; ++k) {
                    const cplx akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - std::conj(sp) * akq;
                    A[k][q] = sp * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const cplx apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - sp * aqk;
                    A[q][k] = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const cplx vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - std::conj(sp) * vkq;
                    V[k][q] = sp * vkp + c * vkq;
                }
            }
        }
    }
    HermEig3 out;
    std::array<int, 3> idx{0, 1, 2};
    std::array<double, 3> d{A[0][0].real(), A[1][1].real(), A[2][2].real()};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (d[idx[b]] < d[idx[a]]) std::swap(idx[a], idx[b]);
    for (int a = 0; a < 3; ++a) {
        out.values[a] = d[idx[a]];
        out.vectors[a] = {V[0][idx[a]], V[1][idx[a]], V[2][idx[a]]};
    }
    return out;
}

// Least-squares line through sampled projective points: the smallest
// eigenvector of the normal matrix sum conj(w) w^T. Residuals are |l . w| for
// unit-normalized samples.
struct LineFit {
    ProjLine line;
    double max_residual = 0.0;
};

inline LineFit fit_line(const std::vector<Vec3>& samples) {
    if (samples.size() < 3) throw std::invalid_argument("fit_line: need at least 3 samples");
    std::array<std::array<cplx, 3>, 3> M{};
    std::vector<Vec3> unit;
    unit.reserve(samples.size());
    for (const Vec3& s : samples) {
        const double n = std::sqrt(norm2_sq(s));
        if (!(n > 0.0)) throw std::invalid_argument("fit_line: zero sample");
        const Vec3 w{s[0] / n, s[1] / n, s[2] / n};
        unit.push_back(w);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) M[a][b] += std::conj(w[a]) * w[b];
    }
    const HermEig3 eig = hermitian_eig3(M);
    LineFit out{ProjLine(eig.vectors[0]), 0.0};
    for (const Vec3& w : unit)
        out.max_residual = std::max(out.max_residual, std::abs(out.line.eval(w)));
    return out;
}

}  // namespace lattes
