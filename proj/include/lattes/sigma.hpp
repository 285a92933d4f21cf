#pragma once

// The situation-5 quotient map sigma in theta and wp form, its normalized
// theta-coordinate lift, the semicharacter of the lift's type, semi-conjugacy
// residuals, the three wp identities, the branch-locus lines, and the
// non-Lattes obstruction report.

#include <vector>

#include "lattes/core.hpp"
#include "lattes/groups.hpp"
#include "lattes/hermitian.hpp"
#include "lattes/maps.hpp"
#include "lattes/projective.hpp"
#include "lattes/theta.hpp"

namespace lattes {

// Raw classical-theta coordinate triple of sigma(x, y):
//   [ (c^2 t00(x)^2 t00(y)^2 + a^2 t11(x)^2 t11(y)^2)^2
//   : (c^2 t00(x)^4 - a^2 t11(x)^4) (c^2 t00(y)^4 - a^2 t11(y)^4)
//   : (c^2 t00(x)^2 t00(y)^2 - a^2 t11(x)^2 t11(y)^2)^2 ]
inline Vec3 sigma_theta_raw(cplx x, cplx y, const LatticeConstants& k, double tol = 1e-14) {
    const cplx tau = k.lattice.tau;
    const cplx t00x = theta(theta00(), x, tau, tol), t11x = theta(theta11(), x, tau, tol);
    const cplx t00y = theta(theta00(), y, tau, tol), t11y = theta(theta11(), y, tau, tol);
    const cplx c2 = k.c * k.c, a2 = k.alpha * k.alpha;
    const cplx A = c2 * t00x * t00x * t00y * t00y;
    const cplx B = a2 * t11x * t11x * t11y * t11y;
    const cplx px = c2 * cpow_int(t00x, 4) - a2 * cpow_int(t11x, 4);
    const cplx py = c2 * cpow_int(t00y, 4) - a2 * cpow_int(t11y, 4);
    return {(A + B) * (A + B), px * py, (A - B) * (A - B)};
}

// The normalized theta-coordinate lift of sigma: each coordinate is a product
// of eight one-variable normalized thetas, so the triple carries the factor
// exp(2 pi (x^2 + y^2)) and all three coordinates share the type (4 Id, alpha).
// This is the lift the degree-2 calibration identity holds for exactly.
inline Vec3 sigma_lift(cplx x, cplx y, const LatticeConstants& k, double tol = 1e-14) {
    const cplx f = std::exp(2.0 * kPi * (x * x + y * y));
    return f * sigma_theta_raw(x, y, k, tol);
}

inline ProjPoint sigma_theta(cplx x, cplx y, const LatticeConstants& k, double tol = 1e-14) {
    const Vec3 s = sigma_theta_raw(x, y, k, tol);
    const double scale = std::norm(k.c) + std::norm(k.alpha);
    if (max_abs(s) < 1e-10 * scale * scale)
        throw degenerate_orbit_error("sigma_theta: indeterminacy point (all coordinates vanish)");
    return ProjPoint(s);
}

// sigma in Weierstrass form,
//   [(wp_x wp_y + a^2)^2 : (wp_x^2 - a^2)(wp_y^2 - a^2) : (wp_x wp_y - a^2)^2]
inline ProjPoint sigma_wp(cplx x, cplx y, const LatticeConstants& k, double tol = 1e-14) {
    const cplx px = wp(x, k, tol), py = wp(y, k, tol);
    const cplx a2 = k.alpha * k.alpha;
    return ProjPoint({(px * py + a2) * (px * py + a2), (px * px - a2) * (py * py - a2),
                      (px * py - a2) * (px * py - a2)});
}

// ---------------------------------------------------------------------------
// The wp identities behind the semi-conjugacy proof.
//   1:  wp_x wp_{(1+i)x} = -(i/2) (wp_x^2 - alpha^2)
//   2:  (wp_x - wp_y)^2 wp_{x+y} wp_{x-y} = (wp_x wp_y + alpha^2)^2
//   3:  (wp_x - wp_y)^2 (wp_{x+y} + wp_{x-y}) = 2 (wp_x + wp_y)(wp_x wp_y - alpha^2)
// Returns |LHS - RHS| / (1 + |RHS|).
inline double wp_identity(int n, cplx x, cplx y, const LatticeConstants& k) {
    const cplx a2 = k.alpha * k.alpha;
    const cplx I(0.0, 1.0);
    cplx lhs, rhs;
    if (n == 1) {
        const cplx px = wp(x, k);
        lhs = px * wp(x + I * x, k);
        rhs = -0.5 * I * (px * px - a2);
    } else if (n == 2) {
        const cplx px = wp(x, k), py = wp(y, k);
        lhs = (px - py) * (px - py) * wp(x + y, k) * wp(x - y, k);
        rhs = (px * py + a2) * (px * py + a2);
    } else if (n == 3) {
        const cplx px = wp(x, k), py = wp(y, k);
        lhs = (px - py) * (px - py) * (wp(x + y, k) + wp(x - y, k));
        rhs = 2.0 * (px + py) * (px * py - a2);
    } else {
        throw std::invalid_argument("wp_identity: n must be 1, 2 or 3");
    }
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

// ---------------------------------------------------------------------------
// Sampling helpers: seeded draws from the fundamental block, resampled away
// from wp poles, theta zeros and sigma indeterminacy where the identities have
// removable singularities.

namespace detail {

inline bool near_half_lattice(cplx z, const Lattice& L, double margin) {
    double s = 0.0, t = 0.0;
    lattice_coordinates(z, L, s, t);
    const double ds = std::abs(s - std::round(s * 2.0) / 2.0);
    const double dt = std::abs(t - std::round(t * 2.0) / 2.0);
    return std::min(ds, dt) < margin || std::hypot(ds, dt) < margin;
}

// a point whose wp value and the wp values of simple combinations stay tame
inline cplx draw_wp_safe(Rng& rng, const Lattice& L, double margin = 2e-2) {
    for (int tries = 0; tries < 256; ++tries) {
        const cplx z = rng.uniform_complex(0.0, 1.0);
        if (!near_half_lattice(z, L, margin)) return z;
    }
    throw convergence_error("draw_wp_safe: resampling failed");
}

}  // namespace detail

// max over seeded samples of proj_distance(sigma(D_i (x,y)), f_i(sigma(x,y)))
inline double check_semiconjugacy(int i, const LatticeConstants& k, int samples = 100,
                                  std::uint64_t seed = 3) {
    const Mat2 D = dilation(i);
    const HomogeneousMap F = builtin_map(i == 1 ? MapId::F1 : (i == 2 ? MapId::F2 : MapId::F3));
    Rng rng(derive_seed(seed, "semiconjugacy"));
    const Lattice& L = k.lattice;
    double worst = 0.0;
    int accepted = 0;
    while (accepted < samples) {
        const cplx x = detail::draw_wp_safe(rng, L);
        const cplx y = detail::draw_wp_safe(rng, L);
        Vec3 s = sigma_theta_raw(x, y, k);
        const double scale = std::pow(std::norm(k.c) + std::norm(k.alpha), 2);
        if (max_abs(s) < 1e-6 * scale) continue;  // too close to indeterminacy
        const Vec2 d = D.apply({x, y});
        Vec3 sd = sigma_theta_raw(d[0], d[1], k);
        if (max_abs(sd) < 1e-6 * scale) continue;
        worst = std::max(worst, proj_distance(ProjPoint(sd), ProjPoint(F.eval(s))));
        ++accepted;
    }
    return worst;
}

// ---------------------------------------------------------------------------
// The situation-5 bundle type, with the semicharacter read off the functional
// equation of the lift coordinates rather than assumed.

// alpha(gamma) measured as L_j(z + gamma) / (L_j(z) e^{pi [H(gamma,z) + H(gamma,gamma)/2]}).
inline std::array<cplx, 4> measure_situation5_semicharacter(const LatticeConstants& k,
                                                            double* coord_consistency = nullptr) {
    const Lattice2 L2(k.lattice);
    const HermitianForm H = HermitianForm::scalar(4.0);
    const auto gens = lattice2_generators(L2);
    const cplx x(0.313, 0.271), y(0.637, 0.491);  // fixed generic base point
    const Vec3 L0 = sigma_lift(x, y, k);
    std::array<cplx, 4> vals;
    double worst = 0.0;
    for (int j = 0; j < 4; ++j) {
        const Vec2 z{x, y};
        const Vec2 g = gens[j];
        const Vec3 L1 = sigma_lift(x + g[0], y + g[1], k);
        const cplx e = std::exp(kPi * (H.eval(g, z) + 0.5 * H.eval(g, g)));
        const cplx a0 = (L1[0] / L0[0]) / e;
        const cplx a1 = (L1[1] / L0[1]) / e;
        const cplx a2 = (L1[2] / L0[2]) / e;
        worst = std::max(worst, std::max(std::abs(a0 - a1), std::abs(a0 - a2)));
        vals[j] = a0 / std::abs(a0);  // project to the unit circle
        if (std::abs(std::abs(a0) - 1.0) > 1e-8)
            throw convergence_error("situation-5 semicharacter: measured value is not unit modulus");
    }
    if (coord_consistency) *coord_consistency = worst;
    return vals;
}

// Type of the lift coordinates: the positive-definite growth form 4 Id with
// the measured semicharacter (the basin bundle of the paper-side convention is
// the negative of this form with the conjugate semicharacter).
inline BundleType situation5_type(const LatticeConstants& k) {
    const Lattice2 L2(k.lattice);
    const HermitianForm H = HermitianForm::scalar(4.0);
    return BundleType(H, induced_semicharacter(H, L2, measure_situation5_semicharacter(k)), L2);
}

// ---------------------------------------------------------------------------
// Branch locus of sigma: images of the pointwise-fixed torus lines of the
// situation-5 group, fitted through sampled sigma values.

struct FixedTorusLine {
    Vec2 base;       // a point on the line
    Vec2 direction;  // unit direction in C^2
};

// Pointwise-fixed lines of x -> A x + t modulo Gamma^2, found by solving
// (A - I) x = -t + gamma over a window of small lattice offsets gamma.
inline std::vector<FixedTorusLine> fixed_lines_of_element(const GroupElement& g,
                                                          const Lattice2& L2) {
    std::vector<FixedTorusLine> out;
    const Mat2 AmI = g.A - Mat2::identity();
    if (AmI.max_abs() <= 1e-9) return out;             // identity fixes everything
    if (std::abs(AmI.det()) > 1e-9) return out;        // isolated fixed points only
    // kernel direction of the rank-1 matrix
    Vec2 dir;
    if (std::abs(AmI.a) + std::abs(AmI.b) > 1e-9)
        dir = {-AmI.b, AmI.a};
    else
        dir = {-AmI.d, AmI.c};
    const double dn = std::sqrt(norm2_sq(dir));
    dir = {dir[0] / dn, dir[1] / dn};
    const cplx tau = L2.component.tau;
    for (int m1 = -1; m1 <= 1; ++m1)
        for (int n1 = -1; n1 <= 1; ++n1)
            for (int m2 = -1; m2 <= 1; ++m2)
                for (int n2 = -1; n2 <= 1; ++n2) {
                    const Vec2 gamma{cplx(double(m1), 0.0) + double(n1) * tau,
                                     cplx(double(m2), 0.0) + double(n2) * tau};
                    const Vec2 rhs = gamma - g.t;
                    // solve the consistent rank-1 system by least squares on the
                    // dominant row, then verify the other row
                    Vec2 x{0.0, 0.0};
                    bool solved = false;
                    if (std::abs(AmI.a) + std::abs(AmI.b) > 1e-9) {
                        if (std::abs(AmI.a) >= std::abs(AmI.b))
                            x = {rhs[0] / AmI.a, 0.0};
                        else
                            x = {0.0, rhs[0] / AmI.b};
                        solved = true;
                    } else if (std::abs(AmI.c) + std::abs(AmI.d) > 1e-9) {
                        if (std::abs(AmI.c) >= std::abs(AmI.d))
                            x = {rhs[1] / AmI.c, 0.0};
                        else
                            x = {0.0, rhs[1] / AmI.d};
                        solved = true;
                    }
                    if (!solved) continue;
                    const Vec2 check = AmI.apply(x);
                    if (std::abs(check[0] - rhs[0]) > 1e-9 || std::abs(check[1] - rhs[1]) > 1e-9)
                        continue;  // inconsistent offset
                    out.push_back({x, dir});
                }
    return out;
}

// Fit the P^2 line swept by sigma along a fixed torus line.
inline ProjLine sigma_image_line(const FixedTorusLine& line, const LatticeConstants& k) {
    std::vector<Vec3> pts;
    double param = 0.173;
    const double scale = std::pow(std::norm(k.c) + std::norm(k.alpha), 2);
    while (pts.size() < 7 && param < 40.0) {
        const cplx s(param, 0.31 * param + 0.055);
        const Vec2 p = line.base + s * line.direction;
        const Vec3 v = sigma_theta_raw(p[0], p[1], k);
        if (max_abs(v) > 1e-6 * scale) pts.push_back(v);
        param += 0.217;
    }
    if (pts.size() < 5) throw convergence_error("sigma_image_line: could not sample the line");
    const LineFit fit = fit_line(pts);
    if (fit.max_residual > 1e-7)
        throw not_a_line_error("sigma_image_line: sigma image of a mirror line is not a line");
    return fit.line;
}

// All distinct P^2 lines arising as sigma images of pointwise-fixed torus
// lines of the situation-5 group (the line components of the branch locus).
inline std::vector<ProjLine> situation5_branch_lines(const LatticeConstants& k) {
    const FiniteGroup G = situation5_group();
    std::vector<ProjLine> lines;
    for (const auto& g : G.elements) {
        for (const auto& fl : fixed_lines_of_element(g, G.lattice)) {
            const ProjLine img = sigma_image_line(fl, k);
            bool known = false;
            for (const auto& l : lines)
                if (line_equal(l, img, 1e-7)) {
                    known = true;
                    break;
                }
            if (!known) lines.push_back(img);
        }
    }
    return lines;
}

// ---------------------------------------------------------------------------
// Obstruction report (the computable evidence contrasted in the non-Lattes
// argument; states the numbers, proves nothing).

struct LattesObstructionReport {
    std::string map;
    bool graph_closed = false;
    std::string failure;                 // set when the orbit left the line world
    int post_critical_lines = 0;
    std::vector<int> candidate_entries;  // classification entries matching the line count
    int candidate_line_stabilizer_order = 0;  // for g: stabilizer of {(x, ix+(1+i)/2)}
    Mat2 stabilizer_generator = Mat2::identity();
    bool critical_on_X0 = false;         // for g: {X=0} lies in the critical set
    bool post_critical_inside_branch = false;  // for f_i: orbit lines among branch lines
    double branch_match_distance = 0.0;
};

inline LattesObstructionReport lattes_obstruction_report(MapId id, const LatticeConstants& k) {
    LattesObstructionReport rep;
    rep.map = map_name(id);
    const PostCriticalGraph g = post_critical_graph(id);
    rep.graph_closed = g.closed;
    rep.failure = g.failure;
    rep.post_critical_lines = g.post_critical_count();
    if (g.closed) {
        for (const auto& entry : classification_registry())
            if (entry.branch_lines_only && entry.branch_line_count == rep.post_critical_lines)
                rep.candidate_entries.push_back(entry.label);
    }
    if (id == MapId::G) {
        const FiniteGroup G5 = situation5_group();
        const TorusLine cand{cplx(0.0, 1.0), cplx(0.5, 0.5)};  // {(x, i x + (1+i)/2)}
        const FiniteGroup stab = stabilizer_of_line(G5, cand);
        rep.candidate_line_stabilizer_order = static_cast<int>(stab.order());
        for (const auto& e : stab.elements)
            if ((e.A - Mat2::identity()).max_abs() > 1e-9) rep.stabilizer_generator = e.A;
        // {X = 0} is a critical component of g, so g o sigma branches with
        // order > 2 along it, against the stabilizer order 2 of the candidate
        const HomogeneousMap F = map_g();
        const ProjLine x0({1.0, 0.0, 0.0});
        rep.critical_on_X0 = true;
        for (const Vec3& p : detail::sample_line_points(x0, 5)) {
            const double n = std::sqrt(norm2_sq(p));
            if (std::abs(F.jacobian_det({p[0] / n, p[1] / n, p[2] / n})) > 1e-8)
                rep.critical_on_X0 = false;
        }
    }
    if (id == MapId::F1 || id == MapId::F2 || id == MapId::F3) {
        const std::vector<ProjLine> branch = situation5_branch_lines(k);
        rep.post_critical_inside_branch = true;
        for (std::size_t n = 0; n < g.nodes.size(); ++n) {
            if (!g.is_post_critical[n]) continue;
            double best = 2.0;
            for (const auto& b : branch) best = std::min(best, line_distance(g.nodes[n], b));
            rep.branch_match_distance = std::max(rep.branch_match_distance, best);
            if (best > 1e-6) rep.post_critical_inside_branch = false;
        }
    }
    return rep;
}

}  // namespace lattes
