#pragma once

// The explicit degree-2 endomorphisms of P^2 (f1, f2, f3, g, power), their
// torus dilations, critical-line tables, line images, post-critical orbit
// graphs and the structured non-Lattes obstruction report.

#include <optional>
#include <string>
#include <vector>

#include "lattes/core.hpp"
#include "lattes/projective.hpp"

namespace lattes {

enum class MapId { F1, F2, F3, G, Power };

inline const char* map_name(MapId id) {
    switch (id) {
        case MapId::F1: return "f1";
        case MapId::F2: return "f2";
        case MapId::F3: return "f3";
        case MapId::G: return "g";
        case MapId::Power: return "power";
    }
    return "?";
}

inline std::optional<MapId> map_from_name(const std::string& s) {
    if (s == "f1") return MapId::F1;
    if (s == "f2") return MapId::F2;
    if (s == "f3") return MapId::F3;
    if (s == "g") return MapId::G;
    if (s == "power") return MapId::Power;
    return std::nullopt;
}

// f_i as squares of integer linear forms:
//   f1 = [(-x+y+z)^2 : (x-y+z)^2 : (x+y-z)^2]
//   f2 = [(x-y+z)^2 : (-x+y+z)^2 : (x+y-z)^2]
//   f3 = [(x+y-z)^2 : (-x+y+z)^2 : (x-y+z)^2]
inline HomogeneousMap map_f(int i) {
    const Poly3 m = squared_linear_form(-1.0, 1.0, 1.0);   // (-x+y+z)^2
    const Poly3 p = squared_linear_form(1.0, -1.0, 1.0);   // (x-y+z)^2
    const Poly3 q = squared_linear_form(1.0, 1.0, -1.0);   // (x+y-z)^2
    HomogeneousMap F;
    F.degree = 2;
    if (i == 1)
        F.f = {m, p, q};
    else if (i == 2)
        F.f = {p, m, q};
    else if (i == 3)
        F.f = {q, m, p};
    else
        throw std::invalid_argument("map_f: i must be 1, 2 or 3");
    return F;
}

// g = [(x-2y)^2 : (x-2z)^2 : x^2]
inline HomogeneousMap map_g() {
    HomogeneousMap F;
    F.degree = 2;
    F.f = {squared_linear_form(1.0, -2.0, 0.0), squared_linear_form(1.0, 0.0, -2.0),
           squared_linear_form(1.0, 0.0, 0.0)};
    return F;
}

// power map (x^2, y^2, z^2), the exact Green-function oracle
inline HomogeneousMap map_power() {
    HomogeneousMap F;
    F.degree = 2;
    F.f[0].coeffs[{2, 0, 0}] = 1.0;
    F.f[1].coeffs[{0, 2, 0}] = 1.0;
    F.f[2].coeffs[{0, 0, 2}] = 1.0;
    return F;
}

inline HomogeneousMap builtin_map(MapId id) {
    switch (id) {
        case MapId::F1: return map_f(1);
        case MapId::F2: return map_f(2);
        case MapId::F3: return map_f(3);
        case MapId::G: return map_g();
        case MapId::Power: return map_power();
    }
    throw std::invalid_argument("builtin_map: unknown id");
}

// The dilations the f_i are semi-conjugate to; D1 simplifies to (1+i) Id.
inline Mat2 dilation(int i) {
    const cplx I(0.0, 1.0);
    if (i == 1) return Mat2::scalar(1.0 + I);
    if (i == 2) return Mat2{1.0, 1.0, 1.0, -1.0};
    if (i == 3) return Mat2{1.0, 1.0, I, -I};
    throw std::invalid_argument("dilation: i must be 1, 2 or 3");
}

// ---------------------------------------------------------------------------
// Critical lines

namespace detail {

// samples K points spread along a line, avoiding the base points of the map
inline std::vector<Vec3> sample_line_points(const ProjLine& line, int count) {
    const auto basis = line_basis(line);
    std::vector<Vec3> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
        const cplx t(0.37 + 0.81 * k, 0.23 - 0.57 * k);
        pts.push_back(basis[0] + t * basis[1]);
    }
    return pts;
}

}  // namespace detail

// Known line components of the critical set, each verified by sampled
// vanishing of the Jacobian determinant (and a generic nonvanishing probe).
inline std::vector<ProjLine> critical_lines(MapId id, double tol = 1e-8) {
    std::vector<ProjLine> lines;
    switch (id) {
        case MapId::F1:
        case MapId::F2:
        case MapId::F3:
            lines = {ProjLine({-1.0, 1.0, 1.0}), ProjLine({1.0, -1.0, 1.0}),
                     ProjLine({1.0, 1.0, -1.0})};
            break;
        case MapId::G:
            lines = {ProjLine({1.0, 0.0, 0.0}), ProjLine({1.0, -2.0, 0.0}),
                     ProjLine({1.0, 0.0, -2.0})};
            break;
        case MapId::Power:
            lines = {ProjLine({1.0, 0.0, 0.0}), ProjLine({0.0, 1.0, 0.0}),
                     ProjLine({0.0, 0.0, 1.0})};
            break;
    }
    const HomogeneousMap F = builtin_map(id);
    for (const auto& line : lines) {
        for (const Vec3& p : detail::sample_line_points(line, 5)) {
            const double n = std::sqrt(norm2_sq(p));
            const Vec3 u{p[0] / n, p[1] / n, p[2] / n};
            if (std::abs(F.jacobian_det(u)) > tol)
                throw std::runtime_error("critical_lines: sampled Jacobian does not vanish");
        }
    }
    // regularity probe away from the critical set
    const Vec3 generic{cplx(0.731, 0.101), cplx(-0.248, 0.577), cplx(0.911, -0.313)};
    if (std::abs(F.jacobian_det(generic)) < 1e-12)
        throw std::runtime_error("critical_lines: Jacobian vanished at the generic probe");
    return lines;
}

// Image of a line under the map, fitted through 5 sampled image points; throws
// not_a_line_error when the image is a genuine conic.
inline ProjLine image_of_line(const HomogeneousMap& F, const ProjLine& line, double tol = 1e-8) {
    std::vector<Vec3> images;
    for (const Vec3& p : detail::sample_line_points(line, 5)) {
        const Vec3 w = F.eval(p);
        if (max_abs(w) < 1e-14 * std::pow(std::sqrt(norm2_sq(p)), F.degree)) continue;
        images.push_back(w);
    }
    if (images.size() < 4) throw not_a_line_error("image_of_line: too many base points on the line");
    const LineFit fit = fit_line(images);
    if (fit.max_residual > tol)
        throw not_a_line_error("image_of_line: image is not a line (fit residual " +
                               std::to_string(fit.max_residual) + ")");
    return fit.line;
}

// ---------------------------------------------------------------------------
// Post-critical orbit graph at line level

struct PostCriticalGraph {
    std::vector<ProjLine> nodes;      // critical lines first
    std::vector<bool> is_critical;    // node came from the critical set
    std::vector<bool> is_post_critical;  // node is the image of some node
    std::vector<int> edge_to;         // edge_to[k] = image node index, -1 if unresolved
    bool closed = false;
    int depth_reached = 0;
    std::string failure;              // set when an image was not a line

    int post_critical_count() const {
        int n = 0;
        for (bool b : is_post_critical) n += b ? 1 : 0;
        return n;
    }
};

inline PostCriticalGraph post_critical_graph(MapId id, int max_depth = 8) {
    if (max_depth < 6) throw std::invalid_argument("post_critical_graph: max_depth must be >= 6");
    const HomogeneousMap F = builtin_map(id);
    PostCriticalGraph g;
    for (const auto& line : critical_lines(id)) {
        g.nodes.push_back(line);
        g.is_critical.push_back(true);
        g.is_post_critical.push_back(false);
        g.edge_to.push_back(-1);
    }
    std::vector<std::size_t> frontier(g.nodes.size());
    for (std::size_t k = 0; k < frontier.size(); ++k) frontier[k] = k;
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        g.depth_reached = depth;
        std::vector<std::size_t> next;
        for (std::size_t src : frontier) {
            ProjLine img = ProjLine({1.0, 0.0, 0.0});
            try {
                img = image_of_line(F, g.nodes[src]);
            } catch (const not_a_line_error& e) {
                g.failure = e.what();
                g.closed = false;
                return g;
            }
            int dst = -1;
            for (std::size_t k = 0; k < g.nodes.size(); ++k)
                if (line_equal(g.nodes[k], img)) {
                    dst = static_cast<int>(k);
                    break;
                }
            if (dst < 0) {
                dst = static_cast<int>(g.nodes.size());
                g.nodes.push_back(img);
                g.is_critical.push_back(false);
                g.is_post_critical.push_back(false);
                g.edge_to.push_back(-1);
                next.push_back(static_cast<std::size_t>(dst));
            }
            g.edge_to[src] = dst;
            g.is_post_critical[static_cast<std::size_t>(dst)] = true;
        }
        frontier = std::move(next);
    }
    g.closed = frontier.empty();
    return g;
}

}  // namespace lattes
