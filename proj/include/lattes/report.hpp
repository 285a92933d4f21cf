#pragma once

// JSON serialization of verification reports and orbit graphs, plus the small
// command-line parsers (complex literals, point triples, affine slices).

#include <json.hpp>

#include <cctype>
#include <string>

#include "lattes/green.hpp"
#include "lattes/maps.hpp"
#include "lattes/verify.hpp"

namespace lattes {

// Wall time is intentionally excluded: report bytes must be identical across
// runs with the same seed.
inline nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["overall_pass"] = rep.overall_pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["n_samples"] = c.n_samples;
        jc["seed"] = c.seed;
        jc["tolerance"] = c.tolerance;
        jc["max_residual"] = c.max_residual;
        jc["pass"] = c.pass;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

inline nlohmann::json graph_json(const PostCriticalGraph& g) {
    nlohmann::json j;
    j["closed"] = g.closed;
    j["post_critical_lines"] = g.post_critical_count();
    if (!g.failure.empty()) j["failure"] = g.failure;
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        nlohmann::json jn;
        jn["name"] = line_name(g.nodes[n]);
        nlohmann::json coeffs = nlohmann::json::array();
        for (int c = 0; c < 3; ++c)
            coeffs.push_back({{"re", g.nodes[n].l[c].real()}, {"im", g.nodes[n].l[c].imag()}});
        jn["coefficients"] = coeffs;
        jn["critical"] = static_cast<bool>(g.is_critical[n]);
        jn["post_critical"] = static_cast<bool>(g.is_post_critical[n]);
        jn["image"] = g.edge_to[n];
        nodes.push_back(jn);
    }
    j["nodes"] = nodes;
    return j;
}

inline nlohmann::json registry_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& entry : classification_registry()) {
        nlohmann::json row;
        row["label"] = entry.label;
        row["group"] = entry.group_name;
        row["order"] = entry.build().order();
        row["tau"] = {{"re", entry.tau.real()}, {"im", entry.tau.imag()}};
        row["branch_locus"] = entry.branch_locus;
        row["branch_line_count"] = entry.branch_line_count;
        rows.push_back(row);
    }
    return rows;
}

// Plain-text arrow diagram: follows each chain from its critical sources.
inline std::string graph_text(const PostCriticalGraph& g) {
    std::string out;
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        if (!g.is_critical[n]) continue;
        std::size_t cur = n;
        std::vector<bool> seen(g.nodes.size(), false);
        out += line_name(g.nodes[cur]);
        while (g.edge_to[cur] >= 0 && !seen[cur]) {
            seen[cur] = true;
            cur = static_cast<std::size_t>(g.edge_to[cur]);
            out += " -> " + line_name(g.nodes[cur]);
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Command-line literal parsing

// Complex literal "re", "re+imi", "imi", e.g. "2", "-0.5+0.3i", "1i", "-i".
inline cplx parse_complex(const std::string& text) {
    const std::string s = [&] {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        return t;
    }();
    if (s.empty()) throw std::invalid_argument("parse_complex: empty literal");
    // split at the sign starting the imaginary part (not at position 0, not
    // right after an exponent marker)
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') split = p;
    }
    auto parse_real = [](const std::string& part, bool imag_unit_ok) -> double {
        std::string body = part;
        if (imag_unit_ok && !body.empty() && body.back() == 'i') body.pop_back();
        if (body.empty() || body == "+") return 1.0;
        if (body == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(body, &used);
        if (used != body.size()) throw std::invalid_argument("parse_complex: bad literal " + part);
        return v;
    };
    if (!s.empty() && s.back() == 'i') {
        if (split == std::string::npos) return cplx(0.0, parse_real(s, true));
        return cplx(parse_real(s.substr(0, split), false), parse_real(s.substr(split), true));
    }
    if (split != std::string::npos) {
        // forms like "1+2" are rejected: a two-part literal must end in i
        throw std::invalid_argument("parse_complex: expected imaginary part to end in 'i': " + text);
    }
    return cplx(parse_real(s, false), 0.0);
}

// Comma-separated component triple "a, b, c" of complex literals.
inline Vec3 parse_point3(const std::string& text) {
    Vec3 out{0.0, 0.0, 0.0};
    std::size_t start = 0;
    for (int c = 0; c < 3; ++c) {
        const std::size_t comma = text.find(',', start);
        if (c < 2 && comma == std::string::npos)
            throw std::invalid_argument("parse_point3: expected three comma-separated components");
        const std::string part =
            c < 2 ? text.substr(start, comma - start) : text.substr(start);
        out[c] = parse_complex(part);
        start = comma + 1;
    }
    return out;
}

// Affine slice "z=(e1,e2,e3)" where each component is a sum of terms: complex
// literals, optionally multiplying the real parameters s or t ("0.5s",
// "(0.2+0.1i)*t", "s", "-t", "1").
inline SliceSpec parse_slice(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const std::size_t eq = s.find('=');
    if (eq != std::string::npos && s.compare(0, eq, "z") == 0) s = s.substr(eq + 1);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("parse_slice: expected z=(e1,e2,e3)");
    s = s.substr(1, s.size() - 2);
    SliceSpec spec;
    std::size_t start = 0;
    for (int comp = 0; comp < 3; ++comp) {
        std::size_t comma = std::string::npos;
        int depth = 0;
        for (std::size_t p = start; p < s.size(); ++p) {
            if (s[p] == '(') ++depth;
            if (s[p] == ')') --depth;
            if (s[p] == ',' && depth == 0) {
                comma = p;
                break;
            }
        }
        if (comp < 2 && comma == std::string::npos)
            throw std::invalid_argument("parse_slice: expected three components");
        std::string expr = comp < 2 ? s.substr(start, comma - start) : s.substr(start);
        start = comma + 1;
        // split into signed terms at depth-0 +/- (not after an exponent)
        std::vector<std::string> terms;
        std::string cur;
        depth = 0;
        for (std::size_t p = 0; p < expr.size(); ++p) {
            const char c = expr[p];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if ((c == '+' || c == '-') && depth == 0 && p > 0 && expr[p - 1] != 'e' &&
                expr[p - 1] != 'E' && expr[p - 1] != '(' && expr[p - 1] != '+' && expr[p - 1] != '-') {
                terms.push_back(cur);
                cur.clear();
            }
            cur += c;
        }
        if (!cur.empty()) terms.push_back(cur);
        for (std::string term : terms) {
            if (term.empty()) continue;
            char param = 0;
            if (term.back() == 's' || term.back() == 't') {
                param = term.back();
                term.pop_back();
                if (!term.empty() && term.back() == '*') term.pop_back();
            }
            // strip wrapping parentheses around the coefficient
            if (term.size() >= 2 && term.front() == '(' && term.back() == ')')
                term = term.substr(1, term.size() - 2);
            else if (term.size() >= 3 && (term[0] == '+' || term[0] == '-') && term[1] == '(' &&
                     term.back() == ')')
                term = term.substr(0, 1) + term.substr(2, term.size() - 3);
            const cplx coeff = term.empty() || term == "+" ? cplx(1.0, 0.0)
                               : term == "-"               ? cplx(-1.0, 0.0)
                                                           : parse_complex(term);
            if (param == 's')
                spec.es[comp] += coeff;
            else if (param == 't')
                spec.et[comp] += coeff;
            else
                spec.origin[comp] += coeff;
        }
    }
    if (max_abs(spec.es) == 0.0 && max_abs(spec.et) == 0.0)
        throw std::invalid_argument("parse_slice: slice does not depend on s or t");
    return spec;
}

}  // namespace lattes
