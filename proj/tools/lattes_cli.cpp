// Command-line front end: verification suites with JSON reports, Green
// function evaluation, boundary slice grids (CSV + PPM), post-critical orbit
// diagrams and group inspection.
//
// Exit codes: 0 = all checks passed, 1 = checks failed, 2 = usage/parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "lattes/report.hpp"

namespace {

using namespace lattes;

int cmd_verify(const std::string& suite, const VerifyConfig& cfg, bool json) {
    VerificationReport rep;
    try {
        rep = run_suite(suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks)
            std::printf("[%s] %-42s residual %.3e  (tol %.1e, n=%ld, seed=%llu)\n",
                        c.pass ? "PASS" : "FAIL", c.id.c_str(), c.max_residual, c.tolerance,
                        c.n_samples, static_cast<unsigned long long>(c.seed));
        std::printf("suite %s: %s (%zu checks, %.2f s)\n", rep.suite.c_str(),
                    rep.overall_pass ? "PASS" : "FAIL", rep.checks.size(), rep.wall_seconds);
    }
    return rep.overall_pass ? 0 : 1;
}

int cmd_green(const std::string& map, const std::string& point, int p_max) {
    const auto id = map_from_name(map);
    if (!id) {
        std::cerr << "error: unknown map '" << map << "'\n";
        return 2;
    }
    Vec3 z;
    try {
        z = parse_point3(point);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (max_abs(z) == 0.0) {
        std::cerr << "error: the zero vector has no Green value\n";
        return 2;
    }
    GreenParams params(2, p_max);
    try {
        const GreenResult r = green(builtin_map(*id), z, params);
        std::printf("green      %.15g\n", r.value);
        std::printf("iterations %d\n", r.iterations_used);
        std::printf("cauchy_gap %.3e\n", r.cauchy_gap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_boundary(const std::string& map, const std::string& slice, int res,
                 const std::string& out, const std::string& range, int p_max, bool csv_only) {
    const auto id = map_from_name(map);
    if (!id) {
        std::cerr << "error: unknown map '" << map << "'\n";
        return 2;
    }
    SliceSpec spec;
    try {
        spec = parse_slice(slice);
        if (!range.empty()) {
            const Vec3 dummy{};
            (void)dummy;
            double vals[4];
            std::size_t start = 0;
            for (int k = 0; k < 4; ++k) {
                const std::size_t comma = range.find(',', start);
                if (k < 3 && comma == std::string::npos)
                    throw std::invalid_argument("expected smin,smax,tmin,tmax");
                vals[k] = std::stod(k < 3 ? range.substr(start, comma - start) : range.substr(start));
                start = comma + 1;
            }
            spec.smin = vals[0];
            spec.smax = vals[1];
            spec.tmin = vals[2];
            spec.tmax = vals[3];
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (res < 1 || res > 4096) {
        std::cerr << "error: --res must be in [1, 4096]\n";
        return 2;
    }
    try {
        GreenParams params(2, p_max);
        const SliceGrid grid = boundary_slice_grid(builtin_map(*id), spec, res, params);
        write_grid_csv(grid, out + ".csv");
        if (!csv_only) write_grid_ppm(grid, out + ".ppm");
        std::printf("grid       %dx%d\n", res, res);
        std::printf("green_min  %.6g\n", grid.min_finite());
        std::printf("green_max  %.6g\n", grid.max_finite());
        std::printf("zero_cells %d\n", grid.zero_crossing_cells());
        std::printf("csv        %s.csv\n", out.c_str());
        if (!csv_only) std::printf("ppm        %s.ppm\n", out.c_str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_orbit(const std::string& map, bool json, int max_depth) {
    const auto id = map_from_name(map);
    if (!id) {
        std::cerr << "error: unknown map '" << map << "'\n";
        return 2;
    }
    try {
        const PostCriticalGraph g = post_critical_graph(*id, max_depth);
        if (json) {
            std::cout << graph_json(g).dump(2) << "\n";
        } else {
            std::cout << graph_text(g);
            std::printf("%s, %d post-critical lines\n",
                        g.closed ? "closed (critically finite at line level)"
                                 : "not critically finite at line level",
                        g.post_critical_count());
            if (!g.failure.empty()) std::printf("note: %s\n", g.failure.c_str());
        }
        return 0;
    } catch (const not_a_line_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_groups(const std::string& name, bool json) {
    if (name == "registry") {
        if (json) {
            std::cout << registry_json().dump(2) << "\n";
        } else {
            for (const auto& entry : classification_registry())
                std::printf("entry %d: (tau = %.6g%+.6gi, %s), order %zu, branch locus: %s\n",
                            entry.label, entry.tau.real(), entry.tau.imag(),
                            entry.group_name.c_str(), entry.build().order(),
                            entry.branch_locus.c_str());
        }
        return 0;
    }
    FiniteGroup G(Lattice2(cplx(0.0, 1.0)));
    if (name == "g212")
        G = gmp2(2, 1);
    else if (name == "g312")
        G = gmp2(3, 1);
    else if (name == "g412")
        G = gmp2(4, 1);
    else if (name == "g612")
        G = gmp2(6, 1);
    else if (name == "g422")
        G = gmp2(4, 2);
    else if (name == "s3")
        G = s3_rep();
    else if (name == "situation5")
        G = situation5_group();
    else {
        std::cerr << "error: unknown group '" << name << "' (try g212, g312, g412, g612, g422, s3, situation5)\n";
        return 2;
    }
    std::printf("order       %zu\n", G.order());
    int nrefl = 0, ntrans = 0;
    for (const auto& g : G.elements) {
        if (g.is_linear() && is_reflection(g)) ++nrefl;
        if (!g.is_linear()) ++ntrans;
    }
    std::printf("reflections %d\n", nrefl);
    if (ntrans > 0)
        std::printf("cosets      %d linear + %d with the half-period translation\n",
                    static_cast<int>(G.order()) - ntrans, ntrans);
    // registry rows mentioning this group
    for (const auto& entry : classification_registry()) {
        const bool match = (name == "g212" && entry.label == 1) || (name == "g312" && entry.label == 2) ||
                           (name == "g412" && entry.label == 3) || (name == "g612" && entry.label == 4) ||
                           (name == "situation5" && entry.label == 5) || (name == "s3" && entry.label == 6);
        if (match)
            std::printf("registry    entry %d: (tau = %.6g%+.6gi, %s), branch locus: %s\n",
                        entry.label, entry.tau.real(), entry.tau.imag(), entry.group_name.c_str(),
                        entry.branch_locus.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattes-lab: verification suites, Green functions and orbit diagrams\n"
                 "for the explicit degree-2 torus-covered endomorphisms of P^2"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    VerifyConfig cfg;
    bool json = false;
    verify->add_option("--suite", suite, "all|theta|hermitian|groups|invariants|dynamics|green");
    verify->add_option("--samples", cfg.samples, "sample count for randomized checks");
    verify->add_option("--seed", cfg.seed, "base seed for randomized checks");
    verify->add_option("--tol-scale", cfg.tol_scale, "global tolerance scale factor");
    verify->add_option("--p-max", cfg.p_max, "Green iteration cap");
    verify->add_flag("--json", json, "emit the report as JSON on stdout");

    // green
    auto* greenc = app.add_subcommand("green", "evaluate the escape-rate Green function");
    std::string map = "f1", point = "1,1,1";
    int p_max = 40;
    greenc->add_option("--map", map, "f1|f2|f3|g|power");
    greenc->add_option("--point", point, "complex triple, e.g. \"2,1,1\" or \"1+2i,0,3\"");
    greenc->add_option("--p-max", p_max, "iteration cap");

    // boundary
    auto* boundary = app.add_subcommand("boundary", "evaluate a Green slice grid (CSV + PPM)");
    std::string slice = "z=(s,t,1)", out = "boundary", range;
    int res = 256;
    bool csv_only = false;
    boundary->add_option("--map", map, "f1|f2|f3|g|power");
    boundary->add_option("--slice", slice, "affine slice, e.g. \"z=(s,t,1)\"");
    boundary->add_option("--res", res, "grid resolution per side");
    boundary->add_option("--out", out, "output base path (writes .csv and .ppm)");
    boundary->add_option("--range", range, "smin,smax,tmin,tmax (default -2,2,-2,2)");
    boundary->add_option("--p-max", p_max, "iteration cap");
    boundary->add_flag("--csv-only", csv_only, "skip the PPM image");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "post-critical line orbit diagram");
    int max_depth = 8;
    orbit->add_option("--map", map, "f1|f2|f3|g|power");
    orbit->add_option("--max-depth", max_depth, "orbit depth cap")->check(CLI::Range(6, 64));
    orbit->add_flag("--json", json, "emit the adjacency list as JSON");

    // groups
    auto* groups = app.add_subcommand("groups", "group orders, reflections, registry data");
    std::string gname = "g212";
    groups->add_option("name", gname, "g212|g312|g412|g612|g422|s3|situation5|registry");
    groups->add_flag("--json", json, "emit the registry as JSON (with name = registry)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, cfg, json);
        if (greenc->parsed()) return cmd_green(map, point, p_max);
        if (boundary->parsed()) return cmd_boundary(map, slice, res, out, range, p_max, csv_only);
        if (orbit->parsed()) return cmd_orbit(map, json, max_depth);
        if (groups->parsed()) return cmd_groups(gname, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
