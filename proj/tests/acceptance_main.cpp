// Acceptance suite: one pass/fail line per criterion, each criterion pinned to
// its stated tolerance. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lattes/report.hpp"
#include "lattes/verify.hpp"

using namespace lattes;

namespace {

struct Criterion {
    int number = 0;
    std::string description;
    bool pass = true;
    double worst_margin = 0.0;  // max of residual / tolerance over the checks
    std::vector<std::string> failures;

    Criterion(int n, std::string d) : number(n), description(std::move(d)) {}
};

// Collect the named checks out of a set of suite reports.
void take(Criterion& c, const std::vector<VerificationReport>& reports,
          const std::vector<std::string>& prefixes) {
    for (const auto& rep : reports) {
        for (const auto& chk : rep.checks) {
            bool wanted = false;
            for (const auto& p : prefixes)
                if (chk.id.rfind(p, 0) == 0) wanted = true;
            if (!wanted) continue;
            if (chk.tolerance > 0.0)
                c.worst_margin = std::max(c.worst_margin, chk.max_residual / chk.tolerance);
            if (!chk.pass) {
                c.pass = false;
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s residual %.3e > tol %.1e", chk.id.c_str(),
                              chk.max_residual, chk.tolerance);
                c.failures.push_back(buf);
            }
        }
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    VerifyConfig cfg;  // pinned defaults: 100 samples, fixed seed, scale 1
    std::vector<Criterion> criteria;
    const auto wall0 = std::chrono::steady_clock::now();

    std::printf("running verification suites...\n");
    const VerificationReport theta_rep = run_theta_suite(cfg);
    const VerificationReport herm_rep = run_hermitian_suite(cfg);
    const VerificationReport groups_rep = run_groups_suite(cfg);
    const VerificationReport inv_rep = run_invariants_suite(cfg);
    const VerificationReport dyn_rep = run_dynamics_suite(cfg);
    const VerificationReport green_rep = run_green_suite(cfg);
    const std::vector<VerificationReport> all = {theta_rep, herm_rep,  groups_rep,
                                                 inv_rep,   dyn_rep,   green_rep};

    {  // 1: special functions
        Criterion c{1,
                    "special functions: theta quasi-periodicity <= 1e-10, divisor zeros < 1e-10, "
                    "wp two-route agreement <= 1e-3, wp'^2 = 4wp(wp^2-a^2) <= 1e-6, "
                    "addition formula <= 1e-6"};
        take(c, all,
             {"theta.quasi_periodicity", "theta.divisor_zeros", "theta.wp_oracle_agreement",
              "theta.wp_differential_equation", "theta.wp_addition_formula",
              "theta.constants_half_periods"});
        criteria.push_back(c);
    }
    {  // 2: wp identity suite
        Criterion c{2, "wp identities 1-3 at 50 seeded samples each <= 1e-7"};
        take(c, all, {"dynamics.wp_identity_"});
        criteria.push_back(c);
    }
    {  // 3: semi-conjugacy
        Criterion c{3,
                    "semi-conjugacy sigma o D_i = f_i o sigma <= 1e-6 (100 samples, i = 1, 2, 3); "
                    "sigma theta form = wp form <= 1e-7"};
        take(c, all, {"dynamics.semiconjugacy_f", "dynamics.sigma_theta_vs_wp"});
        criteria.push_back(c);
    }
    {  // 4: type / Lattes condition
        Criterion c{4,
                    "type suite: semicharacter law <= 1e-10, (H_D, a_D) = (2H, a^2) for D1-D3, "
                    "(H_g, a_g) = (H, a) for all 32 elements, q o D = q^2 (delta = 1) <= 1e-9"};
        take(c, all,
             {"hermitian.semicharacter_law", "hermitian.lattes_condition_d",
              "hermitian.group_type_invariance", "hermitian.metric_degree_two"});
        criteria.push_back(c);
    }
    {  // 5: green engine
        Criterion c{5,
                    "green engine: power oracle <= 1e-12, homogeneity and G(F(z)) = 2 G(z) <= 1e-9, "
                    "calibration spread <= 1e-6, profile residual <= 1e-4 with C within 1e-4 and "
                    "lambda > 0 consistent across i, boundary |G| <= 1e-4"};
        take(c, all,
             {"green.power_oracle", "green.homogeneity", "green.functional_equation",
              "green.calibration_spread_f", "green.profile_residual_f", "green.profile_intercept_f",
              "green.profile_lambda_positive_f", "green.profile_lambda_consistent",
              "green.boundary_zero"});
        criteria.push_back(c);
    }
    {  // 6: groups and invariants
        Criterion c{6,
                    "groups/invariants: orders 8/16/32 = 2m^2/p, |S3| = 6, basis invariant "
                    "<= 1e-10 with degree product 8 and nonzero Jacobian, singularity pullback "
                    "<= 1e-10, |t^m|^{2/m} = |t|^2 <= 1e-12 for m in {2,3,4,6}"};
        take(c, all,
             {"groups.gmp2_orders", "groups.s3_representation", "invariants.flatto_criterion",
              "invariants.basis_invariance", "invariants.singularity_pullback",
              "invariants.pullback_1d"});
        criteria.push_back(c);
    }
    {  // 7: orbit suite
        Criterion c{7,
                    "orbit suite: post-critical graph of g reproduces all 8 arrows with exactly 6 "
                    "post-critical lines, line stabilizer of {(x, ix+(1+i)/2)} has order 2 with "
                    "generator [[0,-i],[i,0]], graphs of f1, f2, f3 close"};
        take(c, all,
             {"dynamics.postcritical_g_diagram", "dynamics.postcritical_f_closed",
              "groups.line_stabilizer", "dynamics.obstruction_report_g"});
        criteria.push_back(c);
    }
    {  // 8: determinism
        Criterion c{8, "determinism: verify JSON and boundary CSV/PPM byte-identical across runs"};
        VerifyConfig small = cfg;
        small.samples = 30;
        const std::string j1 = report_json(run_suite("invariants", small)).dump(2);
        const std::string j2 = report_json(run_suite("invariants", small)).dump(2);
        if (j1 != j2) {
            c.pass = false;
            c.failures.push_back("verification report JSON differs between runs");
        }
        const LatticeConstants k = compute_constants(gaussian_lattice());
        const HomogeneousMap F = calibrated_lift(1, k);
        SliceSpec spec;
        spec.origin = {0.0, 0.0, 1.0};
        spec.es = {1.0, 0.0, 0.0};
        spec.et = {0.0, 1.0, 0.0};
        const SliceGrid g1 = boundary_slice_grid(F, spec, 48, GreenParams{});
        const SliceGrid g2 = boundary_slice_grid(F, spec, 48, GreenParams{});
        if (grid_csv_bytes(g1) != grid_csv_bytes(g2)) {
            c.pass = false;
            c.failures.push_back("grid CSV differs between runs");
        }
        if (grid_ppm_bytes(g1) != grid_ppm_bytes(g2)) {
            c.pass = false;
            c.failures.push_back("grid PPM differs between runs");
        }
        criteria.push_back(c);
    }

    int failed = 0;
    for (const auto& c : criteria) {
        std::printf("[%s] criterion %d: %s", c.pass ? "PASS" : "FAIL", c.number,
                    c.description.c_str());
        if (c.worst_margin > 0.0) std::printf("  (worst residual at %.1e of tolerance)", c.worst_margin);
        std::printf("\n");
        for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed,
                criteria.size(), seconds_since(wall0));
    return failed;
}
