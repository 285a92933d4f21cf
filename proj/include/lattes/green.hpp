#pragma once

// Escape-rate Green function of polynomial lifts by renormalized iteration,
// the lift calibration constant, the Green-profile fit, boundary sampling on
// {G = 0}, and slice-grid evaluation with CSV / PPM export.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "lattes/core.hpp"
#include "lattes/maps.hpp"
#include "lattes/sigma.hpp"

namespace lattes {

struct GreenParams {
    int degree = 2;
    int max_iters = 40;
    double escape_floor = 1e-280;  // ||F(w)|| below this on the unit shell => degenerate orbit
    double blow_ceiling = 1e280;   // accumulator guard
    double stop_gap = 1e-12;       // stop once the Cauchy increment falls below

    GreenParams() = default;
    GreenParams(int d, int p) : degree(d), max_iters(p) {
        if (degree < 2 || max_iters < 8) throw std::invalid_argument("GreenParams: need d >= 2, p >= 8");
    }
};

struct GreenResult {
    double value = 0.0;
    int iterations_used = 0;
    double cauchy_gap = 0.0;                 // |G_p - G_{p-1}| at the last step
    std::vector<double> gap_history;         // successive increments (reported)
};

// G(z) = lim (1/d^p) log ||F^p(z)||_inf via max-modulus renormalization; the
// iterate is kept on the unit shell so any input scale is overflow-safe.
inline GreenResult green(const HomogeneousMap& F, const Vec3& z, const GreenParams& params,
                         bool keep_history = false) {
    const double m0 = max_abs(z);
    if (!(m0 > 0.0)) throw std::invalid_argument("green: zero vector");
    Vec3 w{z[0] / m0, z[1] / m0, z[2] / m0};
    GreenResult r;
    r.value = std::log(m0);
    double invd = 1.0;
    const double d = static_cast<double>(params.degree);
    for (int p = 0; p < params.max_iters; ++p) {
        const Vec3 fw = F.eval(w);
        const double nm = max_abs(fw);
        if (nm < params.escape_floor)
            throw degenerate_orbit_error("green: orbit hit the indeterminacy cone");
        invd /= d;
        const double inc = invd * std::log(nm);
        r.value += inc;
        if (std::abs(r.value) > params.blow_ceiling)
            throw degenerate_orbit_error("green: accumulator exceeded the ceiling");
        r.cauchy_gap = std::abs(inc);
        if (keep_history) r.gap_history.push_back(r.cauchy_gap);
        r.iterations_used = p + 1;
        w = {fw[0] / nm, fw[1] / nm, fw[2] / nm};
        if (r.cauchy_gap < params.stop_gap) break;
    }
    return r;
}

// Sampled regularity probe: min ||F(w)||_inf over random unit-shell points.
// The exact integer lifts have F^{-1}(0) = {0}; a tiny minimum signals an
// indeterminacy locus and aborts downstream runs with a diagnostic.
inline double regularity_probe(const HomogeneousMap& F, int samples = 200, std::uint64_t seed = 5) {
    Rng rng(derive_seed(seed, "regularity"));
    double worst = 1e300;
    for (int s = 0; s < samples; ++s) {
        Vec3 w{rng.uniform_complex(-1.0, 1.0), rng.uniform_complex(-1.0, 1.0),
               rng.uniform_complex(-1.0, 1.0)};
        const double m = max_abs(w);
        w = {w[0] / m, w[1] / m, w[2] / m};
        worst = std::min(worst, max_abs(F.eval(w)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Calibration (the constant c with c * F(lift(x)) = lift(D x), tau = 0)

struct CalibrationResult {
    cplx c = 0.0;
    double spread = 0.0;  // max relative deviation of the sampled ratios from c
};

inline HomogeneousMap integer_lift(int i) {
    return builtin_map(i == 1 ? MapId::F1 : (i == 2 ? MapId::F2 : MapId::F3));
}

// Componentwise ratios lift(D x) / F(lift(x)) over seeded samples; c is the
// componentwise median, the spread validates constancy.
inline CalibrationResult calibrate_lift(int i, const LatticeConstants& k, int samples = 50,
                                        std::uint64_t seed = 7) {
    const Mat2 D = dilation(i);
    const HomogeneousMap F = integer_lift(i);
    if (regularity_probe(F) < 1e-8)
        throw degenerate_orbit_error("calibrate_lift: lift failed the regularity probe");
    Rng rng(derive_seed(seed, "calibration"));
    std::vector<double> re, im;
    std::vector<cplx> ratios;
    int accepted = 0;
    while (accepted < samples) {
        const cplx x = rng.uniform_complex(0.0, 1.0);
        const cplx y = rng.uniform_complex(0.0, 1.0);
        const Vec3 L = sigma_lift(x, y, k);
        const Vec3 FL = F.eval(L);
        const Vec2 dxy = D.apply({x, y});
        const Vec3 LD = sigma_lift(dxy[0], dxy[1], k);
        const double M = max_abs(FL);
        if (max_abs(L) <= 0.0 || M <= 0.0) continue;
        bool ok = true;
        for (int j = 0; j < 3; ++j)
            if (std::abs(FL[j]) < 1e-8 * M) ok = false;  // resample near-vanishing components
        if (!ok) continue;
        for (int j = 0; j < 3; ++j) {
            const cplx r = LD[j] / FL[j];
            ratios.push_back(r);
            re.push_back(r.real());
            im.push_back(r.imag());
        }
        ++accepted;
    }
    auto median = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    CalibrationResult out;
    out.c = cplx(median(re), median(im));
    for (const cplx& r : ratios) out.spread = std::max(out.spread, std::abs(r - out.c) / std::abs(out.c));
    return out;
}

// The integer lift rescaled so the calibration constant is 1.
inline HomogeneousMap calibrated_lift(int i, const LatticeConstants& k) {
    const CalibrationResult cal = calibrate_lift(i, k);
    return integer_lift(i).scaled(cal.c);
}

// ---------------------------------------------------------------------------
// Green profile G(lift(x)) = C + (pi/2) lambda (|x1|^2 + |x2|^2)

struct ProfileFit {
    double lambda = 0.0;
    double C = 0.0;
    double max_residual = 0.0;
};

inline ProfileFit green_profile_check(int i, const LatticeConstants& k, int samples = 100,
                                      std::uint64_t seed = 9, const GreenParams& params = {}) {
    const HomogeneousMap F = calibrated_lift(i, k);
    Rng rng(derive_seed(seed, "profile"));
    std::vector<double> xs, ys;
    int accepted = 0;
    while (accepted < samples) {
        const cplx x = rng.uniform_complex(0.0, 1.0);
        const cplx y = rng.uniform_complex(0.0, 1.0);
        const Vec3 L = sigma_lift(x, y, k);
        if (max_abs(L) < 1e-12) continue;
        const double s = 0.5 * kPi * (std::norm(x) + std::norm(y));
        xs.push_back(s);
        ys.push_back(green(F, L, params).value);
        ++accepted;
    }
    // least squares line
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        sx += xs[j];
        sy += ys[j];
        sxx += xs[j] * xs[j];
        sxy += xs[j] * ys[j];
    }
    ProfileFit fit;
    fit.lambda = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.C = (sy - fit.lambda * sx) / n;
    for (std::size_t j = 0; j < xs.size(); ++j)
        fit.max_residual = std::max(fit.max_residual, std::abs(ys[j] - fit.C - fit.lambda * xs[j]));
    return fit;
}

// A point of {G = 0}: z = u * lift(x) with log u = -(pi/2) lambda ||x||^2
// (delta = 1 and the free phase of u fixed to 0).
inline Vec3 boundary_sample(int i, const LatticeConstants& k, double lambda, const Vec2& x) {
    (void)i;
    const Vec3 L = sigma_lift(x[0], x[1], k);
    if (max_abs(L) < 1e-12)
        throw degenerate_orbit_error("boundary_sample: lift coordinates vanish at x");
    const double logu = -0.5 * kPi * lambda * (std::norm(x[0]) + std::norm(x[1]));
    return std::exp(logu) * L;
}

// ---------------------------------------------------------------------------
// Boundary slice grids

// Affine real-2-parameter slice z(s, t) = origin + s * es + t * et of C^3.
struct SliceSpec {
    Vec3 origin{0.0, 0.0, 0.0};
    Vec3 es{0.0, 0.0, 0.0};
    Vec3 et{0.0, 0.0, 0.0};
    double smin = -2.0, smax = 2.0;
    double tmin = -2.0, tmax = 2.0;
};

struct SliceGrid {
    int resolution = 0;
    SliceSpec spec;
    std::vector<double> values;   // row-major, NaN marks a degenerate orbit
    std::vector<double> sparams;  // per column
    std::vector<double> tparams;  // per row

    double min_finite() const {
        double m = 1e300;
        for (double v : values)
            if (std::isfinite(v)) m = std::min(m, v);
        return m;
    }
    double max_finite() const {
        double m = -1e300;
        for (double v : values)
            if (std::isfinite(v)) m = std::max(m, v);
        return m;
    }
    int zero_crossing_cells() const {
        int count = 0;
        for (int r = 0; r + 1 < resolution; ++r)
            for (int c = 0; c + 1 < resolution; ++c) {
                const double a = values[r * resolution + c];
                const double b = values[r * resolution + c + 1];
                const double d = values[(r + 1) * resolution + c];
                if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(d)) continue;
                if ((a <= 0) != (b <= 0) || (a <= 0) != (d <= 0)) ++count;
            }
        return count;
    }
};

inline SliceGrid boundary_slice_grid(const HomogeneousMap& F, const SliceSpec& spec, int resolution,
                                     const GreenParams& params = {}) {
    if (resolution < 1 || resolution > 4096)
        throw std::invalid_argument("boundary_slice_grid: resolution must be in [1, 4096]");
    SliceGrid grid;
    grid.resolution = resolution;
    grid.spec = spec;
    grid.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
    grid.sparams.resize(resolution);
    grid.tparams.resize(resolution);
    for (int j = 0; j < resolution; ++j) {
        grid.sparams[j] = spec.smin + (spec.smax - spec.smin) * (j + 0.5) / resolution;
        grid.tparams[j] = spec.tmin + (spec.tmax - spec.tmin) * (j + 0.5) / resolution;
    }
    // rows are independent; results land in disjoint slots so the output is
    // deterministic regardless of the thread partition
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int nthreads = static_cast<int>(std::min<unsigned>(hw, 8));
    auto worker = [&](int r0, int r1) {
        for (int r = r0; r < r1; ++r) {
            for (int c = 0; c < resolution; ++c) {
                const Vec3 z = grid.spec.origin + cplx(grid.sparams[c]) * grid.spec.es +
                               cplx(grid.tparams[r]) * grid.spec.et;
                double v;
                try {
                    v = green(F, z, params).value;
                } catch (const std::exception&) {
                    v = std::numeric_limits<double>::quiet_NaN();
                }
                grid.values[static_cast<std::size_t>(r) * resolution + c] = v;
            }
        }
    };
    if (nthreads <= 1 || resolution < 16) {
        worker(0, resolution);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (resolution + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const int r0 = t * chunk, r1 = std::min(resolution, r0 + chunk);
            if (r0 < r1) pool.emplace_back(worker, r0, r1);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Deterministic exports (temp file + rename)

namespace detail {

inline void atomic_write(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

inline std::string grid_csv_bytes(const SliceGrid& grid) {
    std::string out = "row,col,re_param,im_param,green_value\n";
    char buf[160];
    for (int r = 0; r < grid.resolution; ++r)
        for (int c = 0; c < grid.resolution; ++c) {
            const double v = grid.values[static_cast<std::size_t>(r) * grid.resolution + c];
            std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g,%.17g\n", r, c, grid.sparams[c],
                          grid.tparams[r], v);
            out += buf;
        }
    return out;
}

// P6 pixmap: basin interior (G <= 0) in blue scaled by depth, exterior in warm
// tones scaled by G, degenerate cells black.
inline std::string grid_ppm_bytes(const SliceGrid& grid) {
    const double lo = grid.min_finite(), hi = grid.max_finite();
    const double neg_scale = std::max(1e-12, -lo);
    const double pos_scale = std::max(1e-12, hi);
    std::string out = "P6\n" + std::to_string(grid.resolution) + " " +
                      std::to_string(grid.resolution) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(grid.resolution) * grid.resolution * 3);
    for (int r = 0; r < grid.resolution; ++r) {
        for (int c = 0; c < grid.resolution; ++c) {
            const double v = grid.values[static_cast<std::size_t>(r) * grid.resolution + c];
            unsigned char rgb[3] = {0, 0, 0};
            if (std::isfinite(v)) {
                if (v <= 0.0) {
                    const double t = std::min(1.0, -v / neg_scale);
                    rgb[0] = static_cast<unsigned char>(20 + 30 * (1.0 - t));
                    rgb[1] = static_cast<unsigned char>(40 + 110 * (1.0 - t));
                    rgb[2] = static_cast<unsigned char>(120 + 135 * (1.0 - t));
                } else {
                    const double t = std::min(1.0, v / pos_scale);
                    rgb[0] = static_cast<unsigned char>(140 + 115 * t);
                    rgb[1] = static_cast<unsigned char>(80 + 120 * t);
                    rgb[2] = static_cast<unsigned char>(30 + 40 * t);
                }
            }
            out.append(reinterpret_cast<const char*>(rgb), 3);
        }
    }
    return out;
}

inline void write_grid_csv(const SliceGrid& grid, const std::string& path) {
    detail::atomic_write(path, grid_csv_bytes(grid));
}

inline void write_grid_ppm(const SliceGrid& grid, const std::string& path) {
    detail::atomic_write(path, grid_ppm_bytes(grid));
}

}  // namespace lattes
