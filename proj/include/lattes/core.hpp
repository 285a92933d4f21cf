#pragma once

// Shared scalar types, small fixed-size linear algebra, seeded sampling and
// the error types used across the library.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lattes {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_a_line_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_orbit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small vectors / matrices (2 and 3 dimensional, complex entries)

using Vec2 = std::array<cplx, 2>;
using Vec3 = std::array<cplx, 3>;

struct Mat2 {
    // row-major entries
    cplx a, b, c, d;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 scalar(cplx s) { return {s, 0.0, 0.0, s}; }
    static Mat2 diag(cplx x, cplx y) { return {x, 0.0, 0.0, y}; }

    Vec2 apply(const Vec2& v) const { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    cplx det() const { return a * d - b * c; }

    Mat2 inverse() const {
        const cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

inline Vec2 operator+(const Vec2& x, const Vec2& y) { return {x[0] + y[0], x[1] + y[1]}; }
inline Vec2 operator-(const Vec2& x, const Vec2& y) { return {x[0] - y[0], x[1] - y[1]}; }
inline Vec2 operator*(cplx s, const Vec2& x) { return {s * x[0], s * x[1]}; }

inline Vec3 operator+(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
inline Vec3 operator*(cplx s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }

inline double max_abs(const Vec2& v) { return std::max(std::abs(v[0]), std::abs(v[1])); }
inline double max_abs(const Vec3& v) {
    return std::max(std::abs(v[0]), std::max(std::abs(v[1]), std::abs(v[2])));
}

inline double norm2_sq(const Vec2& v) { return std::norm(v[0]) + std::norm(v[1]); }
inline double norm2_sq(const Vec3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

// Hermitian inner product, linear in the second argument.
inline cplx hdot(const Vec3& x, const Vec3& y) {
    return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1] + std::conj(x[2]) * y[2];
}

// Unconjugated cross product; vanishes iff the vectors are proportional.
inline Vec3 cross(const Vec3& x, const Vec3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

// ---------------------------------------------------------------------------
// Deterministic sampling
//
// std::uniform_real_distribution is implementation-defined, so uniform doubles
// are derived from a fully specified generator instead; byte-level reproducible
// output is an acceptance requirement.

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // xorshift* — small, fully specified, platform independent
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    cplx uniform_complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// Derives a stable per-check seed from a base seed and a label.
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& label) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h ? h : 1;
}

inline bool nearly_equal(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// Integer power by repeated squaring (n >= 0).
inline cplx cpow_int(cplx a, long n) {
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1) r *= a;
        a *= a;
        n >>= 1;
    }
    return r;
}

}  // namespace lattes
