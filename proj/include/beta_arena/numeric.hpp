#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace beta_arena {

/// Quaternion a + bi + cj + dk. Complex numbers use (a, b, 0, 0), reals (a, 0, 0, 0).
struct Quaternion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion complex(double re, double im) { return {re, im, 0.0, 0.0}; }
    static Quaternion polar(double r, double theta) {
        return {r * std::cos(theta), r * std::sin(theta), 0.0, 0.0};
    }

    constexpr double operator[](int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
    constexpr double& operator[](int i) { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }

    constexpr std::array<double, 4> components() const { return {a, b, c, d}; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm2()); }
    Quaternion inverse() const;

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}
constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}
constexpr Quaternion operator-(const Quaternion& p) { return {-p.a, -p.b, -p.c, -p.d}; }
constexpr Quaternion operator*(double s, const Quaternion& q) { return {s * q.a, s * q.b, s * q.c, s * q.d}; }
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
constexpr Quaternion operator/(const Quaternion& q, double s) { return {q.a / s, q.b / s, q.c / s, q.d / s}; }

/// Hamilton product.
constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

inline Quaternion& operator+=(Quaternion& p, const Quaternion& q) { return p = p + q; }
inline Quaternion& operator-=(Quaternion& p, const Quaternion& q) { return p = p - q; }

inline double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

/// Integer power; negative exponents use the inverse.
Quaternion qpow(const Quaternion& q, int n);

std::string to_string(const Quaternion& q, int dim = 4);

/// Half-width of the ambiguity band around integers and comparison slack.
struct Tolerance {
    double eps_floor = 1e-9;
    double eps_cmp = 1e-12;

    /// Throws std::invalid_argument unless 0 < eps_cmp < eps_floor < 1/4.
    void validate() const;
};

struct FloorResult {
    std::int64_t n = 0;
    bool ambiguous = false;
};

/// floor(x) together with a flag raised when x lies within eps_floor of an integer.
FloorResult safe_floor(double x, const Tolerance& tol);

enum class AmbiguityPolicy {
    Throw,        ///< ambiguous digit raises AmbiguousDigit
    NudgeInward,  ///< snap onto the nearest integer face of the cell
};

class AmbiguousDigit : public std::runtime_error {
public:
    AmbiguousDigit(int step, double value);
    int step() const { return step_; }
    double value() const { return value_; }

private:
    int step_;
    double value_;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CoordinateFloor {
    std::int64_t n = 0;
    double fraction = 0.0;  ///< x - n, snapped to 0 when nudged
};

/// Floor used by every digit map. Exact integers are decided (closed face of the
/// half-open cell); near-integers follow the policy.
CoordinateFloor digit_floor(double x, const Tolerance& tol, AmbiguityPolicy policy, int step);

/// phi_j = (j + sqrt(j^2 + 4)) / 2.
double metallic_mean(int j);

/// Positive root of x^3 = 2x^2 + 1; greedy expansion of 1 is 2 0 1.
double tribonacci_like_base();

}  // namespace beta_arena
