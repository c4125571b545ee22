#include "beta_arena/numeric.hpp"

#include <cstdio>
#include <limits>

namespace beta_arena {

Quaternion Quaternion::inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw PreconditionError("inverse of zero quaternion");
    return conj() / n2;
}

Quaternion qpow(const Quaternion& q, int n) {
    Quaternion base = n < 0 ? q.inverse() : q;
    unsigned e = n < 0 ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
    Quaternion result{1.0};
    while (e) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

std::string to_string(const Quaternion& q, int dim) {
    static constexpr const char* units[] = {"", "i", "j", "k"};
    std::string out;
    for (int i = 0; i < dim; ++i) {
        const double v = q[i];
        if (v == 0.0) continue;
        char buf[64];
        if (out.empty())
            std::snprintf(buf, sizeof buf, "%.12g%s", v, units[i]);
        else
            std::snprintf(buf, sizeof buf, "%s%.12g%s", v < 0 ? "-" : "+", std::abs(v), units[i]);
        out += buf;
    }
    return out.empty() ? "0" : out;
}

void Tolerance::validate() const {
    if (!(eps_floor > 0.0 && eps_floor < 0.25))
        throw std::invalid_argument("eps_floor must lie in (0, 1/4)");
    if (!(eps_cmp > 0.0 && eps_cmp < eps_floor))
        throw std::invalid_argument("eps_cmp must lie in (0, eps_floor)");
}

FloorResult safe_floor(double x, const Tolerance& tol) {
    if (!std::isfinite(x)) throw std::domain_error("safe_floor: non-finite input");
    const double f = std::floor(x);
    const double dist = std::min(x - f, f + 1.0 - x);
    return {static_cast<std::int64_t>(f), dist <= tol.eps_floor};
}

AmbiguousDigit::AmbiguousDigit(int step, double value)
    : std::runtime_error("ambiguous digit at step " + std::to_string(step) +
                         " (coordinate " + std::to_string(value) + " near a cell face)"),
      step_(step), value_(value) {}

CoordinateFloor digit_floor(double x, const Tolerance& tol, AmbiguityPolicy policy, int step) {
    const FloorResult fr = safe_floor(x, tol);
    if (!fr.ambiguous) return {fr.n, x - static_cast<double>(fr.n)};
    const double nearest = std::round(x);
    if (x == nearest) return {static_cast<std::int64_t>(nearest), 0.0};
    if (policy == AmbiguityPolicy::Throw) throw AmbiguousDigit(step, x);
    return {static_cast<std::int64_t>(nearest), 0.0};
}

double metallic_mean(int j) {
    if (j < 1) throw std::invalid_argument("metallic_mean: index must be >= 1");
    const double jd = j;
    return (jd + std::sqrt(jd * jd + 4.0)) / 2.0;
}

double tribonacci_like_base() {
    double lo = 2.0, hi = 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mid * mid * mid - 2.0 * mid * mid - 1.0 > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace beta_arena
