#include "beta_arena/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beta_arena {

namespace {

void check_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) throw PreconditionError(std::string(name) + " must lie in (0, 1)");
}

}  // namespace

double A_threshold(double b, int K, double alpha, const Tolerance& tol) {
    if (!(b > 1.0)) throw PreconditionError("base must exceed 1");
    if (K < 0) throw PreconditionError("K must be >= 0");
    check_unit(alpha, "alpha");
    const double w = K * b + 2.0 * b;
    const double den = alpha * ((4.0 * w - 1.0) - alpha * (2.0 * w - 1.0));
    if (std::abs(den) <= tol.eps_cmp) throw PreconditionError("A_b(alpha): denominator vanishes");
    return ((2.0 * w + 1.0) * alpha - 1.0) / den;
}

double F_threshold(double r, double alpha, const Tolerance& tol) {
    if (!(r > 1.0)) throw PreconditionError("modulus must exceed 1");
    check_unit(alpha, "alpha");
    const double s = 2.0 * std::numbers::sqrt2 * r;
    const double den = alpha * ((1.0 - s) * alpha + (2.0 * s - 1.0));
    if (std::abs(den) <= tol.eps_cmp) throw PreconditionError("F_r(alpha): denominator vanishes");
    return ((s + 1.0) * alpha - 1.0) / den;
}

double capture_term(double alpha, double beta) {
    return alpha - 2.0 * alpha * beta * (1.0 - alpha) / (1.0 - alpha * beta);
}

std::optional<NKPair> find_nk_core(double c, double lower, double upper, double alpha_beta, double base, int k_min,
                                   double margin, int n_max, int k_max) {
    if (!(c > 0.0) || !(alpha_beta > 0.0 && alpha_beta < 1.0) || !(base > 1.0)) return std::nullopt;
    if (!(upper - margin > std::max(lower, 0.0) + margin)) return std::nullopt;
    const double log_c = std::log(c), log_ab = std::log(alpha_beta), log_base = std::log(base);
    const double log_up = std::log(upper - margin);
    for (int n = 1; n <= n_max; ++n) {
        // middle(k) = exp(log_c - n log_ab - (k-1) log_base) is decreasing in k.
        const double need = (log_c - n * log_ab - log_up) / log_base;
        const int first = std::max(k_min, static_cast<int>(std::floor(need)) + 1);
        const int k_lo = std::max(k_min, first - 1);
        const int k_hi = std::min(k_max, std::max(k_lo, first + 1));
        for (int k = k_lo; k <= k_hi; ++k) {
            const double middle = std::exp(log_c - n * log_ab - (k - 1) * log_base);
            if (middle < upper - margin && middle > lower + margin) return NKPair{n, k};
        }
    }
    return std::nullopt;
}

std::optional<NKPair> find_nk_real(double b, int K, double alpha, double beta, double rho, const Tolerance& tol) {
    check_unit(alpha, "alpha");
    check_unit(beta, "beta");
    if (!(rho > 0.0)) throw PreconditionError("rho must be positive");
    const double lower = 2.0 * (K + 2.0) * b * capture_term(alpha, beta);
    return find_nk_core((K + 2.0) / rho, lower, 1.0 - alpha, alpha * beta, b, 2, 10.0 * tol.eps_cmp);
}

std::optional<NKPair> find_nk_componentwise(double q, int K, double alpha, double beta, double rho,
                                            const Tolerance& tol) {
    check_unit(alpha, "alpha");
    check_unit(beta, "beta");
    if (!(rho > 0.0)) throw PreconditionError("rho must be positive");
    const double lower = 2.0 * (K + 2.0) * (2.0 * q) * capture_term(alpha, beta);
    return find_nk_core(2.0 * (K + 2.0) / rho, lower, 1.0 - alpha, alpha * beta, q, 2, 10.0 * tol.eps_cmp);
}

ComplexSides complex_inequality(double r, int n, int k, double alpha, double beta, double rho) {
    return {2.0 * capture_term(alpha, beta), 1.0 / (rho * std::pow(alpha * beta, n) * std::pow(r, k)),
            (1.0 - alpha) / (std::numbers::sqrt2 * r)};
}

std::optional<NKPair> find_nk_complex(double r, std::span<const int> k_candidates, double alpha, double beta,
                                      double rho, const Tolerance& tol) {
    check_unit(alpha, "alpha");
    check_unit(beta, "beta");
    if (!(rho > 0.0)) throw PreconditionError("rho must be positive");
    const double margin = 10.0 * tol.eps_cmp;
    const int n_max = (2.0 - alpha) * beta >= 1.0 ? 1 : kSearchBound;
    std::optional<NKPair> best;
    for (int k : k_candidates) {
        const auto found = find_nk_core(1.0 / (rho * r), 2.0 * capture_term(alpha, beta),
                                        (1.0 - alpha) / (std::numbers::sqrt2 * r), alpha * beta, r, k, margin, n_max, k);
        if (found && (!best || found->n < best->n)) best = found;
    }
    return best;
}

}  // namespace beta_arena
