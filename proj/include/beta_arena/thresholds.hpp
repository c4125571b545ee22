#pragma once

#include <optional>
#include <span>

#include "beta_arena/numeric.hpp"

namespace beta_arena {

/// A_b(alpha) = ((2(Kb+2b)+1)alpha - 1) / (alpha[(4(Kb+2b)-1) - alpha(2(Kb+2b)-1)]).
double A_threshold(double b, int K, double alpha, const Tolerance& tol = {});

/// F_r(alpha) = ((2 sqrt2 r + 1)alpha - 1) / (alpha[(1 - 2 sqrt2 r)alpha + (4 sqrt2 r - 1)]).
double F_threshold(double r, double alpha, const Tolerance& tol = {});

/// alpha - 2 alpha beta (1 - alpha)/(1 - alpha beta): half the limiting excursion of Alice's
/// ball from her locked target, in units of rho (alpha beta)^n.
double capture_term(double alpha, double beta);

struct NKPair {
    int n = 0;
    int k = 0;
};

constexpr int kSearchBound = 10000;

/// Smallest (n, k), n outer, k >= k_min inner, with
/// lower < c / ((alpha beta)^n base^{k-1}) < upper, each side by a margin.
std::optional<NKPair> find_nk_core(double c, double lower, double upper, double alpha_beta, double base,
                                   int k_min, double margin, int n_max = kSearchBound, int k_max = kSearchBound);

/// 2(Kb+2b)alpha - 4(Kb+2b)alpha beta(1-alpha)/(1-alpha beta) < (K+2)/(rho (alpha beta)^n b^{k-1}) < 1 - alpha.
std::optional<NKPair> find_nk_real(double b, int K, double alpha, double beta, double rho, const Tolerance& tol = {});

/// Per-coordinate bounds for a real radix q acting on R^4: the 1D search with the
/// reach halved, so that its solvability matches beta > A_{2q}(alpha).
std::optional<NKPair> find_nk_componentwise(double q, int K, double alpha, double beta, double rho,
                                            const Tolerance& tol = {});

/// 2 alpha - 4 alpha beta (1 - alpha)/(1 - alpha beta) <= 1/(rho (alpha beta)^n r^k) < (1 - alpha)/(sqrt2 r)
/// over the given candidate k values (those with (C_k) established). When (2 - alpha) beta >= 1 only n = 1 is tried.
std::optional<NKPair> find_nk_complex(double r, std::span<const int> k_candidates, double alpha, double beta,
                                      double rho, const Tolerance& tol = {});

/// Left and right sides of the complex inequality at (n, k).
struct ComplexSides {
    double left = 0.0;
    double middle = 0.0;
    double right = 0.0;
};
ComplexSides complex_inequality(double r, int n, int k, double alpha, double beta, double rho);

}  // namespace beta_arena
