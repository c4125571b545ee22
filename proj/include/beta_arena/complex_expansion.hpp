#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beta_arena/lattice.hpp"
#include "beta_arena/numeric.hpp"

namespace beta_arena {

/// theta reduced into [0, pi/4] by quarter turns and the reflection theta -> pi/2 - theta,
/// under which every threshold below is invariant.
double canonical_angle(double theta);

/// xi = r e^{i theta} on the centred square [-1/2, 1/2)^2 over Z[i].
struct ComplexBase {
    double r = 2.0;
    double theta = 0.0;        ///< argument of xi as given
    double theta_canon = 0.0;  ///< canonical angle in [0, pi/4]
    double c = 1.0;            ///< max(|cos|, |sin|) of theta
    double s = 0.0;            ///< min(|cos|, |sin|) of theta
    std::optional<int> N;      ///< size of the square digit set, when square
    Tolerance tol;

    Quaternion xi() const { return Quaternion::polar(r, theta); }

    /// |cos(j theta)| + |sin(j theta)|.
    double trig_weight(int j) const;

    ExpansionSystem system(AmbiguityPolicy policy = AmbiguityPolicy::Throw) const;
};

/// Throws PreconditionError for r <= 1. N is filled in when the digit set is square.
ComplexBase make_complex_base(double r, double theta, Tolerance tol = {});

/// Expansion system on [lo, lo + 1)^2 (lo = -1/2 centred, 0 for the unit square).
ExpansionSystem complex_system(double r, double theta, double lo, Tolerance tol = {},
                               AmbiguityPolicy policy = AmbiguityPolicy::Throw);

/// d(z) = floor(Re(xi z) + 1/2) + floor(Im(xi z) + 1/2) i.
Quaternion xi_digit(const ComplexBase& base, const Quaternion& z);

struct DigitSetClass {
    bool square = false;
    int N = 0;
};

/// Square iff (2N - 1)(c + s) < r <= (2N + 1)/(c + s) with N = ceil((r(c + s) + 1)/2) - 1.
/// Throws AmbiguousRegion within eps_cmp of a region boundary.
DigitSetClass classify_digit_set(double r, double theta, const Tolerance& tol = {});

class AmbiguousRegion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double u_threshold(int N, double theta);

/// f_N^{(k)}(r).
double f_poly(int N, int k, double theta, double r);

/// Unique positive root of f_N^{(k)}; k = 1 gives c + s.
double v_threshold(int N, int k, double theta);

/// N(c + s) + sqrt(N^2 (c + s)^2 + c^{(2)} + s^{(2)}).
double v2_closed_form(int N, double theta);

struct CkResult {
    bool holds = false;
    bool certified = false;
};

/// Requires a square digit set.
CkResult check_Ck(const ComplexBase& base, int k);

struct GammaConstants {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double delta = 0.0;
};

GammaConstants gamma_constants();

/// 4(1 - s2)^2 - 16 s2 ((c2 + s2)(c + s)^2 - 1).
double discriminant(double theta);

/// F(N) = 4 s2 N^2 - 2(1 - s2) N + ((c2 + s2)(c + s)^2 - 1).
double F_poly(double N, double theta);

/// Roots L_- <= L_+ of F; empty when theta = 0 or the discriminant is negative.
std::optional<std::pair<double, double>> L_roots(double theta);

/// p(x) = x^8 + 16x^7 + 30x^4 - 16x + 1.
double delta_poly(double x);

struct RadiusInterval {
    int N = 0;
    double v = 0.0;  ///< open lower end
    double u = 0.0;  ///< closed upper end
};

/// Radii r for which (C_2) holds at theta. `cap` bounds N at theta = 0.
std::vector<RadiusInterval> G_region(double theta, int cap = 10);

/// Snake ordering of {a + bi : |a|, |b| <= N}; consecutive entries differ by 1.
std::vector<Quaternion> snake_order(int N);

struct VkSquare {
    std::vector<Quaternion> block;  ///< the k - 1 digits
    Quaternion center;
    double side = 0.0;
    double inradius = 0.0;
};

/// Squares xi^{-k} X + sum_{j<k} xi^{-j} a_j over admissible (k - 1)-blocks, in
/// lexicographic order of blocks under the snake ordering of digits.
/// Throws PreconditionError when (C_n), n <= k, is not established.
std::vector<VkSquare> Vk_squares(const ComplexBase& base, int k);

/// Corner test: every corner P of the closed square satisfies
/// sum_{j=i+1}^{m} xi^{-(j-i)} a_j + xi^{-(m+1-i)} P in closure(X) for all i.
bool block_square_contained(const ComplexBase& base, const std::vector<Quaternion>& block);

}  // namespace beta_arena
