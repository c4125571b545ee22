#include "beta_arena/complex_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beta_arena {

namespace {

constexpr double kQuarter = std::numbers::pi / 4.0;

struct Trig {
    double c, s, c2, s2;
};

Trig trig(double theta) {
    const double t = canonical_angle(theta);
    return {std::cos(t), std::sin(t), std::cos(2.0 * t), std::sin(2.0 * t)};
}

double weight(int j, double theta) {
    return std::abs(std::cos(j * theta)) + std::abs(std::sin(j * theta));
}

template <typename F>
double bisect(F f, double lo, double hi, int iterations = 200) {
    const bool lo_negative = f(lo) < 0.0;
    for (int it = 0; it < iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ((f(mid) < 0.0) == lo_negative ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double canonical_angle(double theta) {
    const double half_pi = std::numbers::pi / 2.0;
    double t = std::fmod(theta, half_pi);
    if (t < 0.0) t += half_pi;
    if (t > kQuarter) t = half_pi - t;
    return t;
}

double ComplexBase::trig_weight(int j) const { return weight(j, theta_canon); }

ExpansionSystem complex_system(double r, double theta, double lo, Tolerance tol, AmbiguityPolicy policy) {
    return ExpansionSystem(Quaternion::polar(r, theta), LatticeDomain::standard(2, lo), tol, policy);
}

ExpansionSystem ComplexBase::system(AmbiguityPolicy policy) const {
    return complex_system(r, theta, -0.5, tol, policy);
}

ComplexBase make_complex_base(double r, double theta, Tolerance tol) {
    if (!(r > 1.0)) throw PreconditionError("modulus must exceed 1");
    tol.validate();
    ComplexBase base;
    base.r = r;
    base.theta = theta;
    base.theta_canon = canonical_angle(theta);
    base.c = std::cos(base.theta_canon);
    base.s = std::sin(base.theta_canon);
    base.tol = tol;
    try {
        const DigitSetClass cls = classify_digit_set(r, theta, tol);
        if (cls.square) base.N = cls.N;
    } catch (const AmbiguousRegion&) {
    }
    return base;
}

Quaternion xi_digit(const ComplexBase& base, const Quaternion& z) {
    if (!base.system().domain().contains(z)) throw PreconditionError("z outside [-1/2, 1/2)^2");
    return base.system().step(z).digit;
}

DigitSetClass classify_digit_set(double r, double theta, const Tolerance& tol) {
    if (!(r > 1.0)) throw PreconditionError("modulus must exceed 1");
    const Trig t = trig(theta);
    const double cs = t.c + t.s;
    const int N = static_cast<int>(std::ceil((r * cs + 1.0) / 2.0)) - 1;
    const double lower = (2.0 * N - 1.0) * cs;
    const double upper = (2.0 * N + 1.0) / cs;
    const double previous_upper = (2.0 * N - 1.0) / cs;
    for (double edge : {lower, upper, previous_upper})
        if (std::abs(r - edge) <= tol.eps_cmp * std::max(1.0, r))
            throw AmbiguousRegion("radius on a square-digit-set boundary");
    return {lower < r && r <= upper, N};
}

double u_threshold(int N, double theta) {
    if (N < 1) throw PreconditionError("N must be >= 1");
    const Trig t = trig(theta);
    return (2.0 * N + 1.0) / (t.c + t.s);
}

double f_poly(int N, int k, double theta, double r) {
    const double t = canonical_angle(theta);
    double sum = 0.0;
    for (int j = 1; j <= k - 1; ++j) sum += std::pow(r, k - j) * weight(j, t);
    return std::pow(r, k) - 2.0 * N * sum - weight(k, t);
}

double v_threshold(int N, int k, double theta) {
    if (N < 1 || k < 1) throw PreconditionError("N and k must be >= 1");
    const Trig t = trig(theta);
    if (k == 1) return t.c + t.s;
    auto f = [&](double r) { return f_poly(N, k, theta, r); };
    double hi = 2.0 * N * (t.c + t.s) * k + 2.0;
    while (f(hi) <= 0.0) hi *= 2.0;
    return bisect(f, 1.0, hi);
}

double v2_closed_form(int N, double theta) {
    const Trig t = trig(theta);
    const double cs = t.c + t.s;
    return N * cs + std::sqrt(N * N * cs * cs + std::abs(t.c2) + std::abs(t.s2));
}

CkResult check_Ck(const ComplexBase& base, int k) {
    if (!base.N) throw PreconditionError("digit set is not square");
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (k == 1) return {base.r >= base.c + base.s, true};
    return {base.r > v_threshold(*base.N, k, base.theta_canon), k <= 2};
}

double discriminant(double theta) {
    const Trig t = trig(theta);
    const double cs = t.c + t.s;
    return 4.0 * (1.0 - t.s2) * (1.0 - t.s2) - 16.0 * t.s2 * ((t.c2 + t.s2) * cs * cs - 1.0);
}

double F_poly(double N, double theta) {
    const Trig t = trig(theta);
    const double cs = t.c + t.s;
    return 4.0 * t.s2 * N * N - 2.0 * (1.0 - t.s2) * N + ((t.c2 + t.s2) * cs * cs - 1.0);
}

std::optional<std::pair<double, double>> L_roots(double theta) {
    const Trig t = trig(theta);
    const double disc = discriminant(theta);
    if (t.s2 <= 0.0 || disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    return std::pair{(2.0 * (1.0 - t.s2) - root) / (8.0 * t.s2), (2.0 * (1.0 - t.s2) + root) / (8.0 * t.s2)};
}

double delta_poly(double x) {
    const double x2 = x * x, x4 = x2 * x2;
    return x4 * x4 + 16.0 * x4 * x2 * x + 30.0 * x4 - 16.0 * x + 1.0;
}

GammaConstants gamma_constants() {
    GammaConstants g;
    constexpr int samples = 10000;
    // Largest sampled angle with a positive discriminant, then refine.
    double last_positive = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double th = kQuarter * i / samples;
        if (discriminant(th) > 0.0) last_positive = th;
    }
    g.gamma1 = bisect(discriminant, last_positive, std::min(kQuarter, last_positive + kQuarter / samples));

    double prev = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        if ((delta_poly(prev) > 0.0) != (delta_poly(x) > 0.0)) {
            g.delta = bisect(delta_poly, prev, x);
            break;
        }
        prev = x;
    }
    g.gamma2 = 2.0 * std::atan(g.delta);
    return g;
}

std::vector<RadiusInterval> G_region(double theta, int cap) {
    if (theta < 0.0 || theta >= kQuarter) throw PreconditionError("theta must lie in [0, pi/4)");
    std::vector<RadiusInterval> out;
    if (theta == 0.0) {
        for (int N = 1; N <= cap; ++N) out.push_back({N, N + std::sqrt(N * N + 1.0), 2.0 * N + 1.0});
        return out;
    }
    if (theta >= gamma_constants().gamma2) return out;
    const auto roots = L_roots(theta);
    if (!roots) return out;
    const int top = static_cast<int>(std::ceil(roots->second)) - 1;
    for (int N = 1; N <= top; ++N) out.push_back({N, v2_closed_form(N, theta), u_threshold(N, theta)});
    return out;
}

std::vector<Quaternion> snake_order(int N) {
    if (N < 1) throw PreconditionError("N must be >= 1");
    std::vector<Quaternion> out;
    out.reserve((2 * N + 1) * (2 * N + 1));
    for (int s = 0; s <= 2 * N; ++s) {
        const double sign = s % 2 == 0 ? -1.0 : 1.0;
        for (int t = 1; t <= 2 * N + 1; ++t) out.push_back(Quaternion::complex(sign * (N + 1 - t), -N + s));
    }
    return out;
}

bool block_square_contained(const ComplexBase& base, const std::vector<Quaternion>& block) {
    const Quaternion xi_inv = base.xi().inverse();
    const LatticeDomain domain = LatticeDomain::standard(2, -0.5);
    const double slack = 1e-12;
    const int m = static_cast<int>(block.size());
    for (const Quaternion& P : domain.corners()) {
        // Horner from the innermost term outward; acc_i is the image after i shifts.
        Quaternion acc = xi_inv * P;
        if (!domain.contains_closure(acc, slack)) return false;
        for (int i = m - 1; i >= 0; --i) {
            acc = xi_inv * (block[i] + acc);
            if (!domain.contains_closure(acc, slack)) return false;
        }
    }
    return true;
}

namespace {

void extend_squares(const ComplexBase& base, const std::vector<Quaternion>& digits, int length,
                    std::vector<Quaternion>& prefix, std::vector<VkSquare>& out) {
    if (static_cast<int>(prefix.size()) == length) {
        VkSquare sq;
        sq.block = prefix;
        const Quaternion xi_inv = base.xi().inverse();
        Quaternion center;
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) center = xi_inv * (*it + center);
        sq.center = center;
        sq.side = std::pow(base.r, -(length + 1));
        sq.inradius = sq.side / 2.0;
        out.push_back(std::move(sq));
        return;
    }
    for (const Quaternion& d : digits) {
        prefix.push_back(d);
        if (block_square_contained(base, prefix)) extend_squares(base, digits, length, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<VkSquare> Vk_squares(const ComplexBase& base, int k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (!base.N) throw PreconditionError("digit set is not square");
    for (int n = 1; n <= k; ++n)
        if (!check_Ck(base, n).holds)
            throw PreconditionError("(C_" + std::to_string(n) + ") does not hold");
    std::vector<VkSquare> out;
    std::vector<Quaternion> prefix;
    extend_squares(base, snake_order(*base.N), k - 1, prefix, out);
    return out;
}

}  // namespace beta_arena
