#include "beta_arena/real_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beta_arena {

std::string to_string(std::span<const int> digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(digits[i]);
    }
    return out;
}

int digit_bound(double b) {
    if (!(b > 1.0)) throw PreconditionError("base must exceed 1");
    const double f = std::floor(b);
    return f == b ? static_cast<int>(b) - 1 : static_cast<int>(f);
}

namespace {

int trusted_depth(double b, const Tolerance& tol) {
    const double u = std::numeric_limits<double>::epsilon() / 2.0;
    return std::max(1, static_cast<int>(std::floor(std::log(tol.eps_floor / (4.0 * u)) / std::log(b))));
}

// Greedy expansion of 1 up to `depth` digits; the second member reports termination.
std::pair<DigitSequence, bool> greedy_expansion_of_one(double b, int depth, const Tolerance& tol) {
    const int trusted = trusted_depth(b, tol);
    DigitSequence out;
    double x = 1.0;
    for (int k = 1; k <= depth; ++k) {
        const double y = b * x;
        const auto policy = k <= trusted ? AmbiguityPolicy::NudgeInward : AmbiguityPolicy::Throw;
        CoordinateFloor f;
        try {
            f = digit_floor(y, tol, policy, k);
        } catch (const AmbiguousDigit&) {
            f = {static_cast<std::int64_t>(std::floor(y)), y - std::floor(y)};
        }
        out.push_back(static_cast<int>(f.n));
        x = f.fraction;
        if (x == 0.0 && k <= trusted) return {out, true};
    }
    return {out, false};
}

}  // namespace

DigitSequence quasi_greedy_of_one(double b, int depth, Tolerance tol) {
    return make_real_base(b, depth, tol).c_prefix;
}

RealBase make_real_base(double b, int depth, Tolerance tol) {
    tol.validate();
    RealBase base;
    base.b = b;
    base.tol = tol;
    base.digit_max = digit_bound(b);
    depth = std::max(depth, 2);

    auto [greedy, terminates] = greedy_expansion_of_one(b, depth, tol);
    base.greedy_one = greedy;
    base.greedy_one_terminates = terminates;
    if (terminates) {
        base.c_period = greedy;
        base.c_period.back() -= 1;
        base.reliable_depth = std::numeric_limits<int>::max();
        for (int i = 0; i < depth; ++i) base.c_prefix.push_back(base.c_period[i % base.c_period.size()]);
        base.d_prime = *std::min_element(base.c_period.begin(), base.c_period.end());
    } else {
        base.c_prefix = greedy;
        base.reliable_depth = std::min<int>(depth, trusted_depth(b, tol));
        base.d_prime = *std::min_element(base.c_prefix.begin(), base.c_prefix.begin() + base.reliable_depth);
    }
    const IKResult ik = compute_iK(base, depth);
    base.i_b = ik.i_b;
    base.K_b = ik.K_b;
    return base;
}

int RealBase::c(int i) const {
    if (i < 1) throw PreconditionError("quasi-greedy index is 1-based");
    if (!c_period.empty()) return c_period[(i - 1) % c_period.size()];
    if (i > reliable_depth)
        throw PreconditionError("quasi-greedy digit " + std::to_string(i) + " is beyond the trusted depth " +
                                std::to_string(reliable_depth));
    return c_prefix[i - 1];
}

ExpansionSystem RealBase::system(AmbiguityPolicy policy) const {
    return ExpansionSystem(Quaternion(b), LatticeDomain::standard(1, 0.0), tol, policy);
}

DigitSequence digits(const RealBase& base, double x, int n, AmbiguityPolicy policy) {
    if (!(x >= 0.0 && x < 1.0)) throw PreconditionError("x must lie in [0, 1)");
    const auto steps = base.system(policy).expand(Quaternion(x), n);
    DigitSequence out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(static_cast<int>(s.digit_coords[0]));
    return out;
}

IKResult compute_iK(const RealBase& base, int depth) {
    if (std::floor(base.b) == base.b) return {0, 0};
    // Expansion of b - floor(b) = digits 2, 3, ... of the greedy expansion of 1.
    const DigitSequence& g = base.greedy_one;
    auto longest_zero_run = [](auto first, auto last) {
        int best = 0, run = 0;
        for (auto it = first; it != last; ++it) {
            run = *it == 0 ? run + 1 : 0;
            best = std::max(best, run);
        }
        return best;
    };
    if (base.greedy_one_terminates) {
        const int i = static_cast<int>(g.size()) - 1;
        return {i, longest_zero_run(g.begin() + 1, g.end())};
    }
    const int seen = std::min<int>({depth, base.reliable_depth, static_cast<int>(g.size())});
    return {std::nullopt, longest_zero_run(g.begin() + 1, g.begin() + std::max(1, seen))};
}

double block_value(std::span<const int> block, double b) {
    double acc = 0.0;
    for (auto it = block.rbegin(); it != block.rend(); ++it) acc = (acc + *it) / b;
    return acc;
}

int lex_compare(std::span<const int> lhs, std::span<const int> rhs) {
    const std::size_t n = std::min(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < n; ++i)
        if (lhs[i] != rhs[i]) return lhs[i] < rhs[i] ? -1 : 1;
    return 0;
}

namespace {

// Suffix starting at `start` compared with the quasi-greedy prefix of equal length.
bool suffix_ok(const RealBase& base, std::span<const int> block, std::size_t start) {
    for (std::size_t i = start; i < block.size(); ++i) {
        const int ci = base.c(static_cast<int>(i - start + 1));
        if (block[i] != ci) return block[i] < ci;
    }
    return true;
}

}  // namespace

bool is_admissible(const RealBase& base, std::span<const int> block) {
    for (int a : block)
        if (a < 0 || a > base.digit_max) throw PreconditionError("digit outside {0, ..., s_b}");
    for (std::size_t j = 0; j < block.size(); ++j)
        if (!suffix_ok(base, block, j)) return false;
    return true;
}

namespace {

void extend_admissible(const RealBase& base, DigitSequence& prefix, int n, double window_lo, double window_hi,
                       double value, double scale, std::vector<DigitSequence>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    const double next_scale = scale / base.b;
    for (int a = 0; a <= base.digit_max; ++a) {
        prefix.push_back(a);
        // Only the suffixes ending at the new digit need checking.
        bool ok = true;
        for (std::size_t j = 0; j < prefix.size() && ok; ++j) ok = suffix_ok(base, prefix, j);
        const double v = value + a * next_scale;
        if (ok && v <= window_hi && v + next_scale >= window_lo)
            extend_admissible(base, prefix, n, window_lo, window_hi, v, next_scale, out);
        prefix.pop_back();
        if (!ok) break;  // larger digits fail too
    }
}

std::vector<DigitSequence> admissible_in_window(const RealBase& base, int n, double lo, double hi) {
    std::vector<DigitSequence> out;
    DigitSequence prefix;
    extend_admissible(base, prefix, n, lo, hi, 0.0, 1.0, out);
    return out;
}

}  // namespace

std::vector<DigitSequence> enumerate_admissible(const RealBase& base, int n) {
    if (n < 1) throw PreconditionError("block length must be >= 1");
    return admissible_in_window(base, n, -1.0, 2.0);
}

bool in_E(const RealBase& base, std::span<const int> block, int d) {
    if (d > base.d_prime) throw PreconditionError("digit exceeds the minimal quasi-greedy digit d'");
    DigitSequence tail(block.begin(), block.end());
    tail.push_back(d + 1);
    for (std::size_t j = 0; j + 1 < tail.size(); ++j) {
        const std::span<const int> suffix(tail.data() + j, tail.size() - j);
        if (block_value(suffix, base.b) > 1.0 + base.tol.eps_cmp) return true;
    }
    return false;
}

double cylinder_upper_end(const RealBase& base, std::span<const int> block_with_d) {
    const int k = static_cast<int>(block_with_d.size());
    DigitSequence next(block_with_d.begin(), block_with_d.end());
    next.back() += 1;
    double lo = block_value(block_with_d, base.b);
    double hi = std::min(block_value(next, base.b), 1.0);
    Tolerance fine{1e-15, 1e-16};
    RealBase probe = base;
    probe.tol = fine;
    const ExpansionSystem sys = probe.system(AmbiguityPolicy::NudgeInward);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const auto steps = sys.expand(Quaternion(mid), k);
        bool agree = true;
        for (int j = 0; j < k && agree; ++j) agree = steps[j].digit_coords[0] == block_with_d[j];
        (agree ? lo : hi) = mid;
    }
    return hi;
}

std::vector<CylinderInterval> cylinder_intervals(const RealBase& base, int d, int k) {
    return cylinder_intervals(base, d, k, -1.0, 2.0);
}

std::vector<CylinderInterval> cylinder_intervals(const RealBase& base, int d, int k, double window_lo,
                                                 double window_hi) {
    if (k < 2) throw PreconditionError("cylinder depth k must be >= 2");
    if (d < 0 || d > base.d_prime) throw PreconditionError("digit exceeds the minimal quasi-greedy digit d'");
    const double reach = std::pow(base.b, -(k - 1));
    std::vector<CylinderInterval> out;
    for (const auto& block : admissible_in_window(base, k - 1, window_lo - reach, window_hi)) {
        CylinderInterval ci;
        ci.block = block;
        ci.block.push_back(d);
        ci.lo = block_value(ci.block, base.b);
        ci.full_length = !in_E(base, block, d);
        if (ci.full_length) {
            DigitSequence next = ci.block;
            next.back() += 1;
            ci.hi = block_value(next, base.b);
        } else {
            ci.hi = cylinder_upper_end(base, ci.block);
        }
        if (ci.hi < window_lo || ci.lo > window_hi) continue;
        out.push_back(std::move(ci));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace beta_arena
