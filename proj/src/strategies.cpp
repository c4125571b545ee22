#include "beta_arena/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beta_arena {

namespace {

/// Largest admissible |q|^{n k} before the zoom q^m (y - prefix) loses too many digits.
constexpr double kZoomBudget = 1e10;

double alice_reach(const GameView& view) { return (1.0 - view.params.alpha) * view.params.radius(view.round - 1); }

double bob_reach(const GameView& view) {
    return view.params.alpha * view.params.radius(view.round - 1) - view.params.radius(view.round);
}

/// Moves z off the excluded faces of the half-open box.
Quaternion into_half_open(const LatticeDomain& domain, const Quaternion& z) {
    Coords t = domain.coordinates(domain.clamp_closure(z));
    for (int i = 0; i < domain.dim(); ++i) {
        const double top = domain.lo()[i] + 1.0;
        if (t[i] >= top) t[i] = std::nextafter(top, -std::numeric_limits<double>::infinity());
    }
    return domain.point(t);
}

}  // namespace

Quaternion move_toward(const Quaternion& from, const Quaternion& target, double max_step) {
    const Quaternion delta = target - from;
    const double dist = delta.norm();
    if (dist <= max_step) return target;
    return from + delta * (max_step / dist);
}

Quaternion AliceCenterHold::next_center(const GameView& view) { return view.bob_center(view.round - 1); }

Quaternion BobCenterHold::initial_center(const GameView&) { return start_; }
Quaternion BobCenterHold::next_center(const GameView& view) { return view.alice_center(view.round); }

BobOptimalDrift::BobOptimalDrift(Quaternion start, Quaternion direction) : start_(start) {
    const double n = direction.norm();
    if (!(n > 0.0)) throw PreconditionError("drift direction must be nonzero");
    direction_ = direction / n;
}

Quaternion BobOptimalDrift::initial_center(const GameView&) { return start_; }

Quaternion BobOptimalDrift::next_center(const GameView& view) {
    const Quaternion y = view.alice_center(view.round);
    double step = bob_reach(view);
    for (int attempt = 0; attempt < 64; ++attempt, step *= 0.5) {
        for (double sign : {1.0, -1.0}) {
            const Quaternion x = y + direction_ * (sign * step);
            if (view.space.contains_closure(x)) return x;
        }
    }
    return y;
}

Quaternion sample_legal_center(const GameView& view, const Quaternion& around, double reach, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const int dim = view.params.dim;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Quaternion offset;
        for (int i = 0; i < dim; ++i) offset[i] = unit(rng);
        if (offset.norm2() > 1.0) continue;
        const Quaternion candidate = around + reach * offset;
        if (view.space.contains_closure(candidate)) return candidate;
    }
    return around;
}

Quaternion BobRandom::initial_center(const GameView&) { return start_; }

Quaternion BobRandom::next_center(const GameView& view) {
    return sample_legal_center(view, view.alice_center(view.round), bob_reach(view), rng_);
}

Quaternion AliceRandom::next_center(const GameView& view) {
    return sample_legal_center(view, view.bob_center(view.round - 1), alice_reach(view), rng_);
}

std::optional<CylinderInterval> nearest_full_interval(const RealBase& base, int digit, int k, double x, double reach) {
    const double lo = std::max(0.0, x - reach), hi = std::min(1.0, x + reach);
    std::optional<CylinderInterval> best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (auto& iv : cylinder_intervals(base, digit, k, lo, hi)) {
        if (!iv.full_length) continue;
        const double dist = std::abs(0.5 * (iv.lo + iv.hi) - x);
        if (dist <= reach && dist < best_dist) {
            best_dist = dist;
            best = std::move(iv);
        }
    }
    return best;
}

AliceRealWinning::AliceRealWinning(RealBase base, int digit, NKPair nk)
    : base_(std::move(base)), digit_(digit), nk_(nk) {
    if (nk_.n < 1 || nk_.k < 2) throw PreconditionError("real winning strategy needs n >= 1, k >= 2");
}

Quaternion AliceRealWinning::next_center(const GameView& view) {
    const Quaternion x_prev = view.bob_center(view.round - 1);
    if (view.round <= nk_.n) return x_prev;
    const double reach = alice_reach(view);
    if (!target_) {
        target_ = nearest_full_interval(base_, digit_, nk_.k, x_prev.a, reach);
        if (!target_) throw StrategyFailure("no full-length interval of V_k within reach");
    }
    return move_toward(x_prev, Quaternion(0.5 * (target_->lo + target_->hi)), reach);
}

AliceComplexWinning::AliceComplexWinning(ComplexBase base, NKPair nk) : base_(std::move(base)), nk_(nk) {
    if (nk_.n < 1 || nk_.k < 2) throw PreconditionError("complex winning strategy needs n >= 1, k >= 2");
    if (!base_.N) throw PreconditionError("complex winning strategy needs a square digit set");
}

Quaternion AliceComplexWinning::next_center(const GameView& view) {
    const Quaternion x_prev = view.bob_center(view.round - 1);
    if (view.round <= nk_.n) return x_prev;
    const double reach = alice_reach(view);
    if (!target_) {
        const ExpansionSystem sys = base_.system(AmbiguityPolicy::NudgeInward);
        const Quaternion start = into_half_open(sys.domain(), x_prev);
        VkSquare square;
        const Quaternion xi = base_.xi();
        for (const DigitStep& s : sys.expand(start, nk_.k - 1)) square.block.push_back(s.digit);
        for (std::size_t j = 0; j < square.block.size(); ++j)
            square.center += qpow(xi, -static_cast<int>(j + 1)) * square.block[j];
        square.side = std::pow(base_.r, -nk_.k);
        square.inradius = 0.5 * square.side;
        if (!block_square_contained(base_, square.block) || distance(square.center, x_prev) > reach) {
            double best = std::numeric_limits<double>::infinity();
            std::optional<VkSquare> found;
            for (auto& candidate : Vk_squares(base_, nk_.k)) {
                const double dist = distance(candidate.center, x_prev);
                if (dist <= reach && dist < best) best = dist, found = std::move(candidate);
            }
            if (!found) throw StrategyFailure("no square of V_k within reach");
            square = std::move(*found);
        }
        target_ = std::move(square);
    }
    return move_toward(x_prev, target_->center, reach);
}

AliceComponentwiseWinning::AliceComponentwiseWinning(RealBase base, std::array<int, 4> digits, NKPair nk)
    : base_(std::move(base)), digits_(digits), nk_(nk) {
    if (nk_.n < 1 || nk_.k < 2) throw PreconditionError("componentwise strategy needs n >= 1, k >= 2");
}

Quaternion AliceComponentwiseWinning::next_center(const GameView& view) {
    const Quaternion x_prev = view.bob_center(view.round - 1);
    if (view.round <= nk_.n) return x_prev;
    const double reach = alice_reach(view);
    if (!target_) {
        Quaternion target;
        for (int i = 0; i < 4; ++i) {
            const auto iv = nearest_full_interval(base_, digits_[i], nk_.k, x_prev[i], 0.5 * reach);
            if (!iv) throw StrategyFailure("no full-length interval within reach in coordinate " + std::to_string(i));
            target[i] = 0.5 * (iv->lo + iv->hi);
        }
        target_ = target;
    }
    return move_toward(x_prev, *target_, reach);
}

BobAvoidDigit::BobAvoidDigit(ExpansionSystem system, DomainConstants constants, int block_length)
    : system_(system.with_policy(AmbiguityPolicy::NudgeInward)), constants_(constants), block_length_(block_length) {
    if (block_length_ < 1) throw PreconditionError("block length must be >= 1");
}

int BobAvoidDigit::max_rounds() const {
    const double per_round = block_length_ * std::log(system_.radix().norm());
    return std::max(1, static_cast<int>(std::floor(std::log(kZoomBudget) / per_round)));
}

Quaternion BobAvoidDigit::initial_center(const GameView& view) {
    if (std::abs(view.params.rho - constants_.rho) > 1e-12 * constants_.rho)
        throw StrategyFailure("game radius must equal the anchor radius");
    prefix_ = Quaternion();
    digits_.clear();
    return constants_.xi_anchor;
}

Quaternion BobAvoidDigit::next_center(const GameView& view) {
    const Quaternion& q = system_.radix();
    const int m = static_cast<int>(digits_.size());
    // T^m(y) = q^m (y - prefix).
    Quaternion z = qpow(q, m) * (view.alice_center(view.round) - prefix_);
    for (int i = 1; i <= block_length_; ++i) {
        const DigitStep s = system_.step(z, m + i);
        digits_.push_back(s.digit);
        prefix_ += qpow(q, -(m + i)) * s.digit;
        z = s.remainder;
    }
    return prefix_ + qpow(q, -(m + block_length_)) * constants_.xi_anchor;
}

}  // namespace beta_arena
