#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "beta_arena/complex_expansion.hpp"
#include "beta_arena/game.hpp"
#include "beta_arena/quaternion_expansion.hpp"
#include "beta_arena/real_expansion.hpp"
#include "beta_arena/thresholds.hpp"

namespace beta_arena {

/// Raised when a constructive strategy cannot find its move (theorem hypotheses not met).
class StrategyFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point at most `max_step` from `from` in the direction of `target`.
Quaternion move_toward(const Quaternion& from, const Quaternion& target, double max_step);

/// Keeps the previous center.
class AliceCenterHold : public Strategy {
public:
    std::string name() const override { return "alice-center-hold"; }
    Quaternion next_center(const GameView& view) override;
};

class BobCenterHold : public Strategy {
public:
    explicit BobCenterHold(Quaternion start) : start_(start) {}
    std::string name() const override { return "bob-center-hold"; }
    Quaternion initial_center(const GameView& view) override;
    Quaternion next_center(const GameView& view) override;

private:
    Quaternion start_;
};

/// Moves as far as allowed from Alice's center along a fixed unit direction. When that
/// leaves the play space the direction is reversed, then the step halved.
class BobOptimalDrift : public Strategy {
public:
    BobOptimalDrift(Quaternion start, Quaternion direction);
    std::string name() const override { return "bob-optimal-drift"; }
    Quaternion initial_center(const GameView& view) override;
    Quaternion next_center(const GameView& view) override;

private:
    Quaternion start_;
    Quaternion direction_;
};

/// Uniform sample from the legal center ball intersected with the play space.
Quaternion sample_legal_center(const GameView& view, const Quaternion& around, double reach, std::mt19937_64& rng);

class BobRandom : public Strategy {
public:
    BobRandom(Quaternion start, std::uint64_t seed) : start_(start), rng_(seed) {}
    std::string name() const override { return "bob-random"; }
    Quaternion initial_center(const GameView& view) override;
    Quaternion next_center(const GameView& view) override;

private:
    Quaternion start_;
    std::mt19937_64 rng_;
};

class AliceRandom : public Strategy {
public:
    explicit AliceRandom(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "alice-random"; }
    Quaternion next_center(const GameView& view) override;

private:
    std::mt19937_64 rng_;
};

/// Holds for rounds <= n, locks onto the nearest full-length interval of V_k(b; d) at
/// round n + 1 and pursues its center afterwards.
class AliceRealWinning : public Strategy {
public:
    AliceRealWinning(RealBase base, int digit, NKPair nk);
    std::string name() const override { return "real-winning"; }
    Quaternion next_center(const GameView& view) override;
    const std::optional<CylinderInterval>& target() const { return target_; }

private:
    RealBase base_;
    int digit_;
    NKPair nk_;
    std::optional<CylinderInterval> target_;
};

/// Nearest full-length interval center of V_k(b; d) within `reach` of x.
std::optional<CylinderInterval> nearest_full_interval(const RealBase& base, int digit, int k, double x, double reach);

/// Square-digit-set analogue: the target is the V_k square inside the (k-1)-cylinder of x_n.
class AliceComplexWinning : public Strategy {
public:
    AliceComplexWinning(ComplexBase base, NKPair nk);
    std::string name() const override { return "complex-winning"; }
    Quaternion next_center(const GameView& view) override;
    const std::optional<VkSquare>& target() const { return target_; }

private:
    ComplexBase base_;
    NKPair nk_;
    std::optional<VkSquare> target_;
};

/// Real radix q on the Lipschitz box: the one-dimensional strategy run per coordinate.
class AliceComponentwiseWinning : public Strategy {
public:
    AliceComponentwiseWinning(RealBase base, std::array<int, 4> digits, NKPair nk);
    std::string name() const override { return "quaternion-componentwise-winning"; }
    Quaternion next_center(const GameView& view) override;
    const std::optional<Quaternion>& target() const { return target_; }

private:
    RealBase base_;
    std::array<int, 4> digits_;
    NKPair nk_;
    std::optional<Quaternion> target_;
};

/// Bob keeps the first k n digits of every point of B_k equal to those of Alice's center,
/// the remainder pinned at the anchor, so that no aligned block equals Omega.
class BobAvoidDigit : public Strategy {
public:
    BobAvoidDigit(ExpansionSystem system, DomainConstants constants, int block_length);
    std::string name() const override { return "bob-avoid-digit"; }
    Quaternion initial_center(const GameView& view) override;
    Quaternion next_center(const GameView& view) override;
    const std::vector<Quaternion>& digits() const { return digits_; }

    /// Rounds this strategy can play before |q|^{n k} exceeds the precision budget.
    int max_rounds() const;

private:
    ExpansionSystem system_;
    DomainConstants constants_;
    int block_length_;
    Quaternion prefix_;                 ///< sum_{j <= m} q^{-j} a_j
    std::vector<Quaternion> digits_;    ///< a_1 .. a_m
};

}  // namespace beta_arena
