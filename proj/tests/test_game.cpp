#include <gtest/gtest.h>

#include <cctype>
#include <cmath>

#include "beta_arena/strategies.hpp"
#include "beta_arena/trace_json.hpp"

using namespace beta_arena;

namespace {

const double kGolden = (1 + std::sqrt(5.0)) / 2;

class AliceJump : public Strategy {
public:
    std::string name() const override { return "alice-jump"; }
    Quaternion next_center(const GameView& view) override {
        return view.bob_center(view.round - 1) + Quaternion(view.params.radius(view.round - 1));
    }
};

class AliceThrows : public Strategy {
public:
    std::string name() const override { return "alice-throws"; }
    Quaternion next_center(const GameView&) override { throw StrategyFailure("no move"); }
};

struct RealSetup {
    RealBase base = make_real_base(kGolden);
    GameParams params{0.05, 0.5, 0.3, 1};
    NKPair nk;

    RealSetup() { nk = *find_nk_real(base.b, base.K_b, params.alpha, params.beta, params.rho); }
};

}  // namespace

TEST(Engine, CenterHoldKeepsStartingPoint) {
    const GameParams params{0.5, 0.5, 0.2, 1};
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(0.4));
    const auto trace = play(params, LatticeDomain::standard(1, 0.0), alice, bob, {.max_rounds = 10});
    EXPECT_FALSE(trace.aborted_by);
    EXPECT_EQ(trace.rounds(), 10);
    EXPECT_EQ(trace.moves.size(), 21u);
    for (const Move& m : trace.moves) EXPECT_EQ(m.center, Quaternion(0.4));
    EXPECT_NEAR(trace.outcome_radius(), 0.2 * std::pow(0.25, 10), 1e-18);
    EXPECT_TRUE(audit_trace(trace, LatticeDomain::standard(1, 0.0)).ok);
}

TEST(Engine, DriftMovesAreBoundaryLegal) {
    const GameParams params{0.3, 0.6, 0.1, 1};
    const auto space = LatticeDomain::standard(1, 0.0);
    AliceCenterHold alice;
    BobOptimalDrift bob(Quaternion(0.5), Quaternion(1.0));
    const auto trace = play(params, space, alice, bob, {.max_rounds = 20});
    ASSERT_FALSE(trace.aborted_by);
    EXPECT_TRUE(audit_trace(trace, space).ok);
    for (int n = 1; n <= trace.rounds(); ++n) {
        const double step = distance(trace.moves[2 * n].center, trace.moves[2 * n - 1].center);
        EXPECT_NEAR(step + params.radius(n), params.alpha * params.radius(n - 1), 1e-15);
    }
}

TEST(Engine, StopsOnceRadiusIsTiny) {
    const GameParams params{0.1, 0.1, 1.0, 1};
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(0.5));
    const auto trace = play(params, LatticeDomain::standard(1, 0.0), alice, bob);
    EXPECT_EQ(trace.rounds(), 7);
}

TEST(Engine, RejectsInvalidParameters) {
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(0.5));
    const auto space = LatticeDomain::standard(1, 0.0);
    EXPECT_THROW(play({1.0, 0.5, 1.0, 1}, space, alice, bob), PreconditionError);
    EXPECT_THROW(play({0.5, 0.0, 1.0, 1}, space, alice, bob), PreconditionError);
    EXPECT_THROW(play({0.5, 0.5, -1.0, 1}, space, alice, bob), PreconditionError);
    EXPECT_THROW(play({0.5, 0.5, 1.0, 2}, space, alice, bob), PreconditionError);
}

TEST(Engine, IllegalMoveAbortsWithAttribution) {
    const GameParams params{0.5, 0.5, 0.2, 1};
    const auto space = LatticeDomain::standard(1, 0.0);
    AliceJump alice;
    BobCenterHold bob(Quaternion(0.5));
    const auto trace = play(params, space, alice, bob);
    ASSERT_TRUE(trace.aborted_by);
    EXPECT_EQ(*trace.aborted_by, Player::Alice);
    EXPECT_FALSE(trace.moves.back().legal);
    EXPECT_EQ(trace.moves.size(), 2u);
    EXPECT_TRUE(audit_trace(trace, space).ok);
}

TEST(Engine, StartOutsideSpaceIsBobsFault) {
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(1.5));
    const auto trace = play({0.5, 0.5, 0.2, 1}, LatticeDomain::standard(1, 0.0), alice, bob);
    ASSERT_TRUE(trace.aborted_by);
    EXPECT_EQ(*trace.aborted_by, Player::Bob);
}

TEST(Engine, StrategyFailureAbortsWithAttribution) {
    AliceThrows alice;
    BobCenterHold bob(Quaternion(0.5));
    const auto trace = play({0.5, 0.5, 0.2, 1}, LatticeDomain::standard(1, 0.0), alice, bob);
    ASSERT_TRUE(trace.aborted_by);
    EXPECT_EQ(*trace.aborted_by, Player::Alice);
    EXPECT_EQ(trace.abort_reason, "no move");
    EXPECT_THROW(AliceCenterHold().initial_center({trace.params, LatticeDomain::standard(1, 0.0), trace.moves, 0}),
                 PreconditionError);
}

TEST(Audit, DetectsTampering) {
    const GameParams params{0.3, 0.6, 0.1, 1};
    const auto space = LatticeDomain::standard(1, 0.0);
    AliceCenterHold alice;
    BobOptimalDrift bob(Quaternion(0.5), Quaternion(1.0));
    const auto trace = play(params, space, alice, bob, {.max_rounds = 8});
    ASSERT_TRUE(audit_trace(trace, space).ok);

    auto moved = trace;
    moved.moves[5].center.a += 1e-2;
    const auto a1 = audit_trace(moved, space);
    EXPECT_FALSE(a1.ok);
    EXPECT_EQ(a1.bad_move, 5);

    auto resized = trace;
    resized.moves[3].radius *= 1.01;
    EXPECT_FALSE(audit_trace(resized, space).ok);

    auto flagged = trace;
    flagged.moves[2].legal = false;
    EXPECT_FALSE(audit_trace(flagged, space).ok);

    auto reordered = trace;
    std::swap(reordered.moves[1], reordered.moves[2]);
    EXPECT_FALSE(audit_trace(reordered, space).ok);

    auto outside = trace;
    outside.moves[0].center = Quaternion(-0.5);
    EXPECT_FALSE(audit_trace(outside, space).ok);
}

TEST(Verify, StraddlingBallIsIndeterminate) {
    const RealBase base = make_real_base(kGolden);
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(1 / kGolden));
    const auto trace = play({0.5, 0.5, 0.2, 1}, LatticeDomain::standard(1, 0.0), alice, bob, {.max_rounds = 2});
    const auto v = verify_outcome(trace, base.system(), Claim::digit_at(Quaternion(0), 1), 1);
    EXPECT_EQ(v.verdict, Verdict::Indeterminate);
    EXPECT_EQ(v.resolved_depth, 0);
}

TEST(Verify, DigitAtChecksExactPosition) {
    const RealBase base = make_real_base(kGolden);
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(0.7236));
    const auto trace = play({0.5, 0.5, 0.2, 1}, LatticeDomain::standard(1, 0.0), alice, bob);
    const auto sys = base.system();
    EXPECT_EQ(verify_outcome(trace, sys, Claim::digit_at(Quaternion(1), 1), 6).verdict, Verdict::Verified);
    EXPECT_EQ(verify_outcome(trace, sys, Claim::digit_at(Quaternion(0), 1), 6).verdict, Verdict::Falsified);
    EXPECT_EQ(verify_outcome(trace, sys, Claim::digit_at(Quaternion(1), 5), 6).verdict, Verdict::Verified);
    const auto first = verify_outcome(trace, sys, Claim::contains_digit(Quaternion(0), 6), 6);
    EXPECT_EQ(first.verdict, Verdict::Verified);
    EXPECT_EQ(first.position, 2);
    const auto block = verify_outcome(trace, sys, Claim::avoids_block({Quaternion(1), Quaternion(0)}, 2), 6);
    EXPECT_EQ(block.verdict, Verdict::Falsified);
    EXPECT_EQ(block.position, 1);
    EXPECT_EQ(verify_outcome(trace, sys, Claim::avoids_block({Quaternion(1), Quaternion(1)}, 1), 6).verdict,
              Verdict::Verified);
}

TEST(RealWinning, BeatsDriftFromSeveralStarts) {
    const RealSetup s;
    const auto space = LatticeDomain::standard(1, 0.0);
    for (double x0 : {0.05, 0.37, 0.5, 0.81, 0.99})
        for (double dir : {1.0, -1.0}) {
            AliceRealWinning alice(s.base, 0, s.nk);
            BobOptimalDrift bob{Quaternion(x0), Quaternion(dir)};
            const auto trace = play(s.params, space, alice, bob);
            ASSERT_FALSE(trace.aborted_by) << trace.abort_reason;
            EXPECT_TRUE(audit_trace(trace, space).ok);
            const auto v = verify_outcome(trace, s.base.system(), Claim::digit_at(Quaternion(0), s.nk.k), s.nk.k);
            EXPECT_EQ(v.verdict, Verdict::Verified) << x0 << " " << v.detail;
            ASSERT_TRUE(alice.target());
            EXPECT_GE(trace.outcome().a, alice.target()->lo - 1e-12);
            EXPECT_LE(trace.outcome().a, alice.target()->hi + 1e-12);
        }
}

TEST(RealWinning, BeatsRandomBob) {
    const RealSetup s;
    const auto space = LatticeDomain::standard(1, 0.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        AliceRealWinning alice(s.base, 0, s.nk);
        BobRandom bob(Quaternion(0.02 + 0.048 * seed), seed);
        const auto trace = play(s.params, space, alice, bob);
        ASSERT_FALSE(trace.aborted_by) << trace.abort_reason;
        EXPECT_TRUE(audit_trace(trace, space).ok);
        EXPECT_EQ(verify_outcome(trace, s.base.system(), Claim::digit_at(Quaternion(0), s.nk.k), s.nk.k).verdict,
                  Verdict::Verified)
            << seed;
    }
}

TEST(RealWinning, RequiresValidPair) {
    EXPECT_THROW(AliceRealWinning(make_real_base(kGolden), 0, {0, 3}), PreconditionError);
    EXPECT_THROW(AliceRealWinning(make_real_base(kGolden), 0, {1, 1}), PreconditionError);
}

TEST(ComplexWinning, BeatsDriftAndRandom) {
    const ComplexBase base = make_complex_base(4.5, 0.05);
    const GameParams params{0.6, 0.8, 2.0, 2};
    const std::array<int, 1> ks{2};
    const auto nk = find_nk_complex(base.r, ks, params.alpha, params.beta, params.rho);
    ASSERT_TRUE(nk);
    const auto space = LatticeDomain::standard(2, -0.5);
    for (int t = 0; t < 12; ++t) {
        AliceComplexWinning alice(base, *nk);
        const Quaternion start(-0.45 + 0.08 * t, 0.4 - 0.07 * t);
        std::unique_ptr<Strategy> bob;
        if (t % 2 == 0) bob = std::make_unique<BobOptimalDrift>(start, Quaternion(std::cos(t), std::sin(t)));
        else bob = std::make_unique<BobRandom>(start, t);
        const auto trace = play(params, space, alice, *bob);
        ASSERT_FALSE(trace.aborted_by) << trace.abort_reason;
        EXPECT_TRUE(audit_trace(trace, space).ok);
        const auto v = verify_outcome(trace, base.system(), Claim::digit_at(Quaternion(), nk->k), nk->k);
        EXPECT_EQ(v.verdict, Verdict::Verified) << t << " " << v.detail;
    }
}

TEST(ComponentwiseWinning, BeatsDriftAndRandom) {
    const RealBase base = make_real_base(kGolden);
    const GameParams params{0.02, 0.5, 0.3, 4};
    const auto nk = find_nk_componentwise(base.b, base.K_b, params.alpha, params.beta, params.rho);
    ASSERT_TRUE(nk);
    const auto space = lipschitz_lattice();
    const ExpansionSystem sys(Quaternion(base.b), space);
    for (int t = 0; t < 8; ++t) {
        AliceComponentwiseWinning alice(base, {0, 0, 0, 0}, *nk);
        const Quaternion start(0.1 + 0.1 * t, 0.9 - 0.1 * t, 0.5, 0.05 * t);
        std::unique_ptr<Strategy> bob;
        if (t % 2 == 0) bob = std::make_unique<BobOptimalDrift>(start, Quaternion(1, t, -1, 0.5));
        else bob = std::make_unique<BobRandom>(start, t);
        const auto trace = play(params, space, alice, *bob);
        ASSERT_FALSE(trace.aborted_by) << trace.abort_reason;
        EXPECT_TRUE(audit_trace(trace, space).ok);
        EXPECT_EQ(verify_outcome(trace, sys, Claim::digit_at(Quaternion(), nk->k), nk->k).verdict, Verdict::Verified)
            << t;
    }
}

TEST(ComponentwiseWinning, CoordinatesAgreeWithOneDimensionalDigits) {
    const RealBase base = make_real_base(kGolden);
    const GameParams params{0.02, 0.5, 0.3, 4};
    const auto nk = *find_nk_componentwise(base.b, base.K_b, params.alpha, params.beta, params.rho);
    AliceComponentwiseWinning alice(base, {0, 0, 0, 0}, nk);
    BobOptimalDrift bob(Quaternion(0.37, 0.41, 0.29, 0.55), Quaternion(1, 0, 0, 0));
    const auto trace = play(params, lipschitz_lattice(), alice, bob);
    ASSERT_FALSE(trace.aborted_by);
    const auto steps = ExpansionSystem(Quaternion(base.b), lipschitz_lattice()).expand(trace.outcome(), nk.k);
    for (int i = 0; i < 4; ++i) {
        const auto one = digits(base, trace.outcome()[i], nk.k);
        for (int j = 0; j < nk.k; ++j) EXPECT_EQ(one[j], steps[j].digit[i]) << i << " " << j;
    }
}

class LosingPresets : public ::testing::TestWithParam<std::pair<const char*, Quaternion>> {};

TEST_P(LosingPresets, BobAvoidsDigitAgainstRandomAlice) {
    const auto [name, q] = GetParam();
    const LosingPreset preset = losing_preset(name);
    const std::vector<Quaternion> omega{Quaternion()};
    const auto c = C_Omega(q, omega, preset.constants);
    ASSERT_TRUE(c.applicable);
    const auto lp = losing_parameters(q, omega, preset.constants);
    const double alpha = std::max(lp.alpha_min, 0.85);
    const GameParams params{alpha, lp.beta(alpha), preset.constants.rho, 4};
    const ExpansionSystem sys(q, preset.lattice);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        AliceRandom alice(seed);
        BobAvoidDigit bob(sys, preset.constants, 1);
        const auto trace = play(params, preset.lattice, alice, bob, {.max_rounds = bob.max_rounds()});
        ASSERT_FALSE(trace.aborted_by) << trace.abort_reason;
        EXPECT_TRUE(audit_trace(trace, preset.lattice).ok);
        for (const auto& d : bob.digits()) EXPECT_GT(d.norm(), 0.5);
        const int depth = trace.rounds() - 1;
        const auto v = verify_outcome(trace, sys, Claim::avoids_block(omega, 1), depth);
        EXPECT_EQ(v.verdict, Verdict::Verified) << name << " " << v.detail;
        EXPECT_GE(v.resolved_depth, depth);
    }
}

INSTANTIATE_TEST_SUITE_P(Presets, LosingPresets,
                         ::testing::Values(std::make_pair("lipschitz", Quaternion(7, 5, 3, 9)),
                                           std::make_pair("hurwitz-box", Quaternion(9, 6, 5, 8)),
                                           std::make_pair("zeta", Quaternion(11, 7, 6, 9)),
                                           std::make_pair("symmetric:0.5", Quaternion(8, 7, 6, 5))),
                         [](const auto& info) {
                             std::string name = info.param.first;
                             for (char& ch : name)
                                 if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                             return name;
                         });

TEST(BobAvoidDigit, RejectsMismatchedRadius) {
    const LosingPreset preset = losing_preset("lipschitz");
    const ExpansionSystem sys(Quaternion(7, 5, 3, 9), preset.lattice);
    AliceRandom alice(1);
    BobAvoidDigit bob(sys, preset.constants, 1);
    const auto trace = play({0.9, 0.5, 0.3, 4}, preset.lattice, alice, bob);
    ASSERT_TRUE(trace.aborted_by);
    EXPECT_EQ(*trace.aborted_by, Player::Bob);
    EXPECT_THROW(BobAvoidDigit(sys, preset.constants, 0), PreconditionError);
}

TEST(TraceJson, RecordsEveryMove) {
    AliceCenterHold alice;
    BobCenterHold bob(Quaternion(0.4));
    const auto trace = play({0.5, 0.5, 0.2, 1}, LatticeDomain::standard(1, 0.0), alice, bob, {.max_rounds = 3});
    const auto j = trace_to_json(trace, 42);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["moves"].size(), 7u);
    EXPECT_EQ(j["moves"][1]["player"], "alice");
    EXPECT_EQ(j["alice"], "alice-center-hold");
}
