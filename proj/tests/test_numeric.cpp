#include <gtest/gtest.h>

#include <random>

#include "beta_arena/numeric.hpp"
#include "oracles.hpp"

using namespace beta_arena;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, double scale = 3.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST(Quaternion, HamiltonUnitProducts) {
    const Quaternion i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(i * i, Quaternion(-1));
    EXPECT_EQ(i * j * k, Quaternion(-1));
}

TEST(Quaternion, NormIsMultiplicative) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
        EXPECT_NEAR((p * q).norm(), p.norm() * q.norm(), 1e-12 * (1 + p.norm() * q.norm()));
    }
}

TEST(Quaternion, InverseAndConjugate) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = random_quaternion(rng);
        EXPECT_LT(distance(q * q.inverse(), Quaternion(1)), 1e-12);
        EXPECT_LT(distance(q.inverse() * q, Quaternion(1)), 1e-12);
        EXPECT_NEAR((q * q.conj()).a, q.norm2(), 1e-12 * q.norm2());
    }
    EXPECT_THROW(Quaternion().inverse(), std::exception);
}

TEST(Quaternion, ProductIsAssociative) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng), r = random_quaternion(rng);
        EXPECT_LT(distance((p * q) * r, p * (q * r)), 1e-11);
    }
}

TEST(Quaternion, IntegerPowers) {
    const Quaternion q(0.3, 1.2, -0.7, 2.0);
    EXPECT_LT(distance(qpow(q, 3), q * q * q), 1e-12);
    EXPECT_LT(distance(qpow(q, -2) * qpow(q, 2), Quaternion(1)), 1e-12);
    EXPECT_EQ(qpow(q, 0), Quaternion(1));
}

TEST(Quaternion, ComplexEmbeddingCommutes) {
    const Quaternion z = Quaternion::complex(1.5, -0.5), w = Quaternion::complex(-2.0, 0.25);
    EXPECT_EQ(z * w, w * z);
    EXPECT_NEAR(Quaternion::polar(2.0, 0.5).norm(), 2.0, 1e-15);
}

TEST(Quaternion, ToStringOmitsZeroParts) {
    EXPECT_EQ(to_string(Quaternion(0, 1, 0, 1)), "1i+1k");
    EXPECT_EQ(to_string(Quaternion(-2, 0, -2, 0)), "-2-2j");
    EXPECT_EQ(to_string(Quaternion()), "0");
    EXPECT_EQ(to_string(Quaternion(3, 7), 1), "3");
}

TEST(Tolerance, Validation) {
    EXPECT_NO_THROW(Tolerance{}.validate());
    EXPECT_THROW((Tolerance{1e-12, 1e-9}.validate()), std::invalid_argument);
    EXPECT_THROW((Tolerance{0.3, 1e-12}.validate()), std::invalid_argument);
    EXPECT_THROW((Tolerance{1e-9, 0.0}.validate()), std::invalid_argument);
}

TEST(SafeFloor, FlagsNearIntegers) {
    const Tolerance tol;
    EXPECT_EQ(safe_floor(2.5, tol).n, 2);
    EXPECT_FALSE(safe_floor(2.5, tol).ambiguous);
    EXPECT_TRUE(safe_floor(3.0 - 1e-11, tol).ambiguous);
    EXPECT_EQ(safe_floor(3.0 - 1e-11, tol).n, 2);
    EXPECT_TRUE(safe_floor(3.0 + 1e-11, tol).ambiguous);
    EXPECT_EQ(safe_floor(-0.5, tol).n, -1);
    EXPECT_THROW(safe_floor(std::nan(""), tol), std::domain_error);
    EXPECT_THROW(safe_floor(INFINITY, tol), std::domain_error);
}

TEST(DigitFloor, ExactIntegersAreDecided) {
    const Tolerance tol;
    const auto f = digit_floor(4.0, tol, AmbiguityPolicy::Throw, 1);
    EXPECT_EQ(f.n, 4);
    EXPECT_EQ(f.fraction, 0.0);
}

TEST(DigitFloor, NearIntegersFollowPolicy) {
    const Tolerance tol;
    EXPECT_THROW(digit_floor(4.0 - 1e-12, tol, AmbiguityPolicy::Throw, 3), AmbiguousDigit);
    try {
        digit_floor(4.0 - 1e-12, tol, AmbiguityPolicy::Throw, 3);
    } catch (const AmbiguousDigit& e) {
        EXPECT_EQ(e.step(), 3);
    }
    const auto nudged = digit_floor(4.0 - 1e-12, tol, AmbiguityPolicy::NudgeInward, 3);
    EXPECT_EQ(nudged.n, 4);
    EXPECT_EQ(nudged.fraction, 0.0);
    const auto below = digit_floor(-1e-12, tol, AmbiguityPolicy::NudgeInward, 1);
    EXPECT_EQ(below.n, 0);
}

TEST(DigitFloor, FractionIsConsistent) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-50, 50);
    const Tolerance tol;
    for (int t = 0; t < 1000; ++t) {
        const double x = u(rng);
        const auto f = digit_floor(x, tol, AmbiguityPolicy::NudgeInward, 1);
        EXPECT_GE(f.fraction, 0.0);
        EXPECT_LT(f.fraction, 1.0);
        EXPECT_NEAR(f.n + f.fraction, x, 2e-9);
    }
}

TEST(MetallicMean, MatchesBisection) {
    for (int j = 1; j <= 12; ++j) {
        const double phi = metallic_mean(j);
        EXPECT_NEAR(phi, static_cast<double>(oracle::metallic_mean(j)), 1e-14 * phi) << "j=" << j;
        EXPECT_NEAR(phi * phi - j * phi - 1.0, 0.0, 1e-12 * phi * phi);
    }
    EXPECT_THROW(metallic_mean(0), std::invalid_argument);
}

TEST(TribonacciLikeBase, SolvesCubic) {
    const double b = tribonacci_like_base();
    EXPECT_NEAR(b * b * b, 2 * b * b + 1, 1e-12);
    EXPECT_GT(b, 2.0);
    EXPECT_LT(b, 2.3);
}
