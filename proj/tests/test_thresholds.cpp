#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "beta_arena/real_expansion.hpp"
#include "beta_arena/thresholds.hpp"

using namespace beta_arena;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

double real_left(double b, int K, double alpha, double beta) {
    const double w = K * b + 2 * b;
    return 2 * w * alpha - 4 * w * alpha * beta * (1 - alpha) / (1 - alpha * beta);
}

double complex_left(double alpha, double beta) {
    return 2 * alpha - 4 * alpha * beta * (1 - alpha) / (1 - alpha * beta);
}

}  // namespace

TEST(AThreshold, AlwaysBelowOne) {
    for (double b : {1.2, 1.618, 2.0, 3.7, 10.0})
        for (int K : {0, 1, 3})
            for (int i = 1; i < 100; ++i) EXPECT_LT(A_threshold(b, K, i / 100.0), 1.0) << b << " " << K << " " << i;
}

TEST(AThreshold, NonPositiveForSmallAlpha) {
    for (double b : {1.618, 2.5, 6.0})
        for (int K : {0, 2}) {
            const double cut = 1.0 / (2 * K * b + 4 * b + 1);
            for (double f : {0.1, 0.5, 0.99}) EXPECT_LE(A_threshold(b, K, f * cut), 0.0);
            EXPECT_GT(A_threshold(b, K, 1.01 * cut), 0.0);
        }
}

TEST(AThreshold, LargeBaseLimit) {
    EXPECT_NEAR(A_threshold(1e6, 0, 0.5), 2.0 / 3.0, 1e-3);
    EXPECT_NEAR(A_threshold(1e6, 0, 0.25), 1.0 / 1.75, 1e-3);
}

TEST(AThreshold, Preconditions) {
    EXPECT_THROW(A_threshold(1.0, 0, 0.5), PreconditionError);
    EXPECT_THROW(A_threshold(2.0, -1, 0.5), PreconditionError);
    EXPECT_THROW(A_threshold(2.0, 0, 1.0), PreconditionError);
}

TEST(AThreshold, MatchesRealInequalityOnGrid) {
    for (double b : {1.618, 2.414, 3.3})
        for (int K : {0, 1})
            for (int i = 1; i < 40; ++i)
                for (int j = 1; j < 40; ++j) {
                    const double alpha = i / 40.0, beta = j / 40.0;
                    const double a = A_threshold(b, K, alpha);
                    if (std::abs(beta - a) < 1e-9) continue;
                    EXPECT_EQ(beta > a, real_left(b, K, alpha, beta) < 1 - alpha) << b << " " << alpha << " " << beta;
                }
}

TEST(FThreshold, NineHalvesExample) {
    EXPECT_NEAR(F_threshold(4.5, 0.6), (8495 - 180 * kSqrt2) / 11901, 1e-12);
}

TEST(FThreshold, NegativeForSmallAlpha) {
    for (double r : {1.5, 4.5, 10.0}) EXPECT_LT(F_threshold(r, 1e-4), 0.0);
}

TEST(FThreshold, MatchesComplexInequalityOnGrid) {
    for (double r : {1.5, 4.5, 7.0})
        for (int i = 1; i < 40; ++i)
            for (int j = 1; j < 40; ++j) {
                const double alpha = i / 40.0, beta = j / 40.0;
                const double f = F_threshold(r, alpha);
                if (std::abs(beta - f) < 1e-9) continue;
                EXPECT_EQ(beta > f, complex_left(alpha, beta) < (1 - alpha) / (kSqrt2 * r)) << r << " " << alpha;
            }
}

TEST(FindNK, RealPairSatisfiesBothInequalities) {
    int found = 0;
    for (double b : {(1 + std::sqrt(5.0)) / 2, 1 + kSqrt2, 2.2})
        for (int i = 1; i < 20; ++i)
            for (int j = 1; j < 20; ++j) {
                const double alpha = i / 20.0 + 0.0013, beta = j / 20.0 + 0.0007;
                const int K = make_real_base(b).K_b;
                if (!(beta > A_threshold(b, K, alpha))) continue;
                const auto nk = find_nk_real(b, K, alpha, beta, 1.0);
                ASSERT_TRUE(nk) << b << " " << alpha << " " << beta;
                const double middle = (K + 2.0) / (std::pow(alpha * beta, nk->n) * std::pow(b, nk->k - 1));
                EXPECT_GT(middle, real_left(b, K, alpha, beta));
                EXPECT_LT(middle, 1 - alpha);
                EXPECT_GE(nk->k, 2);
                ++found;
            }
    EXPECT_GT(found, 100);
}

TEST(FindNK, RealFailsBelowThreshold) {
    const double b = (1 + std::sqrt(5.0)) / 2;
    const double alpha = 0.5, beta = 0.9 * A_threshold(b, 0, alpha);
    ASSERT_GT(beta, 0.0);
    EXPECT_FALSE(find_nk_real(b, 0, alpha, beta, 1.0));
}

TEST(FindNK, ComponentwiseMatchesDoubledBaseThreshold) {
    const double q = (1 + std::sqrt(5.0)) / 2;
    for (int i = 1; i < 20; ++i)
        for (int j = 1; j < 20; ++j) {
            const double alpha = i / 20.0 + 0.0011, beta = j / 20.0 + 0.0003;
            const double a = A_threshold(2 * q, 0, alpha);
            if (std::abs(beta - a) < 1e-3) continue;
            const auto nk = find_nk_componentwise(q, 0, alpha, beta, 1.0);
            EXPECT_EQ(nk.has_value(), beta > a) << alpha << " " << beta;
            if (!nk) continue;
            const double middle = 2 * 2.0 / (std::pow(alpha * beta, nk->n) * std::pow(q, nk->k - 1));
            EXPECT_LT(middle, 1 - alpha);
            EXPECT_GT(middle, real_left(2 * q, 0, alpha, beta));
        }
}

TEST(FindNK, ComplexNineHalvesExample) {
    const std::array<int, 1> ks{2};
    const auto nk = find_nk_complex(4.5, ks, 0.6, 0.8, 2.0);
    ASSERT_TRUE(nk);
    EXPECT_EQ(nk->n, 1);
    EXPECT_EQ(nk->k, 2);
    const auto s = complex_inequality(4.5, nk->n, nk->k, 0.6, 0.8, 2.0);
    EXPECT_LE(s.left, s.middle);
    EXPECT_LT(s.middle, s.right);
    EXPECT_FALSE(find_nk_complex(4.5, ks, 0.6, 0.6, 2.0));
}

TEST(FindNK, ComplexPairsSatisfyInequalities) {
    const std::array<int, 3> ks{2, 3, 4};
    for (double r : {4.5, 6.0})
        for (int i = 1; i < 20; ++i)
            for (int j = 1; j < 20; ++j) {
                const double alpha = i / 20.0 + 0.0017, beta = j / 20.0 + 0.0009;
                const auto nk = find_nk_complex(r, ks, alpha, beta, 0.8);
                if (!nk) continue;
                EXPECT_GT(beta, F_threshold(r, alpha));
                const auto s = complex_inequality(r, nk->n, nk->k, alpha, beta, 0.8);
                EXPECT_LE(s.left, s.middle);
                EXPECT_LT(s.middle, s.right);
            }
}
