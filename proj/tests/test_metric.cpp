#include "iet/metric.hpp"

#include <gtest/gtest.h>

#include "iet/golden.hpp"
#include "support/generators.hpp"
#include "support/naive_iet.hpp"

using namespace iet;
using iet::testing::Rng;

namespace {

const IntervalExchange kId = IntervalExchange::identity();

IntervalExchange half_swap() { return golden_fn(1); }

} // namespace

TEST(CircleDistance, Examples) {
    EXPECT_EQ(circle_distance(Scalar(0), Scalar(1, 2)), Scalar(1, 2));
    EXPECT_EQ(circle_distance(Scalar(1, 3), Scalar(1, 3)), Scalar(0));
    EXPECT_EQ(circle_distance(Scalar(1, 8), Scalar(7, 8)), Scalar(1, 4));
    EXPECT_THROW(circle_distance(Scalar(1), Scalar(0)), std::domain_error);
}

TEST(CircleDistance, RangeAndSymmetry) {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        Scalar u = frac(iet::testing::random_scalar(rng));
        Scalar v = frac(iet::testing::random_scalar(rng));
        Scalar d = circle_distance(u, v);
        ASSERT_GE(d.sign(), 0);
        ASSERT_LE(d, Scalar(1, 2));
        ASSERT_EQ(d, circle_distance(v, u));
    }
}

TEST(Distance, GoldenExamples) {
    EXPECT_EQ(distance(half_swap(), kId), Scalar(1, 2));
    EXPECT_EQ(distance(golden_fn(2), kId), Scalar(1, 16));
    EXPECT_EQ(distance(golden_gn(3), kId), Scalar(1, 8));
}

TEST(Distance, MatchesBruteForceIntegration) {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng);
        IntervalExchange g = iet::testing::random_iet(rng);
        ASSERT_EQ(distance(f, g), iet::testing::brute_distance(f, g));
    }
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(distance(golden_fn(n), kId), iet::testing::brute_distance(golden_fn(n), kId));
    }
}

TEST(Distance, MetricAxioms) {
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng, 6);
        IntervalExchange g = iet::testing::random_iet(rng, 6);
        IntervalExchange h = iet::testing::random_iet(rng, 6);
        Scalar dfg = distance(f, g);
        ASSERT_GE(dfg.sign(), 0);
        ASSERT_EQ(dfg, distance(g, f));
        ASSERT_EQ(dfg.is_zero(), f == g);
        ASSERT_LE(dfg, distance(f, h) + distance(h, g));
    }
}

TEST(Distance, RightInvariance) {
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng, 6);
        IntervalExchange g = iet::testing::random_iet(rng, 6);
        IntervalExchange h = iet::testing::random_iet(rng, 6);
        ASSERT_EQ(distance(compose(f, h), compose(g, h)), distance(f, g));
    }
}

TEST(Distance, InversionSymmetry) {
    Rng rng(35);
    for (int i = 0; i < 200; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng);
        ASSERT_EQ(distance(f, kId), distance(kId, f.inverse()));
    }
}

TEST(Distance, CoordinateContinuityBound) {
    // for lambda, lambda' with max|lambda_j - lambda'_j| < eps/n:
    // d(f, f') <= (n+1) eps
    Rng rng(36);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> size(2, 6);
        const int n = size(rng);
        Permutation p = iet::testing::random_unpartitioned_permutation(rng, n);
        std::vector<Scalar> lambda = iet::testing::random_lengths(rng, n, 64);

        // perturb within a ball of radius eps/n, keeping the sum at 1
        std::uniform_int_distribution<long> denpick(64, 512);
        long den = denpick(rng);
        Scalar eps(1, 16);
        std::vector<Scalar> moved = lambda;
        std::uniform_int_distribution<int> pick(0, n - 1);
        int a = pick(rng);
        int b = pick(rng);
        if (a != b) {
            // shift mass delta < eps/n from a to b if it stays positive
            Scalar delta(1, static_cast<unsigned long>(den * n * 16));
            if (delta < moved[static_cast<size_t>(a)]) {
                moved[static_cast<size_t>(a)] -= delta;
                moved[static_cast<size_t>(b)] += delta;
            }
        }
        IntervalExchange f = IntervalExchange::canonicalize(p, lambda);
        IntervalExchange fm = IntervalExchange::canonicalize(p, moved);
        ASSERT_LE(distance(f, fm), Scalar(n + 1) * eps);
    }
}

TEST(SupDisplacement, Examples) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(sup_displacement(golden_gn(n), kId), Scalar(1, 2));
    }
    EXPECT_EQ(sup_displacement(kId, kId), Scalar(0));
    EXPECT_EQ(sup_displacement(golden_fn(2), kId), Scalar(1, 8));
}

TEST(SupDisplacement, DominatesDistance) {
    Rng rng(37);
    for (int i = 0; i < 300; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng);
        IntervalExchange g = iet::testing::random_iet(rng);
        ASSERT_LE(distance(f, g), sup_displacement(f, g));
    }
}

TEST(Koopman, Examples) {
    StepFunction half = StepFunction::indicator(Scalar(0), Scalar(1, 2));
    EXPECT_EQ(koopman_l2_sq(half_swap(), kId, half), Scalar(1));

    Rng rng(38);
    for (int i = 0; i < 50; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng);
        ASSERT_EQ(koopman_l2_sq(f, f, half), Scalar(0));
    }

    StepFunction quarter = StepFunction::indicator(Scalar(0), Scalar(1, 4));
    IntervalExchange g2 = golden_gn(2);
    EXPECT_EQ(koopman_l2_sq(g2, kId, quarter), Scalar(1, 2));
}

TEST(Koopman, MatchesBruteForce) {
    Rng rng(39);
    for (int i = 0; i < 100; ++i) {
        IntervalExchange f = iet::testing::random_iet(rng, 6);
        IntervalExchange g = iet::testing::random_iet(rng, 6);
        std::uniform_int_distribution<long> den(2, 8);
        long d = den(rng);
        std::uniform_int_distribution<long> num(1, d - 1);
        StepFunction phi = StepFunction::indicator(Scalar(0), Scalar(num(rng), static_cast<unsigned long>(d)));
        ASSERT_EQ(koopman_l2_sq(f, g, phi), iet::testing::brute_koopman_l2_sq(f, g, phi));
    }
}

TEST(Koopman, StrongOperatorDirection) {
    StepFunction half = StepFunction::indicator(Scalar(0), Scalar(1, 2));
    Scalar prev_koopman(2);
    Scalar prev_distance(1);
    for (int n = 1; n <= 8; ++n) {
        Scalar k = koopman_l2_sq(golden_fn(n), kId, half);
        Scalar d = distance(golden_fn(n), kId);
        ASSERT_LE(k, prev_koopman);
        ASSERT_LT(d, prev_distance);
        prev_koopman = std::move(k);
        prev_distance = std::move(d);
    }
    EXPECT_TRUE(prev_koopman.is_zero());

    // the g_n lose uniform closeness but still converge in d and L2
    for (int n = 2; n <= 8; ++n) {
        Scalar tiny(Rational(BigInt(1), BigInt(1) << n));
        ASSERT_EQ(distance(golden_gn(n), kId), tiny);
        Scalar k = koopman_l2_sq(golden_gn(n), kId, half);
        ASSERT_EQ(k, Scalar(2) * tiny);
        ASSERT_EQ(sup_displacement(golden_gn(n), kId), Scalar(1, 2));
    }
}

TEST(StepFunction, BasicsAndCanonicalForm) {
    StepFunction phi = StepFunction::of({Scalar(0), Scalar(1, 2), Scalar(1)},
                                        {Scalar(1), Scalar(1)});
    EXPECT_EQ(phi.pieces(), 1); // equal adjacent values merge
    EXPECT_EQ(phi.at(Scalar(1, 4)), Scalar(1));

    StepFunction ind = StepFunction::indicator(Scalar(1, 4), Scalar(1, 2));
    EXPECT_EQ(ind.at(Scalar(0)), Scalar(0));
    EXPECT_EQ(ind.at(Scalar(1, 4)), Scalar(1));
    EXPECT_EQ(ind.at(Scalar(3, 8)), Scalar(1));
    EXPECT_EQ(ind.at(Scalar(1, 2)), Scalar(0));
    EXPECT_THROW(ind.at(Scalar(1)), std::domain_error);
    EXPECT_THROW(StepFunction::of({Scalar(0), Scalar(1, 2)}, {Scalar(1), Scalar(2)}),
                 std::invalid_argument);
}

TEST(StepFunction, PrecomposeAgainstPointProbes) {
    Rng rng(40);
    for (int i = 0; i < 100; ++i) {
        IntervalExchange g = iet::testing::random_iet(rng);
        StepFunction phi = StepFunction::indicator(Scalar(1, 8), Scalar(5, 8));
        StepFunction composed = precompose(phi, g);
        for (int k = 0; k < 32; ++k) {
            Scalar x(k, 32);
            ASSERT_EQ(composed.at(x), phi.at(g.apply(x)));
        }
    }
}

/// Scalar values inside step functions may be quadratic irrationals.
TEST(StepFunction, QuadraticBreakpoints) {
    Scalar c = Scalar::sqrt_of(2) - Scalar(1); // about 0.414
    StepFunction phi = StepFunction::indicator(Scalar(0), c);
    IntervalExchange r = IntervalExchange::rotation(c);
    Scalar val = koopman_l2_sq(r, kId, phi);
    EXPECT_EQ(val, iet::testing::brute_koopman_l2_sq(r, kId, phi));
    EXPECT_GT(val.sign(), 0);
}
