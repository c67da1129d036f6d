#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hpmbs/errors.hpp"
#include "hpmbs/oracles.hpp"
#include "hpmbs/special_functions.hpp"

namespace {

using namespace hpmbs;

double rel_err(double got, long double want) {
    return static_cast<double>(std::fabs((static_cast<long double>(got) - want) / want));
}

// e^{-x^2} with x^2 split into a rounded product and its exact remainder.
double exp_minus_square(double x) {
    const double hi = x * x;
    const double lo = std::fma(x, x, -hi);
    return std::exp(-hi) * std::exp(-lo);
}

TEST(Erf, ZeroAndSaturation) {
    EXPECT_EQ(hpmbs::erf(0.0), 0.0);
    EXPECT_NEAR(hpmbs::erf(10.0), 1.0, 1e-15);
    EXPECT_EQ(hpmbs::erf(INFINITY), 1.0);
    EXPECT_EQ(hpmbs::erf(-INFINITY), -1.0);
}

TEST(Erf, MatchesSeriesOracle) {
    EXPECT_NEAR(hpmbs::erf(0.5), static_cast<double>(oracle::erf_series(0.5L)), 1e-16);
    for (double x = -1.0; x <= 1.0; x += 0.01) {
        EXPECT_NEAR(hpmbs::erf(x), static_cast<double>(oracle::erf_series(x)), 1e-15) << x;
    }
}

TEST(Erf, OddToTheBit) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = dist(rng);
        EXPECT_EQ(hpmbs::erf(-x), -hpmbs::erf(x)) << x;
    }
}

TEST(Erfc, ZeroAndReflection) {
    EXPECT_EQ(hpmbs::erfc(0.0), 1.0);
    EXPECT_NEAR(hpmbs::erfc(3.7) + hpmbs::erfc(-3.7), 2.0, 1e-15);
    EXPECT_EQ(hpmbs::erfc(INFINITY), 0.0);
    EXPECT_EQ(hpmbs::erfc(-INFINITY), 2.0);
}

TEST(Erfc, MatchesContinuedFractionOracle) {
    EXPECT_LT(rel_err(hpmbs::erfc(5.0), oracle::erfc_extended(5.0L)), 1e-14);
    double worst = 0.0;
    for (double x = -8.0; x <= 26.0; x += 0.0625) {
        worst = std::max(worst, rel_err(hpmbs::erfc(x), oracle::erfc_extended(x)));
    }
    EXPECT_LT(worst, 1e-14);
}

TEST(Erfc, ComplementsErf) {
    for (double x = -6.0; x <= 6.0; x += 0.01) {
        EXPECT_NEAR(hpmbs::erfc(x), 1.0 - hpmbs::erf(x), 1e-14) << x;
    }
}

TEST(Erfc, UnderflowsToZeroFarRight) {
    EXPECT_EQ(hpmbs::erfc(30.0), 0.0);
    EXPECT_GT(hpmbs::erfc(26.0), 0.0);
}

TEST(Erfcx, SpecialValues) {
    EXPECT_EQ(erfcx(0.0), 1.0);
    const long double e = std::exp(1.0L);
    EXPECT_LT(rel_err(erfcx(1.0), e * oracle::erfc_extended(1.0L)), 1e-14);
}

TEST(Erfcx, AsymptoticSeriesAtThirty) {
    // 1/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6)); the next term is
    // 105/(16 x^8) ~ 7e-12 relative.
    const double x = 30.0;
    const double u = 1.0 / (x * x);
    const double series = kInvSqrtPi / x * (1.0 - 0.5 * u + 0.75 * u * u - 1.875 * u * u * u);
    EXPECT_NEAR(erfcx(x) / series, 1.0, 1e-10);
}

TEST(Erfcx, ConsistentWithErfc) {
    for (double x = 0.0; x <= 25.0; x += 0.05) {
        const double lhs = erfcx(x) * exp_minus_square(x);
        EXPECT_NEAR(lhs / hpmbs::erfc(x), 1.0, 1e-13) << x;
    }
}

TEST(Erfcx, OverflowsFarLeft) {
    EXPECT_EQ(erfcx(-27.0), INFINITY);
    EXPECT_TRUE(std::isfinite(erfcx(-26.0)));
}

TEST(NormalCdf, SymmetryAndQuadrature) {
    EXPECT_EQ(normal_cdf(0.0), 0.5);
    EXPECT_NEAR(normal_cdf(1.234) + normal_cdf(-1.234), 1.0, 1e-15);
    EXPECT_NEAR(normal_cdf(1.0), static_cast<double>(oracle::normal_cdf_quadrature(1.0L)), 1e-15);
}

TEST(NormalCdf, MonotoneOnSortedSample) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    std::vector<double> v(10000);
    for (double& x : v) x = dist(rng);
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i) {
        ASSERT_LE(normal_cdf(v[i - 1]), normal_cdf(v[i])) << v[i];
    }
}

TEST(SpecialFunctions, RejectNaN) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW((void)hpmbs::erf(nan), DomainError);
    EXPECT_THROW((void)hpmbs::erfc(nan), DomainError);
    EXPECT_THROW((void)erfcx(nan), DomainError);
    EXPECT_THROW((void)normal_cdf(nan), DomainError);
}

}  // namespace
