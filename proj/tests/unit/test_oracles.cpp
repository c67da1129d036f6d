#include <gtest/gtest.h>

#include <cmath>

#include "hpmbs/hpm_series.hpp"
#include "hpmbs/oracles.hpp"

namespace {

using namespace hpmbs;

// Reference digits computed with 30-digit arbitrary-precision arithmetic.
TEST(Oracles, ErfcAgainstPublishedDigits) {
    EXPECT_NEAR(static_cast<double>(oracle::erfc_extended(1.0L)) / 0.157299207050285130658779364917, 1.0,
                1e-15);
    EXPECT_NEAR(static_cast<double>(oracle::erfc_extended(5.0L)) / 1.53745979442803485018834348538e-12,
                1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(oracle::erfc_extended(20.0L)) / 5.39586561160790092893499916791e-176,
                1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(oracle::erfc_extended(-3.7L)), 1.99999983284894209085402487065, 1e-16);
}

TEST(Oracles, ErfSeriesAndQuadratureAgainstPublishedDigits) {
    EXPECT_NEAR(static_cast<double>(oracle::erf_series(0.5L)), 0.520499877813046537682746653892, 1e-17);
    EXPECT_NEAR(static_cast<double>(oracle::normal_cdf_quadrature(1.0L)), 0.841344746068542948585232545632,
                1e-17);
}

TEST(Oracles, GaussLegendreIsExactOnPolynomials) {
    const auto f = [](long double x) { return 5.0L * x * x * x * x - 3.0L * x + 1.0L; };
    // integral over [0, 2] = 32 - 6 + 2
    EXPECT_NEAR(static_cast<double>(oracle::gauss_legendre(f, 0.0L, 2.0L, 1)), 28.0, 1e-15);
}

TEST(Oracles, LeftAsymptoteLowOrders) {
    const GeneralizedReducedParams p{0.7, 1.3};
    const double z = -3.0;
    EXPECT_DOUBLE_EQ(oracle::left_asymptote(0, z, p), -z);
    EXPECT_NEAR(oracle::left_asymptote(1, z, p), -z * z / 2.0 - p.k1, 1e-15);
    EXPECT_NEAR(oracle::left_asymptote_leading(3, z), z * z * z * z / 24.0, 1e-15);
}

TEST(Oracles, SeriesTermsApproachFullLeftAsymptote) {
    const GeneralizedReducedParams p{0.4, 1.9};
    for (int n = 0; n <= kMaxTermIndex; ++n) {
        const double want = oracle::left_asymptote(n, -12.0, p);
        EXPECT_NEAR(phi_term(n, -12.0, p), want, 1e-10 * std::max(1.0, std::fabs(want))) << n;
    }
}

}  // namespace
