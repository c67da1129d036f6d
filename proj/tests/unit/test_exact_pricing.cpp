#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frozen_values.hpp"
#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/oracles.hpp"
#include "hpmbs/special_functions.hpp"

namespace {

using namespace hpmbs;
namespace frozen = hpmbs::validation::frozen;

VanillaOptionSpec random_spec(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> price(10.0, 100.0);
    std::uniform_real_distribution<double> rate(0.0, 0.1);
    std::uniform_real_distribution<double> vol(0.1, 0.6);
    std::uniform_real_distribution<double> maturity(0.1, 2.0);
    VanillaOptionSpec s;
    s.spot = price(rng);
    s.strike = price(rng);
    s.rate = rate(rng);
    s.vol = vol(rng);
    s.maturity = maturity(rng);
    return s;
}

// Black-Scholes put in long double with the extended-precision erfc oracle.
long double put_oracle(const VanillaOptionSpec& s) {
    const long double tt = s.maturity - s.valuation_time;
    const long double vs = s.vol * std::sqrt(tt);
    const long double d1 = (std::log(static_cast<long double>(s.spot) / s.strike) +
                            (s.rate + 0.5L * s.vol * s.vol) * tt) / vs;
    const long double d2 = d1 - vs;
    const long double r = 0.70710678118654752440084436210485L;
    return s.strike * std::exp(-s.rate * tt) * 0.5L * oracle::erfc_extended(d2 * r) -
           s.spot * 0.5L * oracle::erfc_extended(d1 * r);
}

TEST(BsPut, FrozenAtTheMoneyValue) {
    EXPECT_NEAR(bs_put(VanillaOptionSpec{}).value, frozen::kVanillaAtm, 1e-12 * frozen::kVanillaAtm);
}

TEST(BsPut, MatchesExtendedPrecisionOracle) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const VanillaOptionSpec s = random_spec(rng);
        const long double want = put_oracle(s);
        EXPECT_NEAR(bs_put(s).value, static_cast<double>(want), 1e-13 * s.strike) << i;
    }
}

TEST(BsPut, DeepOutOfTheMoneyKeepsRelativeAccuracy) {
    VanillaOptionSpec s;
    for (double spot : {120.0, 200.0, 400.0}) {
        s.spot = spot;
        const long double want = put_oracle(s);
        ASSERT_GT(want, 0.0L);
        EXPECT_NEAR(bs_put(s).value / static_cast<double>(want), 1.0, 1e-11) << spot;
    }
}

TEST(BsPut, Boundaries) {
    VanillaOptionSpec s;
    s.spot = 1e-4;
    EXPECT_NEAR(bs_put(s).value, s.strike * std::exp(-s.rate * s.maturity), 1.01e-4);
    s = {};
    s.valuation_time = s.maturity;
    for (double spot : {20.0, 40.0, 60.0}) {
        s.spot = spot;
        EXPECT_EQ(bs_put(s).value, std::max(s.strike - spot, 0.0));
    }
}

TEST(BsPut, NoArbitrageBoundsAndMonotonicity) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        VanillaOptionSpec s = random_spec(rng);
        const double disc = s.strike * std::exp(-s.rate * s.maturity);
        const double p = bs_put(s).value;
        EXPECT_GE(p, std::max(disc - s.spot, 0.0) - 1e-12);
        EXPECT_LE(p, disc + 1e-12);
        VanillaOptionSpec higher = s;
        higher.spot *= 1.01;
        EXPECT_LE(bs_put(higher).value, p + 1e-14);
        VanillaOptionSpec riskier = s;
        riskier.vol *= 1.1;
        EXPECT_GE(bs_put(riskier).value, p - 1e-14);
    }
}

TEST(BsPut, MonotoneOnSortedGrids) {
    VanillaOptionSpec s;
    double prev_in_spot = INFINITY;
    double prev_in_strike = -INFINITY;
    for (int i = 0; i < 200; ++i) {
        s = {};
        s.spot = 5.0 + 0.5 * i;
        const double by_spot = bs_put(s).value;
        EXPECT_LE(by_spot, prev_in_spot);
        prev_in_spot = by_spot;
        s = {};
        s.strike = 5.0 + 0.5 * i;
        const double by_strike = bs_put(s).value;
        EXPECT_GE(by_strike, prev_in_strike);
        prev_in_strike = by_strike;
    }
    s = {};
    s.spot = 1e4;
    EXPECT_LT(bs_put(s).value, 1e-100);
}

TEST(BsPut, HomogeneousOfDegreeOne) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const VanillaOptionSpec s = random_spec(rng);
        VanillaOptionSpec scaled = s;
        scaled.spot *= 3.0;
        scaled.strike *= 3.0;
        EXPECT_NEAR(bs_put(scaled).value, 3.0 * bs_put(s).value, 1e-12 * scaled.strike);
    }
}

TEST(BsPut, RejectsInvalidSpecs) {
    VanillaOptionSpec s;
    s.strike = 0.0;
    EXPECT_THROW((void)bs_put(s), DomainError);
    s = {};
    s.valuation_time = 1.0;
    EXPECT_THROW((void)bs_put(s), InvalidTimeError);
}

TEST(BsCall, AgreesWithDirectFormula) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        const VanillaOptionSpec s = random_spec(rng);
        const double vs = s.vol * std::sqrt(s.maturity);
        const double d1 = (std::log(s.spot / s.strike) + (s.rate + 0.5 * s.vol * s.vol) * s.maturity) / vs;
        const double call = s.spot * normal_cdf(d1) - s.strike * std::exp(-s.rate * s.maturity) * normal_cdf(d1 - vs);
        EXPECT_NEAR(bs_call_from_parity(s), call, 1e-12 * s.strike) << i;
    }
}

TEST(BsCall, Boundaries) {
    VanillaOptionSpec s;
    s.spot = 1e-6;
    EXPECT_NEAR(bs_call_from_parity(s), 0.0, 1e-12);
    s = {};
    s.valuation_time = s.maturity;
    s.spot = 55.0;
    EXPECT_DOUBLE_EQ(bs_call_from_parity(s), 15.0);
}

TEST(BasketPut, OneAssetEqualsVanilla) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
        const VanillaOptionSpec s = random_spec(rng);
        BasketSpec b;
        b.spots = {s.spot};
        b.weights = {1.0};
        b.dividends = {0.0};
        b.covariance = {s.vol * s.vol};
        b.rate = s.rate;
        b.strike = s.strike;
        b.maturity = s.maturity;
        EXPECT_NEAR(basket_put_exact(b).value, bs_put(s).value, 1e-12 * std::max(1.0, s.strike)) << i;
    }
}

TEST(BasketPut, FrozenValueAndPayoff) {
    BasketSpec b = BasketSpec::two_asset(40.0, 40.0, 0.1, 0.3, 0.0, 0.5, 0.05, 40.0, 0.5);
    EXPECT_NEAR(basket_put_exact(b).value, frozen::kBasketAtm, 1e-12 * frozen::kBasketAtm);
    b = BasketSpec::two_asset(30.0, 45.0, 0.1, 0.3, 0.0, 0.5, 0.05, 40.0, 0.5, 0.5);
    EXPECT_NEAR(basket_put_exact(b).value, 40.0 - std::sqrt(30.0 * 45.0), 1e-13);
}

TEST(QuantoPut, FrozenValueAndPayoff) {
    EXPECT_NEAR(quanto_put_exact(QuantoSpec{}).value, frozen::kQuantoAtm, 1e-12 * frozen::kQuantoAtm);
    QuantoSpec q;
    q.valuation_time = q.maturity;
    q.s1 = 35.0;
    q.s2 = 1.5;
    EXPECT_DOUBLE_EQ(quanto_put_exact(q).value, 1.5 * 5.0);
}

TEST(QuantoPut, LinearInSecondAsset) {
    for (double s1 : {20.0, 40.0, 60.0}) {
        QuantoSpec q;
        q.s1 = s1;
        q.s2 = 25.0;
        const double base = quanto_put_exact(q).value;
        q.s2 = 50.0;
        EXPECT_NEAR(quanto_put_exact(q).value, 2.0 * base, 1e-12 * std::max(1.0, base));
    }
}

TEST(QuantoPut, ExactlyHomogeneousInSecondAsset) {
    QuantoSpec q;
    q.s1 = 37.0;
    q.s2 = 13.0;
    const double base = quanto_put_exact(q).value;
    q.s2 = 26.0;
    EXPECT_EQ(quanto_put_exact(q).value, 2.0 * base);
}

TEST(QuantoPut, MatchesReducedRoute) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> spot(20.0, 60.0);
    std::uniform_real_distribution<double> vol(0.05, 0.5);
    std::uniform_real_distribution<double> rate(0.0, 0.08);
    for (int i = 0; i < 100; ++i) {
        QuantoSpec q;
        q.s1 = spot(rng);
        q.s2 = spot(rng);
        q.sigma1 = vol(rng);
        q.sigma2 = vol(rng);
        q.rho = 0.3;
        q.r1 = rate(rng);
        q.r2 = rate(rng);
        const QuantoReduction red = reduce_quanto(q);
        const double tau = 0.5 * red.sigma_hat_sq * q.time_to_expiry();
        const double reduced_strike = q.strike / q.s2;
        const double u = reduced_exact_u(std::log(q.s1 / q.strike), tau, red.params());
        const double via_reduced = q.s2 * q.s2 * reduced_strike * u;
        const double direct = quanto_put_exact(q).value;
        EXPECT_NEAR(direct, via_reduced, 1e-10 * std::max(1.0, direct)) << i;
    }
}

TEST(BasketPut, MatchesReducedRoute) {
    std::mt19937_64 rng(38);
    std::uniform_real_distribution<double> spot(20.0, 60.0);
    std::uniform_real_distribution<double> vol(0.05, 0.5);
    std::uniform_real_distribution<double> corr(-0.9, 0.9);
    std::uniform_real_distribution<double> weight(0.1, 0.9);
    for (int i = 0; i < 100; ++i) {
        const BasketSpec b = BasketSpec::two_asset(spot(rng), spot(rng), vol(rng), vol(rng), corr(rng),
                                                   weight(rng), 0.05, 40.0, 0.75, 0.0, 0.01, 0.02);
        const BasketReduction red = reduce_basket(b);
        const double tau = 0.5 * red.sigma_hat * red.sigma_hat * b.time_to_expiry();
        const double via_reduced = b.strike * reduced_exact_u(red.xi, tau, red.params(b.rate));
        EXPECT_NEAR(basket_put_exact(b).value, via_reduced, 1e-12 * b.strike) << i;
    }
}

TEST(QuantoPut, VanishesForLargeFirstAsset) {
    QuantoSpec q;
    q.s1 = 1e4;
    EXPECT_LT(quanto_put_exact(q).value, 1e-100);
}

TEST(ReducedExact, EqualParametersReproduceVanilla) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 100; ++i) {
        const VanillaOptionSpec s = random_spec(rng);
        const ReducedCoordinates rc = to_dimensionless(s);
        const double u = reduced_exact_u(rc.x, rc.tau, GeneralizedReducedParams::single_asset(rc.k));
        EXPECT_NEAR(s.strike * u, bs_put(s).value, 1e-12 * s.strike) << i;
    }
}

TEST(ReducedExact, Limits) {
    const GeneralizedReducedParams p{0.95, 0.95};
    EXPECT_NEAR(reduced_exact_u(50.0, 0.26, p), 0.0, 1e-300);
    EXPECT_NEAR(reduced_exact_u(-1.0, 1e-8, p), 1.0 - std::exp(-1.0), 1e-6);
    EXPECT_THROW((void)reduced_exact_u(0.0, 0.0, p), DegenerateTimeError);
}

TEST(ReducedExact, Payoff) {
    EXPECT_EQ(reduced_payoff(0.0), 0.0);
    EXPECT_EQ(reduced_payoff(1.0), 0.0);
    EXPECT_DOUBLE_EQ(reduced_payoff(-1.0), 1.0 - std::exp(-1.0));
}

}  // namespace
