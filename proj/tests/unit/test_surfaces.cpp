#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frozen_values.hpp"
#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/hpm_series.hpp"
#include "hpmbs/surfaces.hpp"

namespace {

using namespace hpmbs;
namespace frozen = hpmbs::validation::frozen;

BasketSpec default_basket() { return BasketSpec::two_asset(40.0, 40.0, 0.1, 0.3, 0.0, 0.5, 0.05, 40.0, 0.5); }

std::string csv(const PriceSurface& s) {
    std::ostringstream os;
    s.write_csv(os);
    return os.str();
}

TEST(Linspace, EndpointsAndSpacing) {
    const auto v = linspace(1.0, 100.0, 201);
    ASSERT_EQ(v.size(), 201u);
    EXPECT_EQ(v.front(), 1.0);
    EXPECT_EQ(v.back(), 100.0);
    EXPECT_EQ(linspace(2.0, 5.0, 1), std::vector<double>{2.0});
    EXPECT_NEAR(v[1] - v[0], 99.0 / 200.0, 1e-14);
    EXPECT_THROW((void)linspace(0.0, 1.0, 0), DomainError);
}

TEST(ParallelFor, CoversEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 7, 4, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) hits[i].fetch_add(1);
    });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    EXPECT_GE(resolve_threads(0), 1);
    EXPECT_EQ(resolve_threads(3), 3);
}

TEST(ParallelFor, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(100, 10, 3,
                              [](std::size_t b, std::size_t) {
                                  if (b == 50) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(SinglePrices, BatchMatchesPointPricers) {
    const VanillaOptionSpec base;
    const auto spots = linspace(1.0, 100.0, 201);
    const auto exact = single_prices(base, spots, PriceMethod::exact);
    const auto hpm1 = single_prices(base, spots, PriceMethod::hpm1);
    const auto hpm2 = single_prices(base, spots, PriceMethod::hpm2);
    for (std::size_t i = 0; i < spots.size(); ++i) {
        VanillaOptionSpec s = base;
        s.spot = spots[i];
        EXPECT_NEAR(exact[i], bs_put(s).value, 1e-12) << spots[i];
        EXPECT_NEAR(hpm1[i], price_single_hpm1(s).value, 1e-12) << spots[i];
        EXPECT_NEAR(hpm2[i], price_single_hpm2(s).value, 1e-12) << spots[i];
    }
}

TEST(BasketPrices, BatchMatchesPointPricers) {
    const BasketSpec base = default_basket();
    const auto s1 = linspace(20.0, 60.0, 9);
    const auto s2 = linspace(20.0, 60.0, 7);
    const auto exact = basket_prices(base, s1, s2, PriceMethod::exact);
    const auto hpm2 = basket_prices(base, s1, s2, PriceMethod::hpm2);
    const auto literal = basket_prices(base, s1, s2, PriceMethod::basket_literal);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s2.size(); ++j) {
            BasketSpec b = base;
            b.spots = {s1[i], s2[j]};
            const std::size_t k = i * s2.size() + j;
            EXPECT_NEAR(exact[k], basket_put_exact(b).value, 1e-12);
            EXPECT_NEAR(hpm2[k], price_basket_hpm(b).value, 1e-12);
            EXPECT_NEAR(literal[k], price_basket_hpm(b, kDefaultSeriesOrder, BasketVariant::literal).value, 1e-12);
        }
    }
    EXPECT_THROW((void)basket_prices(base, s1, s2, PriceMethod::hpm1), DomainError);
}

TEST(QuantoPrices, BatchMatchesPointPricers) {
    const QuantoSpec base;
    const auto s1 = linspace(20.0, 60.0, 9);
    const auto s2 = linspace(20.0, 60.0, 7);
    const auto exact = quanto_prices(base, s1, s2, PriceMethod::exact);
    const auto hpm2 = quanto_prices(base, s1, s2, PriceMethod::hpm2);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s2.size(); ++j) {
            QuantoSpec q = base;
            q.s1 = s1[i];
            q.s2 = s2[j];
            const std::size_t k = i * s2.size() + j;
            const double want = quanto_put_exact(q).value;
            EXPECT_NEAR(exact[k], want, 1e-12 * std::max(1.0, want));
            const double want_hpm = price_quanto_hpm(q).value;
            EXPECT_NEAR(hpm2[k], want_hpm, 1e-12 * std::max(1.0, want_hpm));
        }
    }
}

TEST(Surfaces, CurveShapeAndDeepOutOfTheMoneyRow) {
    const PriceSurface s = single_curve_surface(VanillaOptionSpec{}, linspace(1.0, 100.0, 201));
    EXPECT_NO_THROW(s.validate());
    ASSERT_EQ(s.value_names, (std::vector<std::string>{"exact", "hpm1", "hpm2"}));
    EXPECT_EQ(s.point_count(), 201u);
    EXPECT_NEAR(s.values[0].back(), 0.0, 1e-3);
    EXPECT_NEAR(s.values[2].back(), 0.0, 1e-3);
}

TEST(Surfaces, ErrorSurfacesStayWithinFrozenBounds) {
    const auto axis = linspace(20.0, 60.0, 41);
    const PriceSurface basket = basket_surface(default_basket(), axis, axis, true);
    const PriceSurface quanto = quanto_surface(QuantoSpec{}, axis, axis, true);
    double bw = 0.0;
    double qw = 0.0;
    for (double v : basket.values[0]) bw = std::max(bw, std::fabs(v));
    for (double v : quanto.values[0]) qw = std::max(qw, std::fabs(v));
    EXPECT_LE(bw, 1.05 * frozen::kBasketHpmMaxError);
    EXPECT_LE(qw, 1.05 * frozen::kQuantoHpmMaxError);
}

TEST(Surfaces, CsvFormat) {
    const PriceSurface s = single_curve_surface(VanillaOptionSpec{}, linspace(30.0, 50.0, 3));
    const std::string text = csv(s);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.rfind("# contract: single\n", 0), 0u);
    EXPECT_NE(text.find("\nS,exact,hpm1,hpm2\n"), std::string::npos);
    EXPECT_NE(text.find("\n3.00000000000e+01,"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
}

TEST(Surfaces, CsvIsByteStableAndThreadInvariant) {
    const auto axis = linspace(20.0, 60.0, 41);
    SweepOptions one;
    one.threads = 1;
    SweepOptions many;
    many.threads = 4;
    const std::string a = csv(quanto_surface(QuantoSpec{}, axis, axis, true, one));
    const std::string b = csv(quanto_surface(QuantoSpec{}, axis, axis, true, many));
    const std::string c = csv(quanto_surface(QuantoSpec{}, axis, axis, true, many));
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, c);
    const auto spots = linspace(1.0, 100.0, 101);
    const auto times = linspace(0.0, 0.5, 11);
    EXPECT_EQ(csv(single_error_surface(VanillaOptionSpec{}, spots, times, one)),
              csv(single_error_surface(VanillaOptionSpec{}, spots, times, many)));
}

TEST(Surfaces, MethodSurfaceColumns) {
    const auto axis = linspace(20.0, 60.0, 5);
    const PriceSurface exact = basket_method_surface(default_basket(), axis, axis, PriceMethod::exact);
    EXPECT_EQ(exact.value_names, std::vector<std::string>{"price"});
    const PriceSurface hpm = basket_method_surface(default_basket(), axis, axis, PriceMethod::hpm2);
    ASSERT_EQ(hpm.value_names, (std::vector<std::string>{"price", "exact", "error"}));
    for (std::size_t k = 0; k < hpm.point_count(); ++k) {
        EXPECT_EQ(hpm.values[2][k], hpm.values[0][k] - hpm.values[1][k]);
        EXPECT_EQ(hpm.values[1][k], exact.values[0][k]);
    }
}

TEST(Surfaces, ValidateRejectsBrokenSurfaces) {
    PriceSurface s;
    s.axis1 = {1.0, 2.0};
    s.value_names = {"v"};
    s.values = {{1.0}};
    EXPECT_THROW(s.validate(), DomainError);
    s.values = {{1.0, NAN}};
    EXPECT_THROW(s.validate(), DomainError);
}

}  // namespace
