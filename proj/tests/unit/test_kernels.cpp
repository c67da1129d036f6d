#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/hpm_series.hpp"
#include "hpmbs/kernels.hpp"
#include "hpmbs/special_functions.hpp"

namespace {

using namespace hpmbs;
using kernels::Isa;

// Restores the process-wide kernel selection after each test.
class Kernels : public ::testing::Test {
protected:
    void SetUp() override { saved_ = kernels::active_isa(); }
    void TearDown() override { kernels::force_isa(saved_); }

private:
    Isa saved_ = Isa::scalar;
};

template <class F>
std::pair<std::vector<double>, std::vector<double>> both_variants(const std::vector<double>& in, F&& call) {
    std::vector<double> a(in.size());
    std::vector<double> b(in.size());
    kernels::force_isa(Isa::scalar);
    call(in, a);
    kernels::force_isa(Isa::avx2);
    call(in, b);
    return {a, b};
}

void expect_close(const std::vector<double>& want, const std::vector<double>& got, double rel, double abs,
                  const std::vector<double>& in) {
    ASSERT_EQ(want.size(), got.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (std::isinf(want[i])) {
            EXPECT_EQ(want[i], got[i]) << in[i];
            continue;
        }
        EXPECT_LE(std::fabs(want[i] - got[i]), rel * std::fabs(want[i]) + abs) << "input " << in[i];
    }
}

std::vector<double> erfc_inputs() {
    std::vector<double> x;
    for (double v = -30.0; v <= 30.0; v += 0.0137) x.push_back(v);
    for (double t : {0.0, -0.0, 0.46875, -0.46875, 4.0, -4.0, 6.0, -6.0, 26.543, 26.6, -26.628}) x.push_back(t);
    x.push_back(INFINITY);
    x.push_back(-INFINITY);
    x.push_back(1.0);  // odd length exercises the remainder path
    return x;
}

TEST_F(Kernels, NamesAndAvailability) {
    EXPECT_EQ(kernels::isa_name(Isa::scalar), "scalar");
    EXPECT_EQ(kernels::isa_name(Isa::avx2), "avx2");
    EXPECT_TRUE(kernels::isa_available(Isa::scalar));
    if (!kernels::isa_available(Isa::avx2)) {
        EXPECT_THROW(kernels::force_isa(Isa::avx2), std::invalid_argument);
    }
}

TEST_F(Kernels, ScalarVariantMatchesLibraryFunctions) {
    kernels::force_isa(Isa::scalar);
    const auto x = erfc_inputs();
    std::vector<double> out(x.size());
    kernels::erfc_batch(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(out[i], hpmbs::erfc(x[i])) << x[i];
    kernels::normal_cdf_batch(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(out[i], normal_cdf(x[i])) << x[i];
}

TEST_F(Kernels, ErfcAvx2MatchesScalar) {
    if (!kernels::isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 kernels not available";
    const auto x = erfc_inputs();
    const auto [want, got] = both_variants(x, [](const auto& in, auto& out) { kernels::erfc_batch(in, out); });
    expect_close(want, got, 1e-14, 0.0, x);
}

TEST_F(Kernels, NormalCdfAvx2MatchesScalar) {
    if (!kernels::isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 kernels not available";
    const auto x = erfc_inputs();
    const auto [want, got] =
        both_variants(x, [](const auto& in, auto& out) { kernels::normal_cdf_batch(in, out); });
    expect_close(want, got, 1e-14, 0.0, x);
}

TEST_F(Kernels, ReducedExactAvx2MatchesScalar) {
    if (!kernels::isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 kernels not available";
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> k(-2.0, 2.0);
    std::uniform_real_distribution<double> tau(0.01, 2.0);
    std::vector<double> y;
    for (double v = -6.0; v <= 6.0; v += 0.031) y.push_back(v);
    y.push_back(INFINITY);
    y.push_back(-INFINITY);
    for (int trial = 0; trial < 10; ++trial) {
        const GeneralizedReducedParams p{k(rng), k(rng)};
        const double t = tau(rng);
        const auto [want, got] = both_variants(
            y, [&](const auto& in, auto& out) { kernels::reduced_exact_batch(in, t, p, out); });
        expect_close(want, got, 1e-13, 1e-300, y);
        for (std::size_t i = 0; i + 2 < y.size(); ++i) {
            EXPECT_EQ(want[i], reduced_exact_u(y[i], t, p)) << y[i];
        }
    }
}

TEST_F(Kernels, HpmSumAvx2MatchesScalar) {
    if (!kernels::isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 kernels not available";
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> k(-2.0, 2.0);
    std::uniform_real_distribution<double> tau(0.01, 1.0);
    std::vector<double> y;
    for (double v = -4.0; v <= 4.0; v += 0.017) y.push_back(v);
    y.push_back(INFINITY);
    for (int trial = 0; trial < 10; ++trial) {
        const GeneralizedReducedParams p{k(rng), k(rng)};
        const double t = tau(rng);
        for (int order = 1; order <= kMaxSeriesOrder; ++order) {
            const auto [want, got] = both_variants(
                y, [&](const auto& in, auto& out) { kernels::hpm_sum_batch(in, t, p, order, out); });
            expect_close(want, got, 1e-13, 1e-15, y);
            for (std::size_t i = 0; i < y.size(); i += 7) {
                EXPECT_NEAR(want[i], hpm_reduced_sum(y[i], t, p, order),
                            1e-13 * std::fabs(want[i]) + 1e-14)
                    << y[i];
            }
        }
    }
}

TEST_F(Kernels, HpmSumAtZeroTauIsPayoff) {
    const std::vector<double> y{-1.0, 0.0, 0.5};
    std::vector<double> out(3);
    kernels::hpm_sum_batch(y, 0.0, {1.0, 1.0}, 6, out);
    EXPECT_DOUBLE_EQ(out[0], 1.0 - std::exp(-1.0));
    EXPECT_EQ(out[1], 0.0);
    EXPECT_EQ(out[2], 0.0);
}

TEST_F(Kernels, RejectBadInput) {
    const std::vector<double> x{0.0, NAN};
    std::vector<double> out(2);
    std::vector<double> short_out(1);
    EXPECT_THROW(kernels::erfc_batch(x, out), DomainError);
    const std::vector<double> ok{0.0, 1.0};
    EXPECT_THROW(kernels::erfc_batch(ok, short_out), std::invalid_argument);
    EXPECT_THROW(kernels::reduced_exact_batch(ok, 0.0, {1.0, 1.0}, out), Error);
    EXPECT_THROW(kernels::hpm_sum_batch(ok, 0.1, {1.0, 1.0}, 7, out), UnsupportedOrderError);
    const std::vector<double> neg_inf{-INFINITY};
    std::vector<double> one(1);
    EXPECT_THROW(kernels::hpm_sum_batch(neg_inf, 0.1, {1.0, 1.0}, 6, one), DomainError);
}

}  // namespace
