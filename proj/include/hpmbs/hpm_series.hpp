#pragma once

// Homotopy-perturbation approximations of the reduced put problem.
//
// After the similarity map z = y / sqrt(tau), w = sqrt(tau), u = v / w, the
// n-th correction separates as u_n(z, w) = f_n(z) w^n, and every f_n has the
// form
//
//     f_n(z) = A_n(z) e^{-z^2/4} / sqrt(pi) + B_n(z) (erf(z/2) - 1)
//
// with polynomials A_n (degree n) and B_n (degree n + 1). The solution is
// smooth in z; the strike singularity sits at z = +-infinity. Terms are
// available for n = 0..5.

#include <array>
#include <utility>
#include <vector>

#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/transforms.hpp"

namespace hpmbs {

inline constexpr int kMaxTermIndex = 5;
inline constexpr int kMaxSeriesOrder = kMaxTermIndex + 1;
inline constexpr int kDefaultSeriesOrder = kMaxSeriesOrder;

/// Polynomial coefficients (ascending powers of z) of A_n and B_n.
struct TermPolynomials {
    static constexpr int kDegree = kMaxSeriesOrder;
    using Poly = std::array<double, kDegree + 1>;

    std::array<Poly, kMaxSeriesOrder> gauss{};
    std::array<Poly, kMaxSeriesOrder> erf{};

    /// Generalized (k1, k2) terms.
    [[nodiscard]] static TermPolynomials generalized(GeneralizedReducedParams params);

    /// sum_{n < order} w^n A_n and sum_{n < order} w^n B_n, so a truncated
    /// series at fixed tau costs one Gaussian/erfc pair per point.
    [[nodiscard]] std::pair<Poly, Poly> collapse(double w, int order) const;
};

[[nodiscard]] double evaluate_poly(const TermPolynomials::Poly& p, double z) noexcept;

/// gauss_coeff e^{-z^2/4}/sqrt(pi) + erf_coeff (erf(z/2) - 1), evaluated as
/// -erf_coeff erfc(z/2) for z <= 0 and through erfcx for z > 0 so the two
/// pieces do not cancel catastrophically in the right tail.
[[nodiscard]] double gauss_erf_combination(double z, double gauss_coeff, double erf_coeff);

/// One term of the series in product form.
struct SeriesTermValue {
    int n = 0;
    double value = 0.0;  // f_n(z) w^n
};

/// Naive (non-smooth) HPM solution max(e^{-k tau} - e^x, 0).
[[nodiscard]] double hpm1_reduced(double x, double tau, double k);

/// sum_{n=1}^{terms} (-k tau)^n / n!, the naive corrections below the strike.
[[nodiscard]] double naive_correction_sum(double k_tau, int terms);

/// f_n(xi) of the generalized series, 0 <= n <= 5.
[[nodiscard]] double phi_term(int n, double xi, GeneralizedReducedParams params);

/// f_n(z) of the single-asset series written out term by term; equals
/// phi_term(n, z, {k, k}).
[[nodiscard]] double single_asset_term(int n, double z, double k);

/// Basket terms with the sigma_hat, q_hat and r coefficients exactly as
/// printed for the basket homotopy. Kept for comparison only; they do not
/// solve the reduced recursion and are not used by the default pricer.
[[nodiscard]] double basket_term_literal(int n, double z, const BasketReduction& red, double rate);

/// u_n(z, w) = f_n(z) w^n for n < order.
[[nodiscard]] std::vector<SeriesTermValue> series_terms(double z, double w,
                                                        GeneralizedReducedParams params, int order);

/// v(y, tau) = sqrt(tau) sum_{n < order} f_n(y / sqrt(tau)) tau^{n/2};
/// payoff at tau = 0. Raw (unclamped).
[[nodiscard]] double hpm_reduced_sum(double y, double tau, GeneralizedReducedParams params,
                                     int order = kDefaultSeriesOrder);

/// Same sum with the literal basket terms.
[[nodiscard]] double basket_literal_reduced_sum(double xi, double tau, const BasketReduction& red,
                                                double rate, int order = kDefaultSeriesOrder);

/// Truncated series with its parameters.
struct HpmExpansion {
    int order = kDefaultSeriesOrder;
    GeneralizedReducedParams params{};

    [[nodiscard]] double operator()(double y, double tau) const {
        return hpm_reduced_sum(y, tau, params, order);
    }
};

enum class BasketVariant { generalized, literal };

/// Smoothed series priced in currency units, clamped at zero.
[[nodiscard]] PutPrice price_single_hpm2(const VanillaOptionSpec& spec,
                                         int order = kDefaultSeriesOrder);

/// K max(e^{-k tau} - S/K, 0).
[[nodiscard]] PutPrice price_single_hpm1(const VanillaOptionSpec& spec);

[[nodiscard]] PutPrice price_basket_hpm(const BasketSpec& spec, int order = kDefaultSeriesOrder,
                                        BasketVariant variant = BasketVariant::generalized);

/// Reverts v = P / S2^2 with K = E / S2 taken at the valuation time.
[[nodiscard]] PutPrice price_quanto_hpm(const QuantoSpec& spec, int order = kDefaultSeriesOrder);

void check_series_order(int order);

}  // namespace hpmbs
