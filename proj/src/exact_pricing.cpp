#include "hpmbs/exact_pricing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hpmbs/errors.hpp"
#include "hpmbs/special_functions.hpp"

namespace hpmbs {
namespace {

// N(-d)
double upper_tail(double d) { return 0.5 * erfc(d * kSqrt1_2); }

}  // namespace

namespace detail {

double put_difference(double scale, double log_factor, double d_strike, double d_spot,
                      double spot_term) {
    if (d_strike >= 0.0) {
        const double gauss = std::exp(log_factor - 0.5 * d_strike * d_strike);
        return 0.5 * scale * gauss * (erfcx(d_strike * kSqrt1_2) - erfcx(d_spot * kSqrt1_2));
    }
    return scale * std::exp(log_factor) * upper_tail(d_strike) - spot_term * upper_tail(d_spot);
}

}  // namespace detail

namespace {

// Two-term differences of near-equal quantities can land a few ulps below
// zero deep out of the money.
double clamp_rounding(double value, double strike) {
    if (value < 0.0 && value > -1e-16 * strike) {
        return 0.0;
    }
    return value;
}

}  // namespace

double reduced_payoff(double y) noexcept { return std::max(-std::expm1(y), 0.0); }

double reduced_exact_u(double y, double tau, GeneralizedReducedParams params) {
    if (std::isnan(y) || std::isnan(tau) || !std::isfinite(params.k1) || !std::isfinite(params.k2)) {
        throw DomainError("reduced_exact_u: non-finite argument");
    }
    if (!(tau > 0.0)) {
        throw DegenerateTimeError("reduced_exact_u requires tau > 0");
    }
    const double k1 = params.k1;
    const double k2 = params.k2;
    if (y == -INFINITY) return std::exp(-k2 * tau);
    if (y == INFINITY) return 0.0;

    const double root = std::sqrt(2.0 * tau);
    const double d1 = y / root + std::sqrt(0.5 * tau) * (k1 - 1.0);
    const double d2 = y / root + std::sqrt(0.5 * tau) * (k1 + 1.0);
    // e^{alpha tau + beta y} I1 and e^{alpha tau + beta y} I2 with the
    // exponents collapsed: alpha + (k1-1)^2/4 = -k2, beta + (k1-1)/2 = 0,
    // alpha + (k1+1)^2/4 = k1 - k2, beta + (k1+1)/2 = 1.
    const double u = detail::put_difference(1.0, -k2 * tau, d1, d2, std::exp(y + (k1 - k2) * tau));
    return clamp_rounding(u, 1.0);
}

PutPrice bs_put(const VanillaOptionSpec& spec) {
    spec.validate();
    const double s = spec.time_to_expiry();
    if (s <= 0.0) {
        return {std::max(spec.strike - spec.spot, 0.0)};
    }
    const double vs = spec.vol * std::sqrt(s);
    const double d1 = (std::log(spec.spot / spec.strike) + (spec.rate + 0.5 * spec.vol * spec.vol) * s) / vs;
    const double d2 = d1 - vs;
    const double p = detail::put_difference(spec.strike, -spec.rate * s, d2, d1, spec.spot);
    return {clamp_rounding(p, spec.strike)};
}

double bs_call_from_parity(const VanillaOptionSpec& spec) {
    const double put = bs_put(spec).value;
    const double call = put + spec.spot - spec.strike * std::exp(-spec.rate * spec.time_to_expiry());
    return clamp_rounding(call, spec.strike);
}

PutPrice basket_put_exact(const BasketSpec& spec) {
    const BasketReduction red = reduce_basket(spec);
    if (spec.size() > 2) {
        throw DomainError("basket closed form is stated for at most two assets");
    }
    const double g = spec.geometric_spot();
    const double s = spec.time_to_expiry();
    if (s <= 0.0) {
        return {std::max(spec.strike - g, 0.0)};
    }
    const double disc_strike = spec.strike * std::exp(-spec.rate * s);
    const double fwd_basket = g * std::exp(-red.q_hat * s);
    if (red.sigma_hat * red.sigma_hat * s < 1e-300) {
        return {std::max(disc_strike - fwd_basket, 0.0)};
    }
    const double vs = red.sigma_hat * std::sqrt(s);
    const double d1 =
        (std::log(g / spec.strike) + (spec.rate - red.q_hat + 0.5 * red.sigma_hat * red.sigma_hat) * s) / vs;
    const double d2 = d1 - vs;
    return {clamp_rounding(detail::put_difference(spec.strike, -spec.rate * s, d2, d1, fwd_basket), spec.strike)};
}

PutPrice quanto_put_exact(const QuantoSpec& spec) {
    const QuantoReduction red = reduce_quanto(spec);
    const double s = spec.time_to_expiry();
    if (s <= 0.0) {
        return {spec.s2 * std::max(spec.strike - spec.s1, 0.0)};
    }
    const double sigma_hat = std::sqrt(red.sigma_hat_sq);
    const double vs = sigma_hat * std::sqrt(s);
    const double log_m = std::log(spec.s1 / spec.strike);
    const double d1 = (log_m + (red.q_hat - 0.5 * red.sigma_hat_sq) * s) / vs;
    const double d2 = (log_m + (red.q_hat + 0.5 * red.sigma_hat_sq) * s) / vs;
    const double per_unit_s2 = detail::put_difference(spec.strike, -red.r_hat * s, d1, d2,
                                                      spec.s1 * std::exp((red.q_hat - red.r_hat) * s));
    return {spec.s2 * clamp_rounding(per_unit_s2, spec.strike)};
}

}  // namespace hpmbs
