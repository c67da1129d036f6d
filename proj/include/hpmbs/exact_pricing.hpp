#pragma once

// Closed-form European put prices. Each pricer returns the contractual
// payoff at t = T, where the d-terms are singular.

#include "hpmbs/transforms.hpp"

namespace hpmbs {

/// A put value in currency units.
struct PutPrice {
    double value = 0.0;

    friend bool operator==(const PutPrice&, const PutPrice&) = default;
};

/// Black-Scholes put, P = E e^{-r(T-t)} N(-d2) - S N(-d1).
[[nodiscard]] PutPrice bs_put(const VanillaOptionSpec& spec);

/// Call from put-call parity without dividends.
[[nodiscard]] double bs_call_from_parity(const VanillaOptionSpec& spec);

/// Geometric basket put for one or two assets,
/// P = E e^{-r(T-t)} N(-d2) - e^{-q_hat (T-t)} S1^a1 S2^a2 N(-d1).
/// Larger baskets are priced through reduced_exact_u.
[[nodiscard]] PutPrice basket_put_exact(const BasketSpec& spec);

/// Quanto put in market variables,
/// P = E S2 e^{-r_hat (T-t)} N(-d1) - S1 S2 e^{(q_hat - r_hat)(T-t)} N(-d2)
/// with d1 = [ln(S1/E) + (q_hat - sigma_hat^2/2)(T-t)] / (sigma_hat sqrt(T-t))
/// and  d2 = [ln(S1/E) + (q_hat + sigma_hat^2/2)(T-t)] / (sigma_hat sqrt(T-t)).
/// Note d1/d2 are swapped relative to the vanilla naming.
[[nodiscard]] PutPrice quanto_put_exact(const QuantoSpec& spec);

/// Exact solution of u_tau = u_yy + (k1 - 1) u_y - k2 u with
/// u(y, 0) = max(1 - e^y, 0), obtained from the heat kernel after
/// u = e^{alpha tau + beta y} w, beta = -(k1 - 1)/2,
/// alpha = -(k1 - 1)^2/4 - k2. Throws DegenerateTimeError for tau <= 0.
[[nodiscard]] double reduced_exact_u(double y, double tau, GeneralizedReducedParams params);

/// Payoff of the reduced problem, max(1 - e^y, 0).
[[nodiscard]] double reduced_payoff(double y) noexcept;

namespace detail {

/// X N(-d_strike) - Y N(-d_spot) with X = scale e^{log_factor} and
/// Y = spot_term, where d_spot > d_strike and X phi(d_strike) = Y phi(d_spot)
/// (true of every put formula here). For d_strike >= 0 both tails are
/// written as e^{-d_strike^2/2} erfcx(.), so the common Gaussian factors
/// out and the subtraction no longer cancels far out of the money.
[[nodiscard]] double put_difference(double scale, double log_factor, double d_strike,
                                    double d_spot, double spot_term);

}  // namespace detail

}  // namespace hpmbs
