#pragma once

// Coordinate changes between market variables and the dimensionless
// convection-diffusion-reaction form
//
//     u_tau = u_yy + (k1 - 1) u_y - k2 u,   u(y, 0) = max(1 - e^y, 0)
//
// shared by the single-asset, geometric-basket and quanto problems, plus the
// similarity map (z, w) = (x / sqrt(tau), sqrt(tau)) that sends the strike
// singularity to z = +-infinity.

#include <cstddef>
#include <vector>

namespace hpmbs {

/// Single-asset European option. `strike` is E (also written K).
struct VanillaOptionSpec {
    double spot = 40.0;
    double strike = 40.0;
    double rate = 0.05;
    double vol = 0.324336;
    double maturity = 0.5;
    double valuation_time = 0.0;

    /// Throws DomainError / InvalidTimeError.
    void validate() const;
    [[nodiscard]] double time_to_expiry() const noexcept { return maturity - valuation_time; }
};

struct ReducedCoordinates {
    double x = 0.0;    // ln(S/K)
    double tau = 0.0;  // sigma^2 (T - t) / 2
    double k = 0.0;    // 2 r / sigma^2
};

struct SimilarityPoint {
    double z = 0.0;  // x / sqrt(tau)
    double w = 0.0;  // sqrt(tau)
};

/// Drift and discount parameters of the unified reduced equation.
struct GeneralizedReducedParams {
    double k1 = 0.0;
    double k2 = 0.0;

    [[nodiscard]] static GeneralizedReducedParams single_asset(double k) noexcept { return {k, k}; }
};

/// Geometric basket put on n assets with payoff max(K - prod S_i^{alpha_i}, 0).
struct BasketSpec {
    std::vector<double> spots;
    std::vector<double> weights;
    std::vector<double> dividends;
    std::vector<double> covariance;  // row-major n x n, a_ij = sum_k sigma_ik sigma_jk
    double rate = 0.05;
    double strike = 40.0;
    double maturity = 0.5;
    double valuation_time = 0.0;

    [[nodiscard]] std::size_t size() const noexcept { return spots.size(); }
    [[nodiscard]] double cov(std::size_t i, std::size_t j) const { return covariance[i * size() + j]; }
    [[nodiscard]] double time_to_expiry() const noexcept { return maturity - valuation_time; }
    [[nodiscard]] double geometric_spot() const;

    /// Two assets from volatilities and a correlation.
    [[nodiscard]] static BasketSpec two_asset(double s1, double s2, double sigma1, double sigma2,
                                              double correlation, double alpha1, double rate,
                                              double strike, double maturity,
                                              double valuation_time = 0.0, double q1 = 0.0,
                                              double q2 = 0.0);
};

/// Quanto put with payoff S2(T) max(E - S1(T), 0). Rates r1, r2 are named
/// after their positions in the governing equation and carry no
/// domestic/foreign interpretation here.
struct QuantoSpec {
    double s1 = 40.0;
    double s2 = 40.0;
    double sigma1 = 0.1;
    double sigma2 = 0.3;
    double rho = 1.0;
    double r1 = 0.03;
    double r2 = 0.05;
    double q = 0.0;
    double strike = 40.0;
    double maturity = 0.5;
    double valuation_time = 0.0;

    [[nodiscard]] double time_to_expiry() const noexcept { return maturity - valuation_time; }
};

struct BasketReduction {
    double sigma_hat = 0.0;
    double q_hat = 0.0;
    double xi = 0.0;  // sum_i alpha_i ln(S_i / K)

    /// (k1, k2) = (2 (r - q_hat) / sigma_hat^2, 2 r / sigma_hat^2).
    [[nodiscard]] GeneralizedReducedParams params(double rate) const noexcept;
};

struct QuantoReduction {
    double sigma_hat_sq = 0.0;
    double q_hat = 0.0;
    double r_hat = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;

    [[nodiscard]] GeneralizedReducedParams params() const noexcept { return {k1, k2}; }
};

/// x = ln(S/K), tau = sigma^2 (T - t) / 2, k = 2 r / sigma^2.
[[nodiscard]] ReducedCoordinates to_dimensionless(const VanillaOptionSpec& spec);

/// P = K v.
[[nodiscard]] double from_dimensionless_value(double v, const VanillaOptionSpec& spec) noexcept;

/// Throws DegenerateTimeError for tau <= 0.
[[nodiscard]] SimilarityPoint to_similarity(const ReducedCoordinates& rc);
[[nodiscard]] ReducedCoordinates from_similarity(const SimilarityPoint& sp, double k) noexcept;

/// Throws ConstraintError if the weights do not sum to one (1e-12) and
/// MatrixError for a non-symmetric or indefinite covariance.
[[nodiscard]] BasketReduction reduce_basket(const BasketSpec& spec);

/// Throws DegenerateVolatilityError when sigma_hat^2 <= 0.
[[nodiscard]] QuantoReduction reduce_quanto(const QuantoSpec& spec);

}  // namespace hpmbs
