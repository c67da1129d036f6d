#include "hpmbs/transforms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hpmbs/errors.hpp"

namespace hpmbs {
namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

void require_positive(double v, const char* what) {
    require_finite(v, what);
    if (!(v > 0.0)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_time_order(double t, double maturity) {
    if (t > maturity) {
        throw InvalidTimeError("valuation time is after maturity");
    }
}

}  // namespace

void VanillaOptionSpec::validate() const {
    require_positive(spot, "spot");
    require_positive(strike, "strike");
    require_finite(rate, "rate");
    require_positive(vol, "vol");
    require_finite(maturity, "maturity");
    require_finite(valuation_time, "valuation_time");
    require_time_order(valuation_time, maturity);
}

ReducedCoordinates to_dimensionless(const VanillaOptionSpec& spec) {
    spec.validate();
    const double var = spec.vol * spec.vol;
    return {std::log(spec.spot / spec.strike), 0.5 * var * spec.time_to_expiry(),
            2.0 * spec.rate / var};
}

double from_dimensionless_value(double v, const VanillaOptionSpec& spec) noexcept {
    return spec.strike * v;
}

SimilarityPoint to_similarity(const ReducedCoordinates& rc) {
    if (!(rc.tau > 0.0)) {
        throw DegenerateTimeError("similarity map is singular at tau = 0");
    }
    const double w = std::sqrt(rc.tau);
    return {rc.x / w, w};
}

ReducedCoordinates from_similarity(const SimilarityPoint& sp, double k) noexcept {
    return {sp.z * sp.w, sp.w * sp.w, k};
}

double BasketSpec::geometric_spot() const {
    double log_g = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        log_g += weights[i] * std::log(spots[i]);
    }
    return std::exp(log_g);
}

BasketSpec BasketSpec::two_asset(double s1, double s2, double sigma1, double sigma2,
                                 double correlation, double alpha1, double rate, double strike,
                                 double maturity, double valuation_time, double q1, double q2) {
    const double c12 = correlation * sigma1 * sigma2;
    BasketSpec b;
    b.spots = {s1, s2};
    b.weights = {alpha1, 1.0 - alpha1};
    b.dividends = {q1, q2};
    b.covariance = {sigma1 * sigma1, c12, c12, sigma2 * sigma2};
    b.rate = rate;
    b.strike = strike;
    b.maturity = maturity;
    b.valuation_time = valuation_time;
    return b;
}

GeneralizedReducedParams BasketReduction::params(double rate) const noexcept {
    const double var = sigma_hat * sigma_hat;
    return {2.0 * (rate - q_hat) / var, 2.0 * rate / var};
}

BasketReduction reduce_basket(const BasketSpec& spec) {
    const std::size_t n = spec.size();
    if (n == 0) {
        throw DomainError("basket must contain at least one asset");
    }
    if (spec.weights.size() != n || spec.dividends.size() != n || spec.covariance.size() != n * n) {
        throw DomainError("basket vectors disagree on the asset count");
    }
    for (double s : spec.spots) require_positive(s, "basket spot");
    for (double a : spec.weights) require_finite(a, "basket weight");
    for (double q : spec.dividends) require_finite(q, "basket dividend");
    for (double c : spec.covariance) require_finite(c, "covariance entry");
    require_positive(spec.strike, "strike");
    require_finite(spec.rate, "rate");
    require_finite(spec.maturity, "maturity");
    require_finite(spec.valuation_time, "valuation_time");
    require_time_order(spec.valuation_time, spec.maturity);

    const double weight_sum = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
    if (std::fabs(weight_sum - 1.0) > 1e-12) {
        throw ConstraintError("basket weights must sum to 1");
    }

    Eigen::MatrixXd a(n, n);
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = spec.cov(i, j);
            scale = std::max(scale, std::fabs(a(i, j)));
        }
    }
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale) {
        throw MatrixError("covariance must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() < -1e-12 * scale) {
        throw MatrixError("covariance must be positive semidefinite");
    }

    const Eigen::Map<const Eigen::VectorXd> alpha(spec.weights.data(), static_cast<Eigen::Index>(n));
    const double var = std::max(alpha.dot(a * alpha), 0.0);

    BasketReduction r;
    r.sigma_hat = std::sqrt(var);
    double drift = 0.0;
    double xi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        drift += spec.weights[i] * (spec.dividends[i] + 0.5 * a(i, i));
        xi += spec.weights[i] * std::log(spec.spots[i] / spec.strike);
    }
    r.q_hat = drift - 0.5 * var;
    r.xi = xi;
    return r;
}

QuantoReduction reduce_quanto(const QuantoSpec& spec) {
    require_positive(spec.s1, "s1");
    require_positive(spec.s2, "s2");
    require_positive(spec.strike, "strike");
    require_finite(spec.sigma1, "sigma1");
    require_finite(spec.sigma2, "sigma2");
    require_finite(spec.r1, "r1");
    require_finite(spec.r2, "r2");
    require_finite(spec.q, "q");
    require_finite(spec.maturity, "maturity");
    require_finite(spec.valuation_time, "valuation_time");
    if (!(spec.rho >= -1.0 && spec.rho <= 1.0)) {
        throw DomainError("rho must lie in [-1, 1]");
    }
    if (spec.sigma1 < 0.0 || spec.sigma2 < 0.0) {
        throw DomainError("quanto volatilities must be nonnegative");
    }
    require_time_order(spec.valuation_time, spec.maturity);

    QuantoReduction r;
    const double s2sq = spec.sigma2 * spec.sigma2;
    r.sigma_hat_sq =
        spec.sigma1 * spec.sigma1 - 2.0 * spec.rho * spec.sigma1 * spec.sigma2 + s2sq;
    if (!(r.sigma_hat_sq > 0.0)) {
        throw DegenerateVolatilityError("reduced quanto variance must be positive");
    }
    r.q_hat = 2.0 * spec.r2 - spec.r1 - spec.q - s2sq;
    r.r_hat = spec.r1 - 2.0 * spec.r2 + s2sq;
    r.k1 = 2.0 * r.q_hat / r.sigma_hat_sq;
    r.k2 = 2.0 * r.r_hat / r.sigma_hat_sq;
    return r;
}

}  // namespace hpmbs
