#include "hpmbs/hpm_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hpmbs/errors.hpp"
#include "hpmbs/special_functions.hpp"

namespace hpmbs {
namespace {

void check_term_index(int n) {
    if (n < 0 || n > kMaxTermIndex) {
        throw UnsupportedOrderError("series term index " + std::to_string(n) +
                                    " outside 0.." + std::to_string(kMaxTermIndex));
    }
}

void require_argument(double z, const char* fn) {
    if (std::isnan(z)) {
        throw DomainError(std::string(fn) + ": NaN argument");
    }
}

// Integer power, kept explicit so the literal transcriptions read like the
// formulas they come from.
constexpr double pw(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

void check_series_order(int order) {
    if (order < 1 || order > kMaxSeriesOrder) {
        throw UnsupportedOrderError("series order " + std::to_string(order) + " outside 1.." +
                                    std::to_string(kMaxSeriesOrder));
    }
}

double evaluate_poly(const TermPolynomials::Poly& p, double z) noexcept {
    double acc = p.back();
    for (int i = TermPolynomials::kDegree - 1; i >= 0; --i) {
        acc = acc * z + p[static_cast<std::size_t>(i)];
    }
    return acc;
}

TermPolynomials TermPolynomials::generalized(GeneralizedReducedParams params) {
    const double a = params.k1;
    const double b = params.k2;
    const double d = a - b;
    TermPolynomials t;

    t.gauss[0] = {1.0};
    t.erf[0] = {0.0, 0.5};

    t.gauss[1] = {0.0, 0.5};
    t.erf[1] = {0.5 * a, 0.0, 0.25};

    t.gauss[2] = {(3 * a * a + 6 * a - 12 * b - 1) / 12.0, 0.0, 2.0 / 12.0};
    t.erf[2] = {0.0, 6 * d / 12.0, 0.0, 1.0 / 12.0};

    t.gauss[3] = {0.0, 2 * (-pw(a, 3) + 3 * a * a + 9 * a - 12 * b - 1) / 48.0, 0.0, 2.0 / 48.0};
    t.erf[3] = {12 * a * (a - 2 * b) / 48.0, 0.0, 12 * d / 48.0, 0.0, 1.0 / 48.0};

    // The z^2 coefficient carries -160 k2; without it the term fails both
    // the recursion and the k1 = k2 reduction to the single-asset u_4.
    const double g4_2 = 5 * pw(a, 4) - 20 * pw(a, 3) + 30 * a * a + 140 * a - 160 * b - 11;
    const double g4_0 = -10 * pw(a, 4) + 120 * pw(a, 3) + 180 * a * a - 40 * a -
                        240 * (a * a + 2 * a) * b + 480 * b * b + 80 * b + 6;
    t.gauss[4] = {g4_0 / 960.0, 0.0, g4_2 / 960.0, 0.0, 8.0 / 960.0};
    t.erf[4] = {0.0, 4 * 60 * d * d / 960.0, 0.0, 4 * 20 * d / 960.0, 0.0, 4.0 / 960.0};

    const double g5_3 = -(3 * pw(a, 5) - 15 * pw(a, 4) + 30 * pw(a, 3) - 30 * a * a - 225 * a + 240 * b + 13);
    const double g5_1 = 18 * pw(a, 5) - 150 * pw(a, 4) + 420 * pw(a, 3) + 900 * a * a - 150 * a +
                        (240 * pw(a, 3) - 720 * a * a - 2160 * a) * b + 240 * b + 1440 * b * b + 18;
    t.gauss[5] = {0.0, g5_1 / 5760.0, 0.0, g5_3 / 5760.0, 0.0, 8.0 / 5760.0};
    t.erf[5] = {4 * 120 * a * (a * a - 3 * a * b + 3 * b * b) / 5760.0, 0.0,
                4 * 180 * d * d / 5760.0, 0.0, 4 * 30 * d / 5760.0, 0.0, 4.0 / 5760.0};
    return t;
}

std::pair<TermPolynomials::Poly, TermPolynomials::Poly> TermPolynomials::collapse(double w,
                                                                                  int order) const {
    check_series_order(order);
    Poly g{};
    Poly e{};
    double wn = 1.0;
    for (int n = 0; n < order; ++n) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] += wn * gauss[static_cast<std::size_t>(n)][i];
            e[i] += wn * erf[static_cast<std::size_t>(n)][i];
        }
        wn *= w;
    }
    return {g, e};
}

double gauss_erf_combination(double z, double gauss_coeff, double erf_coeff) {
    const double s = 0.5 * z;
    if (s > 0.0) {
        if (s == INFINITY) return 0.0;
        return std::exp(-s * s) * (gauss_coeff * kInvSqrtPi - erf_coeff * erfcx(s));
    }
    return gauss_coeff * std::exp(-s * s) * kInvSqrtPi - erf_coeff * erfc(s);
}

double hpm1_reduced(double x, double tau, double k) {
    if (std::isnan(x) || !(tau >= 0.0) || !std::isfinite(k)) {
        throw DomainError("hpm1_reduced: invalid argument");
    }
    return std::max(std::exp(-k * tau) - std::exp(x), 0.0);
}

double naive_correction_sum(double k_tau, int terms) {
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        term *= -k_tau / n;
        sum += term;
    }
    return sum;
}

double phi_term(int n, double xi, GeneralizedReducedParams params) {
    check_term_index(n);
    require_argument(xi, "phi_term");
    const TermPolynomials t = TermPolynomials::generalized(params);
    const auto i = static_cast<std::size_t>(n);
    if (xi == INFINITY) return 0.0;
    return gauss_erf_combination(xi, evaluate_poly(t.gauss[i], xi), evaluate_poly(t.erf[i], xi));
}

double single_asset_term(int n, double z, double k) {
    check_term_index(n);
    require_argument(z, "single_asset_term");
    if (z == INFINITY) return 0.0;
    const double z2 = z * z;
    double g = 0.0;
    double e = 0.0;
    switch (n) {
        case 0:
            g = 1.0;
            e = 0.5 * z;
            break;
        case 1:
            g = 2.0 * z / 4.0;
            e = (z2 + 2 * k) / 4.0;
            break;
        case 2:
            g = (2 * z2 + 3 * k * k - 6 * k - 1) / 12.0;
            e = z2 * z / 12.0;
            break;
        case 3:
            g = 2 * z * (z2 - pw(k, 3) + 3 * k * k - 3 * k - 1) / 48.0;
            e = (z2 * z2 - 12 * k * k) / 48.0;
            break;
        case 4:
            g = (8 * z2 * z2 + (5 * pw(k, 4) - 20 * pw(k, 3) + 30 * k * k - 20 * k - 11) * z2 -
                 10 * pw(k, 4) - 120 * pw(k, 3) + 180 * k * k + 40 * k + 6) /
                960.0;
            e = 4 * pw(z, 5) / 960.0;
            break;
        default:
            g = (8 * pw(z, 5) - (3 * pw(k, 5) - 15 * pw(k, 4) + 30 * pw(k, 3) - 30 * k * k + 15 * k + 13) * pw(z, 3) +
                 (18 * pw(k, 5) + 90 * pw(k, 4) - 300 * pw(k, 3) + 180 * k * k + 90 * k + 18) * z) /
                5760.0;
            e = (4 * pw(z, 6) + 480 * pw(k, 3)) / 5760.0;
            break;
    }
    return gauss_erf_combination(z, g, e);
}

double basket_term_literal(int n, double z, const BasketReduction& red, double rate) {
    check_term_index(n);
    require_argument(z, "basket_term_literal");
    if (!(red.sigma_hat > 0.0)) {
        throw DegenerateVolatilityError("literal basket terms need sigma_hat > 0");
    }
    if (z == INFINITY) return 0.0;
    const double s = red.sigma_hat;
    const double s2 = s * s;
    const double q = red.q_hat;
    const double r = rate;
    const double qr = q - r;
    const double z2 = z * z;
    double g = 0.0;
    double e = 0.0;
    switch (n) {
        case 0:
            g = 1.0;
            e = 0.5 * z;
            break;
        case 1:
            g = 2.0 * z / 4.0;
            e = (s2 * z2 - 4 * (q - r)) / (4 * s2) / 4.0;
            break;
        case 2:
            g = (pw(s, 4) * (2 * z2 - 1) - 12 * q * (s2 + 2 * r) - 12 * s2 * r + 12 * q * q + 12 * r * r) /
                pw(s, 4) / 12.0;
            e = z / s2 * (s2 * z2 - 12 * q) / 12.0;
            break;
        case 3:
            g = 2 * z / pw(s, 6) *
                (pw(s, 6) * z2 - 2 * q * (9 * s2 - 6 * s2 * q - 4 * q * q) - 6 * r * (s2 + 2 * q) +
                 12 * r * r * (s2 + 2 * q) - pw(s, 6) - 8 * pw(r, 3)) /
                48.0;
            e = (pw(s, 4) * z2 * z2 - 24 * s2 * q * z2 + 48 * q - 48 * r * r) / pw(s, 4) / 48.0;
            break;
        case 4:
            g = (8 * pw(s, 8) * z2 * z2 -
                 (11 * pw(s, 8) + 40 * pw(s, 6) * (7 * q + r) - 120 * pw(s, 4) * qr * qr -
                  160 * s2 * pw(qr, 3) - 80 * pw(qr, 4)) *
                     z2 +
                 6 * pw(s, 8) + 80 * pw(s, 6) * (q + r) + 240 * pw(s, 4) * (3 * q * q + 2 * q * r + 3 * r * r) -
                 960 * s2 * qr * qr * (q + r) - 160 * pw(qr, 4)) /
                pw(s, 8) / 960.0;
            e = 4 / pw(s, 4) * z * (pw(s, 4) * z2 * z2 - 40 * s2 * q * z2 + 240 * q * q) / 960.0;
            break;
        default:
            g = (8 * pw(s, 10) * pw(z, 5) -
                 (13 * pw(s, 10) + 30 * pw(s, 8) * (15 * q + r) - 120 * pw(s, 6) * qr * qr -
                  240 * pw(s, 4) * pw(qr, 3) - 240 * s2 * pw(qr, 4) - 96 * pw(qr, 5)) *
                     pw(z, 3) +
                 (18 * pw(s, 10) + 60 * pw(s, 8) * (5 * q + 3 * r) + 720 * pw(s, 6) * (5 * q * q + 2 * q * r + r * r) -
                  480 * pw(s, 4) * qr * qr * (7 * q + 5 * r) - 480 * s2 * pw(qr, 3) * (5 * q + 3 * r) -
                  576 * pw(qr, 5)) *
                     z) /
                pw(s, 10) / 5760.0;
            e = 4 / pw(s, 6) *
                (pw(s, 6) * pw(z, 6) - 60 * pw(s, 4) * q * z2 * z2 + 720 * s2 * q * q * z2 - 960 * pw(q, 3) +
                 960 * pw(r, 3)) /
                5760.0;
            break;
    }
    return gauss_erf_combination(z, g, e);
}

std::vector<SeriesTermValue> series_terms(double z, double w, GeneralizedReducedParams params,
                                          int order) {
    check_series_order(order);
    std::vector<SeriesTermValue> out;
    out.reserve(static_cast<std::size_t>(order));
    double wn = 1.0;
    for (int n = 0; n < order; ++n) {
        out.push_back({n, phi_term(n, z, params) * wn});
        wn *= w;
    }
    return out;
}

double hpm_reduced_sum(double y, double tau, GeneralizedReducedParams params, int order) {
    check_series_order(order);
    if (std::isnan(y) || y == -INFINITY || !(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("hpm_reduced_sum: invalid argument");
    }
    if (tau == 0.0) {
        return reduced_payoff(y);
    }
    if (y == INFINITY) return 0.0;
    const double w = std::sqrt(tau);
    const double z = y / w;
    double sum = 0.0;
    double wn = 1.0;
    for (int n = 0; n < order; ++n) {
        sum += phi_term(n, z, params) * wn;
        wn *= w;
    }
    return w * sum;
}

double basket_literal_reduced_sum(double xi, double tau, const BasketReduction& red, double rate,
                                  int order) {
    check_series_order(order);
    if (std::isnan(xi) || !(tau >= 0.0)) {
        throw DomainError("basket_literal_reduced_sum: invalid argument");
    }
    if (tau == 0.0) {
        return reduced_payoff(xi);
    }
    const double w = std::sqrt(tau);
    const double z = xi / w;
    double sum = 0.0;
    double wn = 1.0;
    for (int n = 0; n < order; ++n) {
        sum += basket_term_literal(n, z, red, rate) * wn;
        wn *= w;
    }
    return w * sum;
}

PutPrice price_single_hpm2(const VanillaOptionSpec& spec, int order) {
    check_series_order(order);
    const ReducedCoordinates rc = to_dimensionless(spec);
    if (rc.tau == 0.0) {
        return {std::max(spec.strike - spec.spot, 0.0)};
    }
    const double v = hpm_reduced_sum(rc.x, rc.tau, GeneralizedReducedParams::single_asset(rc.k), order);
    return {std::max(from_dimensionless_value(v, spec), 0.0)};
}

PutPrice price_single_hpm1(const VanillaOptionSpec& spec) {
    const ReducedCoordinates rc = to_dimensionless(spec);
    return {from_dimensionless_value(hpm1_reduced(rc.x, rc.tau, rc.k), spec)};
}

PutPrice price_basket_hpm(const BasketSpec& spec, int order, BasketVariant variant) {
    check_series_order(order);
    const BasketReduction red = reduce_basket(spec);
    const double s = spec.time_to_expiry();
    if (s <= 0.0) {
        return {std::max(spec.strike - spec.geometric_spot(), 0.0)};
    }
    if (!(red.sigma_hat > 0.0)) {
        throw DegenerateVolatilityError("basket series needs sigma_hat > 0");
    }
    const double tau = 0.5 * red.sigma_hat * red.sigma_hat * s;
    const double v = variant == BasketVariant::generalized
                         ? hpm_reduced_sum(red.xi, tau, red.params(spec.rate), order)
                         : basket_literal_reduced_sum(red.xi, tau, red, spec.rate, order);
    return {spec.strike * std::max(v, 0.0)};
}

PutPrice price_quanto_hpm(const QuantoSpec& spec, int order) {
    check_series_order(order);
    const QuantoReduction red = reduce_quanto(spec);
    const double s = spec.time_to_expiry();
    if (s <= 0.0) {
        return {spec.s2 * std::max(spec.strike - spec.s1, 0.0)};
    }
    const double tau = 0.5 * red.sigma_hat_sq * s;
    const double reduced_strike = spec.strike / spec.s2;
    const double y = std::log(spec.s1 / spec.strike);  // ln(x / K) with x = S1 / S2
    const double u = hpm_reduced_sum(y, tau, red.params(), order);
    const double v = reduced_strike * std::max(u, 0.0);
    return {spec.s2 * spec.s2 * v};
}

}  // namespace hpmbs
