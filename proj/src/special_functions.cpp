#include "hpmbs/special_functions.hpp"

#include <cmath>
#include <limits>

#include "cody_coefficients.hpp"
#include "hpmbs/errors.hpp"

namespace hpmbs {
namespace {

void require_not_nan(double x, const char* fn) {
    if (std::isnan(x)) {
        throw DomainError(std::string(fn) + ": NaN argument");
    }
}

// exp(-y^2) with y^2 split into an exactly representable head and a small
// tail so the exponent does not lose bits for large y.
double exp_minus_square(double y) noexcept {
    const double head = std::trunc(y * 16.0) / 16.0;
    const double tail = (y - head) * (y + head);
    return std::exp(-head * head) * std::exp(-tail);
}

double exp_plus_square(double y) noexcept {
    const double head = std::trunc(y * 16.0) / 16.0;
    const double tail = (y - head) * (y + head);
    return std::exp(head * head) * std::exp(tail);
}

}  // namespace

namespace detail {

double erf_small(double x) noexcept {
    using namespace cody;
    const double ysq = x * x;
    double num = kA[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
        num = (num + kA[i]) * ysq;
        den = (den + kB[i]) * ysq;
    }
    return x * (num + kA[3]) / (den + kB[3]);
}

double erfcx_nonneg(double y) noexcept {
    using namespace cody;
    if (y <= kSmallThreshold) {
        return std::exp(y * y) * (1.0 - erf_small(y));
    }
    if (y <= kMidThreshold) {
        double num = kC[8] * y;
        double den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kC[i]) * y;
            den = (den + kD[i]) * y;
        }
        return (num + kC[7]) / (den + kD[7]);
    }
    if (y <= kTailThreshold) {
        const double inv_sq = 1.0 / (y * y);
        double num = kP[5] * inv_sq;
        double den = inv_sq;
        for (int i = 0; i < 4; ++i) {
            num = (num + kP[i]) * inv_sq;
            den = (den + kQ[i]) * inv_sq;
        }
        const double r = inv_sq * (num + kP[4]) / (den + kQ[4]);
        return (kInvSqrtPi - r) / y;
    }
    // erfcx(y) = 1 / (sqrt(pi) (y + (1/2)/(y + 1/(y + (3/2)/(y + ...)))))
    double t = y;
    for (int n = kContinuedFractionDepth; n >= 1; --n) {
        t = y + 0.5 * n / t;
    }
    return kInvSqrtPi / t;
}

double erfc_unchecked(double x) noexcept {
    const double y = std::fabs(x);
    if (y <= kSmallThreshold) {
        return 1.0 - erf_small(x);
    }
    const double r = y >= kErfcUnderflow ? 0.0 : exp_minus_square(y) * erfcx_nonneg(y);
    return x < 0.0 ? 2.0 - r : r;
}

double erfcx_unchecked(double x) noexcept {
    if (x >= 0.0) {
        return erfcx_nonneg(x);
    }
    if (x < kErfcxOverflow) {
        return std::numeric_limits<double>::infinity();
    }
    if (-x <= kSmallThreshold) {
        return std::exp(x * x) * (1.0 - erf_small(x));
    }
    const double g = exp_plus_square(-x);
    return (g + g) - erfcx_nonneg(-x);
}

}  // namespace detail

double erf(double x) {
    require_not_nan(x, "erf");
    const double y = std::fabs(x);
    if (y <= detail::kSmallThreshold) {
        return detail::erf_small(x);
    }
    const double r = (0.5 - detail::erfc_unchecked(y)) + 0.5;
    return x < 0.0 ? -r : r;
}

double erfc(double x) {
    require_not_nan(x, "erfc");
    return detail::erfc_unchecked(x);
}

double erfcx(double x) {
    require_not_nan(x, "erfcx");
    return detail::erfcx_unchecked(x);
}

double normal_cdf(double v) {
    require_not_nan(v, "normal_cdf");
    return 0.5 * detail::erfc_unchecked(-v * kSqrt1_2);
}

}  // namespace hpmbs
