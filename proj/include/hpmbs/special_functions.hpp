#pragma once

// Error-function family and the standard normal CDF.
//
// Rational approximations after W. J. Cody (Math. Comp. 23, 1969) on
// |x| <= 6, and a continued fraction for the scaled complement beyond that.
// All entry points throw DomainError on NaN and return the saturation
// limits for infinite arguments.

namespace hpmbs {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kInvSqrtPi = 0.56418958354775628695;
inline constexpr double kSqrt1_2 = 0.70710678118654752440;

[[nodiscard]] double erf(double x);

/// 1 - erf(x) without cancellation for large positive x.
[[nodiscard]] double erfc(double x);

/// Scaled complement e^{x^2} erfc(x). Overflows to +inf for x < -26.628.
[[nodiscard]] double erfcx(double x);

/// N(v) = erfc(-v/sqrt(2)) / 2.
[[nodiscard]] double normal_cdf(double v);

namespace detail {

// Unchecked cores shared with the scalar batch kernels. Arguments must be
// finite; `erfcx_nonneg` requires y >= 0.
[[nodiscard]] double erf_small(double x) noexcept;      // |x| <= 0.46875
[[nodiscard]] double erfcx_nonneg(double y) noexcept;
[[nodiscard]] double erfc_unchecked(double x) noexcept;
[[nodiscard]] double erfcx_unchecked(double x) noexcept;

inline constexpr double kSmallThreshold = 0.46875;
inline constexpr double kMidThreshold = 4.0;
inline constexpr double kTailThreshold = 6.0;
inline constexpr double kErfcUnderflow = 26.543;
inline constexpr double kErfcxOverflow = -26.628;
inline constexpr int kContinuedFractionDepth = 20;

}  // namespace detail

}  // namespace hpmbs
