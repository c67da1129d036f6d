#pragma once

// Reference computations that share no code with the library: extended
// precision series, continued fractions and quadrature. Used by the
// validation suite and the tests.

#include <functional>

#include "hpmbs/transforms.hpp"

namespace hpmbs::oracle {

/// (2/sqrt(pi)) sum_{n < terms} (-1)^n x^{2n+1} / (n! (2n+1)) in long double.
[[nodiscard]] long double erf_series(long double x, int terms = 30);

/// erfc from the Maclaurin series below 2 and the Laplace continued
/// fraction above, in long double; reflection for negative x.
[[nodiscard]] long double erfc_extended(long double x);

/// Composite Gauss-Legendre rule with 20 nodes per panel.
[[nodiscard]] long double gauss_legendre(const std::function<long double(long double)>& f,
                                         long double a, long double b, int panels);

/// N(v) = 1/2 + int_0^v e^{-t^2/2} / sqrt(2 pi) dt by quadrature.
[[nodiscard]] long double normal_cdf_quadrature(long double v);

/// Left-tail polynomial of the n-th series term: the w^{n+1} Taylor
/// coefficient of e^{-k2 w^2} - e^{z w + (k1 - k2) w^2}, which f_n(z)
/// approaches as z -> -infinity.
[[nodiscard]] double left_asymptote(int n, double z, GeneralizedReducedParams params);

/// z^{n+1} / (n+1)!, the k-independent part of the same limit.
[[nodiscard]] double left_asymptote_leading(int n, double z);

}  // namespace hpmbs::oracle
