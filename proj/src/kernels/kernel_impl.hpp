#pragma once

// Per-ISA kernel entry points. Inputs are pre-validated by the dispatcher:
// no NaN, tau > 0 where required, output at least as long as input.

#include <cstddef>

#include "hpmbs/hpm_series.hpp"
#include "hpmbs/transforms.hpp"

namespace hpmbs::kernels::detail {

using Poly = TermPolynomials::Poly;

namespace scalar {
void erfc(const double* x, std::size_t n, double* out);
void normal_cdf(const double* v, std::size_t n, double* out);
void reduced_exact(const double* y, std::size_t n, double tau, GeneralizedReducedParams params,
                   double* out);
void hpm_sum(const double* y, std::size_t n, double w, const Poly& gauss, const Poly& erf,
             double* out);
}  // namespace scalar

#ifdef HPMBS_HAVE_AVX2
namespace avx2 {
void erfc(const double* x, std::size_t n, double* out);
void normal_cdf(const double* v, std::size_t n, double* out);
void reduced_exact(const double* y, std::size_t n, double tau, GeneralizedReducedParams params,
                   double* out);
void hpm_sum(const double* y, std::size_t n, double w, const Poly& gauss, const Poly& erf,
             double* out);
}  // namespace avx2
#endif

}  // namespace hpmbs::kernels::detail
