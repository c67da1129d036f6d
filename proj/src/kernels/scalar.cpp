#include "kernel_impl.hpp"

#include <cmath>

#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/special_functions.hpp"

namespace hpmbs::kernels::detail::scalar {

void erfc(const double* x, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = hpmbs::detail::erfc_unchecked(x[i]);
}

void normal_cdf(const double* v, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * hpmbs::detail::erfc_unchecked(-v[i] * kSqrt1_2);
}

void reduced_exact(const double* y, std::size_t n, double tau, GeneralizedReducedParams params,
                   double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = reduced_exact_u(y[i], tau, params);
}

void hpm_sum(const double* y, std::size_t n, double w, const Poly& gauss, const Poly& erf,
             double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] == INFINITY) {
            out[i] = 0.0;
            continue;
        }
        const double z = y[i] / w;
        out[i] = w * gauss_erf_combination(z, evaluate_poly(gauss, z), evaluate_poly(erf, z));
    }
}

}  // namespace hpmbs::kernels::detail::scalar
