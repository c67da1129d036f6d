#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/kernels.hpp"
#include "kernel_impl.hpp"

namespace hpmbs::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(HPMBS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() noexcept {
    const bool avx2 = cpu_has_avx2();
    if (const char* env = std::getenv("HPMBS_ISA")) {
        const std::string want(env);
        if (want == "scalar") return Isa::scalar;
        if (want == "avx2" && avx2) return Isa::avx2;
    }
    return avx2 ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

void check_sizes(std::size_t in, std::size_t out) {
    if (out < in) {
        throw std::invalid_argument("batch output shorter than input");
    }
}

void reject_nan(std::span<const double> x, const char* fn) {
    for (double v : x) {
        if (std::isnan(v)) {
            throw DomainError(std::string(fn) + ": NaN argument");
        }
    }
}

bool use_avx2() noexcept { return current().load(std::memory_order_relaxed) == Isa::avx2; }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::avx2:
            return "avx2";
        case Isa::scalar:
            break;
    }
    return "scalar";
}

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
    }
    current().store(isa, std::memory_order_relaxed);
}

void erfc_batch(std::span<const double> x, std::span<double> out) {
    check_sizes(x.size(), out.size());
    reject_nan(x, "erfc_batch");
#ifdef HPMBS_HAVE_AVX2
    if (use_avx2()) return detail::avx2::erfc(x.data(), x.size(), out.data());
#endif
    detail::scalar::erfc(x.data(), x.size(), out.data());
}

void normal_cdf_batch(std::span<const double> v, std::span<double> out) {
    check_sizes(v.size(), out.size());
    reject_nan(v, "normal_cdf_batch");
#ifdef HPMBS_HAVE_AVX2
    if (use_avx2()) return detail::avx2::normal_cdf(v.data(), v.size(), out.data());
#endif
    detail::scalar::normal_cdf(v.data(), v.size(), out.data());
}

void reduced_exact_batch(std::span<const double> y, double tau, GeneralizedReducedParams params,
                         std::span<double> out) {
    check_sizes(y.size(), out.size());
    reject_nan(y, "reduced_exact_batch");
    if (std::isnan(tau) || !std::isfinite(params.k1) || !std::isfinite(params.k2)) {
        throw DomainError("reduced_exact_batch: non-finite argument");
    }
    if (!(tau > 0.0)) {
        throw DegenerateTimeError("reduced_exact_batch requires tau > 0");
    }
#ifdef HPMBS_HAVE_AVX2
    if (use_avx2()) return detail::avx2::reduced_exact(y.data(), y.size(), tau, params, out.data());
#endif
    detail::scalar::reduced_exact(y.data(), y.size(), tau, params, out.data());
}

void hpm_sum_batch(std::span<const double> y, double tau, GeneralizedReducedParams params,
                   int order, std::span<double> out) {
    check_series_order(order);
    check_sizes(y.size(), out.size());
    reject_nan(y, "hpm_sum_batch");
    for (double v : y) {
        if (v == -INFINITY) {
            throw DomainError("hpm_sum_batch: series diverges at y = -inf");
        }
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("hpm_sum_batch: invalid tau");
    }
    if (tau == 0.0) {
        for (std::size_t i = 0; i < y.size(); ++i) out[i] = reduced_payoff(y[i]);
        return;
    }
    const double w = std::sqrt(tau);
    const auto [gauss, erf] = TermPolynomials::generalized(params).collapse(w, order);
#ifdef HPMBS_HAVE_AVX2
    if (use_avx2()) return detail::avx2::hpm_sum(y.data(), y.size(), w, gauss, erf, out.data());
#endif
    detail::scalar::hpm_sum(y.data(), y.size(), w, gauss, erf, out.data());
}

}  // namespace hpmbs::kernels
