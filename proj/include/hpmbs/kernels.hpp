#pragma once

// Batch kernels for grid sweeps. Each entry point has a scalar reference
// implementation and, on x86-64 builds with AVX2 enabled, a 4-lane variant
// selected at runtime from CPUID. Both variants agree to a few ulps; the
// scalar one calls the same code as the single-point library functions.
//
// All batch functions throw DomainError if any input is NaN and
// std::invalid_argument if the output span is shorter than the input.

#include <span>
#include <string_view>

#include "hpmbs/transforms.hpp"

namespace hpmbs::kernels {

enum class Isa { scalar, avx2 };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

/// Whether `isa` was compiled in and is supported by this CPU.
[[nodiscard]] bool isa_available(Isa isa) noexcept;

/// The variant currently used by the batch functions. Defaults to the best
/// available one; the HPMBS_ISA environment variable ("scalar" or "avx2")
/// overrides the default at first use.
[[nodiscard]] Isa active_isa() noexcept;

/// Selects a variant for the whole process. Throws std::invalid_argument if
/// it is not available.
void force_isa(Isa isa);

void erfc_batch(std::span<const double> x, std::span<double> out);
void normal_cdf_batch(std::span<const double> v, std::span<double> out);

/// reduced_exact_u at fixed tau > 0 for each y.
void reduced_exact_batch(std::span<const double> y, double tau, GeneralizedReducedParams params,
                         std::span<double> out);

/// hpm_reduced_sum at fixed tau >= 0 for each y (raw, unclamped).
void hpm_sum_batch(std::span<const double> y, double tau, GeneralizedReducedParams params,
                   int order, std::span<double> out);

}  // namespace hpmbs::kernels
