#pragma once

// Price and error grids over spot axes, evaluated with the batch kernels and
// fanned out over a worker pool. Results are written into fixed slots, so
// the output does not depend on the thread count or completion order.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpmbs/hpm_series.hpp"
#include "hpmbs/transforms.hpp"

namespace hpmbs {

/// One or two axes and one or more value columns. For two axes the values
/// are stored axis1-major: values[c][i * axis2.size() + j].
struct PriceSurface {
    std::string axis1_name;
    std::vector<double> axis1;
    std::string axis2_name;
    std::vector<double> axis2;  // empty for a curve
    std::vector<std::string> value_names;
    std::vector<std::vector<double>> values;
    std::vector<std::pair<std::string, std::string>> metadata;

    [[nodiscard]] std::size_t point_count() const noexcept;

    /// Throws DomainError if a column has the wrong length or a non-finite
    /// entry.
    void validate() const;

    /// `#`-prefixed metadata lines, a header row, then one row per point in
    /// %.11e (12 significant digits), comma separated, LF line endings.
    void write_csv(std::ostream& os) const;
};

enum class PriceMethod { exact, hpm1, hpm2, basket_literal };

[[nodiscard]] std::string_view method_name(PriceMethod m) noexcept;

struct SweepOptions {
    int threads = 0;  // 0: hardware concurrency
    int order = kDefaultSeriesOrder;
};

/// `count` evenly spaced values from lo to hi inclusive.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, int count);

[[nodiscard]] int resolve_threads(int requested) noexcept;

/// Calls body(begin, end) on disjoint chunks covering [0, count).
void parallel_for(std::size_t count, std::size_t chunk, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Single-asset prices at base.valuation_time for each spot.
[[nodiscard]] std::vector<double> single_prices(const VanillaOptionSpec& base,
                                                std::span<const double> spots, PriceMethod method,
                                                const SweepOptions& opts = {});

/// Two-asset basket prices on the s1 x s2 grid (s1-major).
[[nodiscard]] std::vector<double> basket_prices(const BasketSpec& base, std::span<const double> s1,
                                                std::span<const double> s2, PriceMethod method,
                                                const SweepOptions& opts = {});

/// Quanto prices on the s1 x s2 grid (s1-major).
[[nodiscard]] std::vector<double> quanto_prices(const QuantoSpec& base, std::span<const double> s1,
                                                std::span<const double> s2, PriceMethod method,
                                                const SweepOptions& opts = {});

/// Columns exact, hpm1, hpm2 over spot.
[[nodiscard]] PriceSurface single_curve_surface(const VanillaOptionSpec& base,
                                                std::span<const double> spots,
                                                const SweepOptions& opts = {});

/// hpm2 - exact over spot x valuation time.
[[nodiscard]] PriceSurface single_error_surface(const VanillaOptionSpec& base,
                                                std::span<const double> spots,
                                                std::span<const double> times,
                                                const SweepOptions& opts = {});

/// Exact basket price, or hpm - exact when `error` is set.
[[nodiscard]] PriceSurface basket_surface(const BasketSpec& base, std::span<const double> s1,
                                          std::span<const double> s2, bool error,
                                          const SweepOptions& opts = {});

/// Exact quanto price, or hpm - exact when `error` is set.
[[nodiscard]] PriceSurface quanto_surface(const QuantoSpec& base, std::span<const double> s1,
                                          std::span<const double> s2, bool error,
                                          const SweepOptions& opts = {});

/// Prices from `method` over spot; for a series method also the exact
/// prices and the error (price - exact).
[[nodiscard]] PriceSurface single_method_surface(const VanillaOptionSpec& base,
                                                 std::span<const double> spots, PriceMethod method,
                                                 const SweepOptions& opts = {});

/// Same over the basket s1 x s2 grid.
[[nodiscard]] PriceSurface basket_method_surface(const BasketSpec& base, std::span<const double> s1,
                                                 std::span<const double> s2, PriceMethod method,
                                                 const SweepOptions& opts = {});

/// Same over the quanto s1 x s2 grid.
[[nodiscard]] PriceSurface quanto_method_surface(const QuantoSpec& base, std::span<const double> s1,
                                                 std::span<const double> s2, PriceMethod method,
                                                 const SweepOptions& opts = {});

}  // namespace hpmbs
