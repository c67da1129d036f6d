#include "hpmbs/surfaces.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/kernels.hpp"

namespace hpmbs {
namespace {

constexpr std::size_t kChunk = 256;

void require_spots(std::span<const double> spots, const char* what) {
    for (double s : spots) {
        if (!std::isfinite(s) || !(s > 0.0)) {
            throw DomainError(std::string(what) + " must be positive and finite");
        }
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::vector<double> subtract(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

void add_vanilla_metadata(PriceSurface& s, const VanillaOptionSpec& spec, int order) {
    s.metadata.push_back({"contract", "single"});
    s.metadata.push_back({"strike", fmt(spec.strike)});
    s.metadata.push_back({"rate", fmt(spec.rate)});
    s.metadata.push_back({"vol", fmt(spec.vol)});
    s.metadata.push_back({"maturity", fmt(spec.maturity)});
    s.metadata.push_back({"order", std::to_string(order)});
}

void add_basket_metadata(PriceSurface& s, const BasketSpec& base, int order) {
    s.metadata.push_back({"contract", "basket"});
    s.metadata.push_back({"sigma1", fmt(std::sqrt(base.cov(0, 0)))});
    s.metadata.push_back({"sigma2", fmt(std::sqrt(base.cov(1, 1)))});
    s.metadata.push_back({"a12", fmt(base.cov(0, 1))});
    s.metadata.push_back({"alpha1", fmt(base.weights[0])});
    s.metadata.push_back({"alpha2", fmt(base.weights[1])});
    s.metadata.push_back({"q1", fmt(base.dividends[0])});
    s.metadata.push_back({"q2", fmt(base.dividends[1])});
    s.metadata.push_back({"rate", fmt(base.rate)});
    s.metadata.push_back({"strike", fmt(base.strike)});
    s.metadata.push_back({"maturity", fmt(base.maturity)});
    s.metadata.push_back({"valuation_time", fmt(base.valuation_time)});
    s.metadata.push_back({"order", std::to_string(order)});
}

void add_quanto_metadata(PriceSurface& s, const QuantoSpec& base, int order) {
    s.metadata.push_back({"contract", "quanto"});
    s.metadata.push_back({"sigma1", fmt(base.sigma1)});
    s.metadata.push_back({"sigma2", fmt(base.sigma2)});
    s.metadata.push_back({"rho", fmt(base.rho)});
    s.metadata.push_back({"r1", fmt(base.r1)});
    s.metadata.push_back({"r2", fmt(base.r2)});
    s.metadata.push_back({"q", fmt(base.q)});
    s.metadata.push_back({"strike", fmt(base.strike)});
    s.metadata.push_back({"maturity", fmt(base.maturity)});
    s.metadata.push_back({"valuation_time", fmt(base.valuation_time)});
    s.metadata.push_back({"order", std::to_string(order)});
}

std::vector<std::vector<double>> method_columns(std::vector<double> priced, std::vector<double> exact,
                                               PriceMethod method, std::vector<std::string>& names) {
    if (method == PriceMethod::exact) {
        names = {"price"};
        return {std::move(priced)};
    }
    names = {"price", "exact", "error"};
    auto err = subtract(priced, exact);
    return {std::move(priced), std::move(exact), std::move(err)};
}

}  // namespace

std::string_view method_name(PriceMethod m) noexcept {
    switch (m) {
        case PriceMethod::exact:
            return "exact";
        case PriceMethod::hpm1:
            return "hpm1";
        case PriceMethod::hpm2:
            return "hpm2";
        case PriceMethod::basket_literal:
            return "basket-literal";
    }
    return "exact";
}

std::size_t PriceSurface::point_count() const noexcept {
    return axis2.empty() ? axis1.size() : axis1.size() * axis2.size();
}

void PriceSurface::validate() const {
    if (values.size() != value_names.size()) {
        throw DomainError("surface has mismatched value columns");
    }
    for (const auto& col : values) {
        if (col.size() != point_count()) {
            throw DomainError("surface column length does not match its axes");
        }
        for (double v : col) {
            if (!std::isfinite(v)) {
                throw DomainError("surface contains a non-finite value");
            }
        }
    }
}

void PriceSurface::write_csv(std::ostream& os) const {
    validate();
    for (const auto& [key, value] : metadata) {
        os << "# " << key << ": " << value << '\n';
    }
    os << axis1_name;
    if (!axis2.empty()) os << ',' << axis2_name;
    for (const auto& name : value_names) os << ',' << name;
    os << '\n';
    const std::size_t n2 = axis2.empty() ? 1 : axis2.size();
    for (std::size_t i = 0; i < axis1.size(); ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            const std::size_t p = i * n2 + j;
            os << fmt(axis1[i]);
            if (!axis2.empty()) os << ',' << fmt(axis2[j]);
            for (const auto& col : values) os << ',' << fmt(col[p]);
            os << '\n';
        }
    }
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1 || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("linspace needs finite bounds and a positive count");
    }
    std::vector<double> v(static_cast<std::size_t>(count));
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = lo + i * step;
    v.back() = hi;
    return v;
}

int resolve_threads(int requested) noexcept {
    if (requested > 0) return requested;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t count, std::size_t chunk, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t chunks = (count + chunk - 1) / chunk;
    const auto workers = static_cast<std::size_t>(
        std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), chunks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < count; b += chunk) body(b, std::min(count, b + chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks || failed.load()) return;
            try {
                body(c * chunk, std::min(count, (c + 1) * chunk));
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<double> single_prices(const VanillaOptionSpec& base, std::span<const double> spots,
                                  PriceMethod method, const SweepOptions& opts) {
    base.validate();
    require_spots(spots, "spot");
    check_series_order(opts.order);
    if (method == PriceMethod::basket_literal) {
        throw DomainError("basket-literal applies to basket contracts only");
    }
    const std::size_t n = spots.size();
    std::vector<double> out(n);
    const double K = base.strike;
    if (base.time_to_expiry() <= 0.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = std::max(K - spots[i], 0.0);
        return out;
    }
    const ReducedCoordinates rc = to_dimensionless(base);
    const GeneralizedReducedParams p = GeneralizedReducedParams::single_asset(rc.k);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::log(spots[i] / K);

    parallel_for(n, kChunk, opts.threads, [&](std::size_t b, std::size_t e) {
        const std::span<const double> ys(y.data() + b, e - b);
        const std::span<double> os(out.data() + b, e - b);
        switch (method) {
            case PriceMethod::exact:
                kernels::reduced_exact_batch(ys, rc.tau, p, os);
                for (double& v : os) v *= K;
                break;
            case PriceMethod::hpm2:
                kernels::hpm_sum_batch(ys, rc.tau, p, opts.order, os);
                for (double& v : os) v = K * std::max(v, 0.0);
                break;
            default:
                for (std::size_t i = 0; i < ys.size(); ++i) os[i] = K * hpm1_reduced(ys[i], rc.tau, rc.k);
                break;
        }
    });
    return out;
}

std::vector<double> basket_prices(const BasketSpec& base, std::span<const double> s1,
                                  std::span<const double> s2, PriceMethod method,
                                  const SweepOptions& opts) {
    if (base.size() != 2) {
        throw DomainError("basket grids need a two-asset basket");
    }
    if (method == PriceMethod::hpm1) {
        throw DomainError("hpm1 applies to single-asset contracts only");
    }
    const BasketReduction red = reduce_basket(base);
    require_spots(s1, "s1");
    require_spots(s2, "s2");
    check_series_order(opts.order);
    const double K = base.strike;
    const double a1 = base.weights[0];
    const double a2 = base.weights[1];
    const std::size_t n1 = s1.size();
    const std::size_t n2 = s2.size();
    std::vector<double> xi(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            xi[i * n2 + j] = a1 * std::log(s1[i] / K) + a2 * std::log(s2[j] / K);
        }
    }
    std::vector<double> out(xi.size());
    const double s = base.time_to_expiry();
    if (s <= 0.0) {
        for (std::size_t p = 0; p < xi.size(); ++p) out[p] = K * reduced_payoff(xi[p]);
        return out;
    }
    const double var = red.sigma_hat * red.sigma_hat;
    const double tau = 0.5 * var * s;
    if (!(tau > 0.0)) {
        // Zero basket variance: the closed form's deterministic limit.
        if (method != PriceMethod::exact) {
            throw DegenerateVolatilityError("basket series needs sigma_hat > 0");
        }
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n2; ++j) {
                BasketSpec spec = base;
                spec.spots = {s1[i], s2[j]};
                out[i * n2 + j] = basket_put_exact(spec).value;
            }
        }
        return out;
    }
    const GeneralizedReducedParams p = red.params(base.rate);
    parallel_for(xi.size(), kChunk, opts.threads, [&](std::size_t b, std::size_t e) {
        const std::span<const double> xs(xi.data() + b, e - b);
        const std::span<double> os(out.data() + b, e - b);
        switch (method) {
            case PriceMethod::exact:
                kernels::reduced_exact_batch(xs, tau, p, os);
                for (double& v : os) v *= K;
                break;
            case PriceMethod::hpm2:
                kernels::hpm_sum_batch(xs, tau, p, opts.order, os);
                for (double& v : os) v = K * std::max(v, 0.0);
                break;
            default:
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    os[i] = K * std::max(basket_literal_reduced_sum(xs[i], tau, red, base.rate, opts.order), 0.0);
                }
                break;
        }
    });
    return out;
}

std::vector<double> quanto_prices(const QuantoSpec& base, std::span<const double> s1,
                                  std::span<const double> s2, PriceMethod method,
                                  const SweepOptions& opts) {
    if (method == PriceMethod::hpm1 || method == PriceMethod::basket_literal) {
        throw DomainError("quanto grids support the exact and hpm2 methods");
    }
    const QuantoReduction red = reduce_quanto(base);
    require_spots(s1, "s1");
    require_spots(s2, "s2");
    check_series_order(opts.order);
    const double E = base.strike;
    const std::size_t n1 = s1.size();
    const std::size_t n2 = s2.size();
    // Per unit of S2 the price depends on S1 only.
    std::vector<double> unit(n1);
    const double s = base.time_to_expiry();
    if (s <= 0.0) {
        for (std::size_t i = 0; i < n1; ++i) unit[i] = std::max(E - s1[i], 0.0);
    } else {
        const double tau = 0.5 * red.sigma_hat_sq * s;
        std::vector<double> y(n1);
        for (std::size_t i = 0; i < n1; ++i) y[i] = std::log(s1[i] / E);
        parallel_for(n1, kChunk, opts.threads, [&](std::size_t b, std::size_t e) {
            const std::span<const double> ys(y.data() + b, e - b);
            const std::span<double> os(unit.data() + b, e - b);
            if (method == PriceMethod::exact) {
                kernels::reduced_exact_batch(ys, tau, red.params(), os);
                for (double& v : os) v *= E;
            } else {
                kernels::hpm_sum_batch(ys, tau, red.params(), opts.order, os);
                for (double& v : os) v = E * std::max(v, 0.0);
            }
        });
    }
    std::vector<double> out(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) out[i * n2 + j] = s2[j] * unit[i];
    }
    return out;
}

PriceSurface single_curve_surface(const VanillaOptionSpec& base, std::span<const double> spots,
                                  const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S";
    s.axis1.assign(spots.begin(), spots.end());
    s.value_names = {"exact", "hpm1", "hpm2"};
    s.values = {single_prices(base, spots, PriceMethod::exact, opts),
                single_prices(base, spots, PriceMethod::hpm1, opts),
                single_prices(base, spots, PriceMethod::hpm2, opts)};
    add_vanilla_metadata(s, base, opts.order);
    s.metadata.push_back({"valuation_time", fmt(base.valuation_time)});
    return s;
}

PriceSurface single_error_surface(const VanillaOptionSpec& base, std::span<const double> spots,
                                  std::span<const double> times, const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S";
    s.axis1.assign(spots.begin(), spots.end());
    s.axis2_name = "t";
    s.axis2.assign(times.begin(), times.end());
    s.value_names = {"error"};
    const std::size_t n1 = spots.size();
    const std::size_t n2 = times.size();
    std::vector<double> err(n1 * n2);
    SweepOptions inner = opts;
    inner.threads = 1;
    parallel_for(n2, 1, opts.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
            VanillaOptionSpec spec = base;
            spec.valuation_time = times[j];
            const auto hpm = single_prices(spec, spots, PriceMethod::hpm2, inner);
            const auto exact = single_prices(spec, spots, PriceMethod::exact, inner);
            for (std::size_t i = 0; i < n1; ++i) err[i * n2 + j] = hpm[i] - exact[i];
        }
    });
    s.values = {std::move(err)};
    add_vanilla_metadata(s, base, opts.order);
    s.metadata.push_back({"error", "hpm2 - exact"});
    return s;
}

PriceSurface basket_surface(const BasketSpec& base, std::span<const double> s1,
                            std::span<const double> s2, bool error, const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S1";
    s.axis1.assign(s1.begin(), s1.end());
    s.axis2_name = "S2";
    s.axis2.assign(s2.begin(), s2.end());
    auto exact = basket_prices(base, s1, s2, PriceMethod::exact, opts);
    if (error) {
        s.value_names = {"error"};
        s.values = {subtract(basket_prices(base, s1, s2, PriceMethod::hpm2, opts), exact)};
        s.metadata.push_back({"error", "hpm2 - exact"});
    } else {
        s.value_names = {"price"};
        s.values = {std::move(exact)};
        s.metadata.push_back({"method", "exact"});
    }
    add_basket_metadata(s, base, opts.order);
    return s;
}

PriceSurface quanto_surface(const QuantoSpec& base, std::span<const double> s1,
                            std::span<const double> s2, bool error, const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S1";
    s.axis1.assign(s1.begin(), s1.end());
    s.axis2_name = "S2";
    s.axis2.assign(s2.begin(), s2.end());
    auto exact = quanto_prices(base, s1, s2, PriceMethod::exact, opts);
    if (error) {
        s.value_names = {"error"};
        s.values = {subtract(quanto_prices(base, s1, s2, PriceMethod::hpm2, opts), exact)};
        s.metadata.push_back({"error", "hpm2 - exact"});
    } else {
        s.value_names = {"price"};
        s.values = {std::move(exact)};
        s.metadata.push_back({"method", "exact"});
    }
    add_quanto_metadata(s, base, opts.order);
    return s;
}

PriceSurface single_method_surface(const VanillaOptionSpec& base, std::span<const double> spots,
                                   PriceMethod method, const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S";
    s.axis1.assign(spots.begin(), spots.end());
    auto exact = single_prices(base, spots, PriceMethod::exact, opts);
    auto priced = method == PriceMethod::exact ? exact : single_prices(base, spots, method, opts);
    s.values = method_columns(std::move(priced), std::move(exact), method, s.value_names);
    s.metadata.push_back({"method", std::string(method_name(method))});
    add_vanilla_metadata(s, base, opts.order);
    s.metadata.push_back({"valuation_time", fmt(base.valuation_time)});
    return s;
}

PriceSurface basket_method_surface(const BasketSpec& base, std::span<const double> s1,
                                   std::span<const double> s2, PriceMethod method,
                                   const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S1";
    s.axis1.assign(s1.begin(), s1.end());
    s.axis2_name = "S2";
    s.axis2.assign(s2.begin(), s2.end());
    auto exact = basket_prices(base, s1, s2, PriceMethod::exact, opts);
    auto priced = method == PriceMethod::exact ? exact : basket_prices(base, s1, s2, method, opts);
    s.values = method_columns(std::move(priced), std::move(exact), method, s.value_names);
    s.metadata.push_back({"method", std::string(method_name(method))});
    add_basket_metadata(s, base, opts.order);
    return s;
}

PriceSurface quanto_method_surface(const QuantoSpec& base, std::span<const double> s1,
                                   std::span<const double> s2, PriceMethod method,
                                   const SweepOptions& opts) {
    PriceSurface s;
    s.axis1_name = "S1";
    s.axis1.assign(s1.begin(), s1.end());
    s.axis2_name = "S2";
    s.axis2.assign(s2.begin(), s2.end());
    auto exact = quanto_prices(base, s1, s2, PriceMethod::exact, opts);
    auto priced = method == PriceMethod::exact ? exact : quanto_prices(base, s1, s2, method, opts);
    s.values = method_columns(std::move(priced), std::move(exact), method, s.value_names);
    s.metadata.push_back({"method", std::string(method_name(method))});
    add_quanto_metadata(s, base, opts.order);
    return s;
}

}  // namespace hpmbs
