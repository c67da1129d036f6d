#include "hpmbs/oracles.hpp"

#include <array>
#include <cmath>

#include "hpmbs/errors.hpp"

namespace hpmbs::oracle {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

struct GaussLegendre20 {
    std::array<long double, 20> nodes{};
    std::array<long double, 20> weights{};

    GaussLegendre20() {
        constexpr int m = 20;
        for (int i = 0; i < m; ++i) {
            long double x = std::cos(kPiL * (i + 0.75L) / (m + 0.5L));
            long double dp = 0.0L;
            for (int iter = 0; iter < 100; ++iter) {
                long double p0 = 1.0L;
                long double p1 = x;
                for (int k = 2; k <= m; ++k) {
                    const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = m * (x * p1 - p0) / (x * x - 1.0L);
                const long double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-30L) break;
            }
            nodes[static_cast<std::size_t>(i)] = x;
            weights[static_cast<std::size_t>(i)] = 2.0L / ((1.0L - x * x) * dp * dp);
        }
    }
};

const GaussLegendre20& rule() {
    static const GaussLegendre20 r;
    return r;
}

}  // namespace

long double erf_series(long double x, int terms) {
    long double power = x;  // x^{2n+1}
    long double fact = 1.0L;
    long double sum = 0.0L;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) {
            power *= x * x;
            fact *= n;
        }
        const long double term = power / (fact * (2 * n + 1));
        sum += (n % 2 == 0) ? term : -term;
    }
    return 2.0L / std::sqrt(kPiL) * sum;
}

long double erfc_extended(long double x) {
    if (std::isnan(x)) {
        throw DomainError("erfc_extended: NaN argument");
    }
    if (x < 0.0L) {
        return 2.0L - erfc_extended(-x);
    }
    if (x < 2.0L) {
        // Alternating series; at x < 2 the largest term is below 10 so long
        // double keeps ~17 correct digits of 1 - erf.
        long double power = x;
        long double fact = 1.0L;
        long double sum = 0.0L;
        for (int n = 0; n < 200; ++n) {
            if (n > 0) {
                power *= x * x;
                fact *= n;
            }
            const long double term = power / (fact * (2 * n + 1));
            sum += (n % 2 == 0) ? term : -term;
            if (term < 1e-30L) break;
        }
        return 1.0L - 2.0L / std::sqrt(kPiL) * sum;
    }
    long double t = x;
    for (int n = 4000; n >= 1; --n) {
        t = x + 0.5L * n / t;
    }
    return std::exp(-x * x) / (std::sqrt(kPiL) * t);
}

long double gauss_legendre(const std::function<long double(long double)>& f, long double a,
                           long double b, int panels) {
    const auto& r = rule();
    const long double width = (b - a) / panels;
    long double total = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const long double lo = a + p * width;
        const long double mid = lo + 0.5L * width;
        long double s = 0.0L;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            s += r.weights[i] * f(mid + 0.5L * width * r.nodes[i]);
        }
        total += 0.5L * width * s;
    }
    return total;
}

long double normal_cdf_quadrature(long double v) {
    const long double norm = 1.0L / std::sqrt(2.0L * kPiL);
    const auto density = [norm](long double t) { return norm * std::exp(-0.5L * t * t); };
    const int panels = 8 + static_cast<int>(std::ceil(8.0L * std::fabs(v)));
    return 0.5L + gauss_legendre(density, 0.0L, v, panels);
}

double left_asymptote(int n, double z, GeneralizedReducedParams params) {
    const int m = n + 1;
    const double a = params.k1 - params.k2;
    // Coefficient of w^m in e^{z w} e^{a w^2}: sum over 2j + i = m.
    double growth = 0.0;
    double a_pow = 1.0;
    double j_fact = 1.0;
    for (int j = 0; 2 * j <= m; ++j) {
        if (j > 0) {
            a_pow *= a;
            j_fact *= j;
        }
        const int i = m - 2 * j;
        double z_term = 1.0;
        for (int q = 1; q <= i; ++q) z_term *= z / q;
        growth += a_pow / j_fact * z_term;
    }
    double decay = 0.0;
    if (m % 2 == 0) {
        decay = 1.0;
        for (int q = 1; q <= m / 2; ++q) decay *= -params.k2 / q;
    }
    return decay - growth;
}

double left_asymptote_leading(int n, double z) {
    double v = 1.0;
    for (int q = 1; q <= n + 1; ++q) v *= z / q;
    return v;
}

}  // namespace hpmbs::oracle
