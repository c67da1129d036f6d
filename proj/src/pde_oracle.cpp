#include "hpmbs/pde_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hpmbs/errors.hpp"
#include "hpmbs/exact_pricing.hpp"
#include "hpmbs/hpm_series.hpp"

namespace hpmbs {
namespace {

// Solves a tridiagonal system in place. `lower[i]` multiplies x[i-1] and
// `upper[i]` multiplies x[i+1]; `rhs` becomes the solution.
void thomas(double lower, double diag, double upper, std::vector<double>& rhs,
            std::vector<double>& scratch) {
    const std::size_t n = rhs.size();
    scratch.resize(n);
    double denom = diag;
    rhs[0] /= denom;
    for (std::size_t i = 1; i < n; ++i) {
        scratch[i] = upper / denom;
        denom = diag - lower * scratch[i];
        rhs[i] = (rhs[i] - lower * rhs[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] -= scratch[i + 1] * rhs[i + 1];
    }
}

double boundary_value(BoundaryMode mode, bool left, double y, double tau,
                      GeneralizedReducedParams p, double initial) {
    if (mode == BoundaryMode::frozen) {
        return initial;
    }
    if (tau == 0.0) {
        return reduced_payoff(y);
    }
    if (mode == BoundaryMode::exact_solution) {
        return reduced_exact_u(y, tau, p);
    }
    return left ? std::exp(-p.k2 * tau) - std::exp(y + (p.k1 - p.k2) * tau) : 0.0;
}

}  // namespace

void GridSpec::validate() const {
    if (!std::isfinite(y_min) || !std::isfinite(y_max) || !(y_min < 0.0 && 0.0 < y_max)) {
        throw DomainError("grid must satisfy y_min < 0 < y_max");
    }
    if (ny < 16) {
        throw DomainError("grid needs at least 16 interior nodes");
    }
    if (n_steps < 1) {
        throw DomainError("grid needs at least one time step");
    }
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw DomainError("theta must lie in [0, 1]");
    }
}

GridSpec GridSpec::centered(double half_width, int ny, int n_steps, double theta) {
    if (ny % 2 != 0) {
        throw DomainError("a centered grid needs an even interior node count");
    }
    return {-half_width, half_width, ny, n_steps, theta};
}

std::span<const double> PdeSolution::row(int step) const {
    if (step < 0 || step > grid.n_steps) {
        throw DomainError("time step out of range");
    }
    const auto width = static_cast<std::size_t>(grid.node_count());
    return {values.data() + static_cast<std::size_t>(step) * width, width};
}

double PdeSolution::interpolate(double y, int step) const {
    const auto r = row(step < 0 ? grid.n_steps : step);
    if (!(y >= grid.y_min && y <= grid.y_max)) {
        throw DomainError("interpolation point outside the grid");
    }
    const double h = grid.h();
    const int last = grid.node_count() - 1;
    // Four nodes around y, shifted inward at the ends.
    int j0 = static_cast<int>(std::floor((y - grid.y_min) / h)) - 1;
    j0 = std::clamp(j0, 0, last - 3);
    double sum = 0.0;
    for (int a = 0; a < 4; ++a) {
        double weight = 1.0;
        const double ya = grid.node(j0 + a);
        for (int b = 0; b < 4; ++b) {
            if (b != a) weight *= (y - grid.node(j0 + b)) / (ya - grid.node(j0 + b));
        }
        sum += weight * r[static_cast<std::size_t>(j0 + a)];
    }
    return sum;
}

double PdeSolution::max_error_vs_exact() const {
    const auto r = row(grid.n_steps);
    double worst = 0.0;
    for (int j = 1; j <= grid.ny; ++j) {
        const double e = std::fabs(r[static_cast<std::size_t>(j)] -
                                   reduced_exact_u(grid.node(j), tau_final, params));
        worst = std::max(worst, e);
    }
    return worst;
}

void PdeSolution::write_csv(std::ostream& os) const {
    os << "y,tau,u\n";
    char buf[96];
    for (int n = 0; n <= grid.n_steps; ++n) {
        const auto r = row(n);
        for (int j = 0; j < grid.node_count(); ++j) {
            std::snprintf(buf, sizeof buf, "%.11e,%.11e,%.11e\n", grid.node(j), tau(n),
                          r[static_cast<std::size_t>(j)]);
            os << buf;
        }
    }
}

PdeSolution cn_solve(GeneralizedReducedParams params, double tau_final, const GridSpec& grid,
                     const CnOptions& options) {
    if (!std::isfinite(params.k1) || !std::isfinite(params.k2)) {
        throw DomainError("cn_solve: non-finite parameters");
    }
    if (!std::isfinite(tau_final) || !(tau_final > 0.0)) {
        throw DomainError("cn_solve: tau_final must be positive and finite");
    }
    if (options.constant_initial && !std::isfinite(*options.constant_initial)) {
        throw DomainError("cn_solve: non-finite initial constant");
    }
    grid.validate();

    PdeSolution sol;
    sol.grid = grid;
    sol.params = params;
    sol.tau_final = tau_final;

    const int width = grid.node_count();
    const double h = grid.h();
    const double dt = tau_final / grid.n_steps;
    const double theta = grid.theta;
    const double drift = params.k1 - 1.0;
    const double ratio = dt / (h * h);

    if (theta == 0.5 && ratio > 1.0) {
        sol.stability_warning = true;
        sol.warnings.push_back("dtau/h^2 > 1: Crank-Nicolson may oscillate near the payoff kink");
    }
    if (theta < 0.5 && ratio * (1.0 - 2.0 * theta) > 0.5) {
        sol.stability_warning = true;
        sol.warnings.push_back("time step exceeds the explicit stability limit");
    }
    if (0.5 * h * std::fabs(drift) > 1.0) {
        sol.stability_warning = true;
        sol.warnings.push_back("cell Peclet number above 1: central convection may oscillate");
    }

    // L u_j = l u_{j-1} + d u_j + r u_{j+1}
    const double lo = 1.0 / (h * h) - drift / (2.0 * h);
    const double di = -2.0 / (h * h) - params.k2;
    const double up = 1.0 / (h * h) + drift / (2.0 * h);

    sol.values.assign(static_cast<std::size_t>(grid.n_steps + 1) * static_cast<std::size_t>(width), 0.0);
    double* u0 = sol.values.data();
    for (int j = 0; j < width; ++j) {
        u0[j] = options.constant_initial ? *options.constant_initial : reduced_payoff(grid.node(j));
    }
    const double left0 = u0[0];
    const double right0 = u0[width - 1];
    double lowest = *std::min_element(u0, u0 + width);

    std::vector<double> rhs(static_cast<std::size_t>(grid.ny));
    std::vector<double> scratch;
    const double ei = theta * dt;
    const double ex = (1.0 - theta) * dt;
    for (int n = 0; n < grid.n_steps; ++n) {
        const double* prev = sol.values.data() + static_cast<std::size_t>(n) * width;
        double* next = sol.values.data() + static_cast<std::size_t>(n + 1) * width;
        const double tau_next = tau_final * (n + 1) / grid.n_steps;
        next[0] = boundary_value(options.boundary, true, grid.y_min, tau_next, params, left0);
        next[width - 1] = boundary_value(options.boundary, false, grid.y_max, tau_next, params, right0);

        for (int j = 1; j <= grid.ny; ++j) {
            const double lu = lo * prev[j - 1] + di * prev[j] + up * prev[j + 1];
            rhs[static_cast<std::size_t>(j - 1)] = prev[j] + ex * lu;
        }
        rhs.front() += ei * lo * next[0];
        rhs.back() += ei * up * next[width - 1];
        thomas(-ei * lo, 1.0 - ei * di, -ei * up, rhs, scratch);
        std::copy(rhs.begin(), rhs.end(), next + 1);
        lowest = std::min(lowest, *std::min_element(next, next + width));
    }
    sol.min_value = lowest;
    if (lowest < -1e-12) {
        sol.warnings.push_back("solution went negative (min " + std::to_string(lowest) + ")");
    }
    return sol;
}

double fd_residual(const TermFunction& term, int term_index, GeneralizedReducedParams params,
                   double z, double w, double h) {
    if (term_index < 0 || term_index > kMaxTermIndex) {
        throw UnsupportedOrderError("term index outside 0..5");
    }
    if (!(w > 0.0) || !(h > 0.0) || !std::isfinite(z)) {
        throw DomainError("fd_residual needs w > 0, h > 0 and finite z");
    }
    const int n = term_index;
    const auto u = [&](int m, double zz, double ww) { return term(m, zz) * std::pow(ww, m); };
    const double d2z = (u(n, z + h, w) - 2.0 * u(n, z, w) + u(n, z - h, w)) / (h * h);
    const double dz = (u(n, z + h, w) - u(n, z - h, w)) / (2.0 * h);
    const double dw = ((w + h) * u(n, z, w + h) - (w - h) * u(n, z, w - h)) / (2.0 * h);
    double r = 2.0 * d2z + z * dz - dw;
    if (n >= 1) {
        const double dz_prev = (u(n - 1, z + h, w) - u(n - 1, z - h, w)) / (2.0 * h);
        r += 2.0 * (params.k1 - 1.0) * w * dz_prev;
    }
    if (n >= 2) {
        r -= 2.0 * params.k2 * w * w * u(n - 2, z, w);
    }
    return r;
}

double fd_residual(int term_index, GeneralizedReducedParams params, double z, double w, double h) {
    const TermFunction term = [params](int n, double zz) { return phi_term(n, zz, params); };
    return fd_residual(term, term_index, params, z, w, h);
}

double richardson(std::span<const double> at_halving_steps) {
    if (at_halving_steps.empty()) {
        throw DomainError("richardson needs at least one estimate");
    }
    std::vector<double> t(at_halving_steps.begin(), at_halving_steps.end());
    double factor = 4.0;
    for (std::size_t level = 1; level < t.size(); ++level) {
        for (std::size_t i = t.size() - 1; i >= level; --i) {
            t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
        }
        factor *= 4.0;
    }
    return t.back();
}

double extrapolated_residual(const TermFunction& term, int term_index,
                             GeneralizedReducedParams params, double z, double w, double h,
                             int levels) {
    if (levels < 1) {
        throw DomainError("extrapolation needs at least one level");
    }
    std::vector<double> r;
    for (int i = 0; i < levels; ++i) {
        r.push_back(fd_residual(term, term_index, params, z, w, h));
        h *= 0.5;
    }
    return richardson(r);
}

double measured_order(std::span<const double> at_h, std::span<const double> at_half) {
    double a = 0.0;
    double b = 0.0;
    for (double v : at_h) a += std::fabs(v);
    for (double v : at_half) b += std::fabs(v);
    return std::log2(a / b);
}

}  // namespace hpmbs
