#pragma once

// Independent numerical reference for the reduced equation
//
//     u_tau = u_yy + (k1 - 1) u_y - k2 u,   u(y, 0) = max(1 - e^y, 0)
//
// solved with a theta-scheme (theta = 1/2 is Crank-Nicolson) on a uniform
// grid, and central-difference residuals of the series recursion.

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpmbs/transforms.hpp"

namespace hpmbs {

/// ny interior nodes plus two boundary nodes; node j sits at y_min + j h
/// with h = (y_max - y_min) / (ny + 1).
struct GridSpec {
    double y_min = -1.0;
    double y_max = 1.0;
    int ny = 800;
    int n_steps = 800;
    double theta = 0.5;

    /// Throws DomainError unless y_min < 0 < y_max, ny >= 16, n_steps >= 1
    /// and theta in [0, 1].
    void validate() const;

    [[nodiscard]] double h() const noexcept { return (y_max - y_min) / (ny + 1); }
    [[nodiscard]] double node(int j) const noexcept { return y_min + j * h(); }
    [[nodiscard]] int node_count() const noexcept { return ny + 2; }

    /// Symmetric grid on [-half_width, half_width]. With ny even, y = 0 falls
    /// midway between two nodes, which keeps the payoff kink off the grid.
    [[nodiscard]] static GridSpec centered(double half_width, int ny, int n_steps,
                                           double theta = 0.5);
};

enum class BoundaryMode {
    exact_solution,    // reduced_exact_u at both ends, every step
    payoff_asymptote,  // e^{-k2 tau} - e^{y + (k1 - k2) tau} at y_min, 0 at y_max
    frozen,            // initial boundary values held fixed
};

struct CnOptions {
    BoundaryMode boundary = BoundaryMode::exact_solution;
    /// Replaces the payoff with a constant initial state.
    std::optional<double> constant_initial;
};

struct PdeSolution {
    GridSpec grid;
    GeneralizedReducedParams params;
    double tau_final = 0.0;
    std::vector<double> values;  // (n_steps + 1) rows of node_count() values

    /// Set when the step sizes are outside the range where the scheme is
    /// known to behave (see `warnings` for the reason).
    bool stability_warning = false;
    std::vector<std::string> warnings;

    /// Smallest value seen over all nodes and steps. Crank-Nicolson does not
    /// preserve positivity in general; a value below -1e-12 is logged in
    /// `warnings` but is not an error.
    double min_value = 0.0;

    [[nodiscard]] double tau(int step) const noexcept {
        return tau_final * step / grid.n_steps;
    }
    [[nodiscard]] std::span<const double> row(int step) const;
    [[nodiscard]] double at(int step, int j) const { return row(step)[static_cast<std::size_t>(j)]; }

    /// Cubic Lagrange interpolation in y on the given row (default: final).
    [[nodiscard]] double interpolate(double y, int step = -1) const;

    /// Max |u - reduced_exact_u| over interior nodes of the final row.
    [[nodiscard]] double max_error_vs_exact() const;

    /// Writes `y,tau,u` rows with a header.
    void write_csv(std::ostream& os) const;
};

/// Throws DomainError for non-finite parameters or tau_final <= 0, and for
/// an invalid grid.
[[nodiscard]] PdeSolution cn_solve(GeneralizedReducedParams params, double tau_final,
                                   const GridSpec& grid, const CnOptions& options = {});

/// f_n(z) supplier for residual checks.
using TermFunction = std::function<double(int n, double z)>;

/// Central-difference estimate with step h in z and w of
/// R_n = 2 d2u_n/dz2 + z du_n/dz - d(w u_n)/dw + 2 (k1 - 1) w du_{n-1}/dz
///       - 2 k2 w^2 u_{n-2}
/// with u_n = f_n(z) w^n. Exact terms give R_n = 0.
[[nodiscard]] double fd_residual(const TermFunction& term, int term_index,
                                 GeneralizedReducedParams params, double z, double w, double h);

/// Same with the generalized series terms.
[[nodiscard]] double fd_residual(int term_index, GeneralizedReducedParams params, double z,
                                 double w, double h);

/// Richardson table for estimates at steps h, h/2, h/4, ... whose error
/// expands in even powers of h; returns the most extrapolated entry.
[[nodiscard]] double richardson(std::span<const double> at_halving_steps);

/// fd_residual at `levels` halvings of h, extrapolated.
[[nodiscard]] double extrapolated_residual(const TermFunction& term, int term_index,
                                           GeneralizedReducedParams params, double z, double w,
                                           double h, int levels = 3);

/// log2 of the ratio of summed |estimate| at step h to step h/2.
[[nodiscard]] double measured_order(std::span<const double> at_h, std::span<const double> at_half);

}  // namespace hpmbs
