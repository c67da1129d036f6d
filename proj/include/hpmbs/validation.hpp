#pragma once

// Acceptance suite: each criterion produces one or more named checks with a
// measured value and a bound. Shared by `hpmbs validate` and the acceptance
// test binary.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hpmbs/pde_oracle.hpp"

namespace hpmbs::validation {

enum class Profile { standard, strict };

enum class Status { pass, fail, warn, info };

[[nodiscard]] std::string_view status_name(Status s) noexcept;

struct CheckResult {
    int criterion = 0;
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    Status status = Status::info;
    std::string detail;
};

/// f_n(z) for given (k1, k2).
using TermFamily = std::function<double(int n, double z, GeneralizedReducedParams params)>;

struct SuiteOptions {
    Profile profile = Profile::standard;
    /// Generalized term family under test; defaults to phi_term. The
    /// validate command swaps in a corrupted family for mutation testing.
    TermFamily generalized_terms;
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1..11).
[[nodiscard]] std::vector<CheckResult> run_criterion(int criterion, const SuiteOptions& opts);

[[nodiscard]] std::vector<CheckResult> run_suite(const SuiteOptions& opts);

/// True when no check failed.
[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results) noexcept;

/// Aligned table: criterion, check name, measured, bound, status.
void print_table(std::ostream& os, const std::vector<CheckResult>& results);

struct RegressionValue {
    std::string name;
    double value = 0.0;
};

/// Recomputes every frozen regression constant from the current code, for
/// re-freezing after an intentional numerical change.
[[nodiscard]] std::vector<RegressionValue> measure_regression_values();

/// phi_term with the constant of A_2 shifted, for mutation testing.
[[nodiscard]] TermFamily mutated_phi2_terms();

}  // namespace hpmbs::validation
