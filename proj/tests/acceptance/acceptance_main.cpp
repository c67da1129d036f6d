// Acceptance gate. Prints one PASS/FAIL line per criterion, followed by
// the individual checks. With --criterion N only that criterion runs, which
// is how ctest registers them.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "hpmbs/validation.hpp"

namespace {

bool run(int criterion, const hpmbs::validation::SuiteOptions& opts) {
    const auto results = hpmbs::validation::run_criterion(criterion, opts);
    const bool ok = hpmbs::validation::all_passed(results);
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << '\n';
    hpmbs::validation::print_table(std::cout, results);
    std::cout << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    hpmbs::validation::SuiteOptions opts;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--strict") == 0) {
            opts.profile = hpmbs::validation::Profile::strict;
        } else {
            std::cerr << "usage: acceptance [--criterion N] [--strict]\n";
            return 2;
        }
    }
    if (only != 0) {
        if (only < 1 || only > hpmbs::validation::kCriterionCount) {
            std::cerr << "criterion must be 1.." << hpmbs::validation::kCriterionCount << '\n';
            return 2;
        }
        return run(only, opts) ? 0 : 1;
    }
    int failed = 0;
    for (int c = 1; c <= hpmbs::validation::kCriterionCount; ++c) {
        if (!run(c, opts)) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
