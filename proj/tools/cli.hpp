#pragma once

// The `hpmbs` command line: price, figure, grid and validate subcommands.
// Kept in a library so tests can drive it without spawning a process.

#include <iosfwd>
#include <string>
#include <vector>

namespace hpmbs::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kBadInput = 2,
    kIoError = 3,
};

/// Runs the command line; `args` excludes the program name.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpmbs::cli
