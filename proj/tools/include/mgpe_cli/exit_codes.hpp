#pragma once

namespace mgpe::cli {

// Process exit codes; documented in README.
enum class ExitCode : int {
    ok = 0,
    internal_error = 1,
    missing_key = 2,
    invalid_value = 3,
    unknown_mode = 4,
    not_converged = 5,
    io_error = 6,
    cross_check_failed = 7,
};

constexpr int to_int(ExitCode code) { return static_cast<int>(code); }

} // namespace mgpe::cli
