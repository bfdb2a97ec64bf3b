#pragma once

#include <ostream>

#include "mgpe_cli/config.hpp"
#include "mgpe_cli/exit_codes.hpp"

namespace mgpe::cli {

/// Allowed sweep/bvp disagreement per node: 10 h^2 (eps R^2 + |Pi|).
double cross_check_bound(const ZeroEnergyConfig& cfg, double spacing);

// Each run writes CSV to `out` and human-readable diagnostics to `diag`.

/// r, psi, psi_prime from the closed form.
ExitCode run_analytic(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// r, psi_bvp, psi_analytic, abs_error from the finite-difference solver.
ExitCode run_bvp(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// One row: the three curvature-energy values and their relative gaps.
ExitCode run_energy(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// r, then psi for every source strength; with cross_check also the BVP columns.
ExitCode run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// x, psi, density of the ground state, plus a summary on diag.
ExitCode run_gpe(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Dispatches on cfg.mode.
ExitCode run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Entry point shared by the executable and the tests: parses args, opens the
/// output, runs, and maps every failure to its exit code.
int main_with_args(const std::vector<std::string>& args, std::ostream& stdout_stream, std::ostream& diag);

} // namespace mgpe::cli
