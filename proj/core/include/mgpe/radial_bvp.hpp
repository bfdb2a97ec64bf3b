#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mgpe/zero_energy.hpp"

namespace mgpe {

/// Uniform mesh r_min + i h, i = 0 .. points-1; nodes 0 and points-1 are boundary nodes.
/// The radial solver additionally needs r_min > 0; the GPE solver reuses the
/// type as a Cartesian mesh on [-L, L].
class RadialGrid {
public:
    RadialGrid(double r_min, double r_max, std::size_t points);

    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    std::size_t points() const noexcept { return points_; }
    double spacing() const noexcept { return spacing_; }
    double node(std::size_t i) const noexcept;
    std::vector<double> nodes() const;

    bool operator==(const RadialGrid&) const = default;

private:
    double r_min_;
    double r_max_;
    std::size_t points_;
    double spacing_;
};

/// Real samples on a grid. Construction rejects size mismatch and non-finite values.
struct WaveFunction {
    WaveFunction(RadialGrid g, std::vector<double> v);

    RadialGrid grid;
    std::vector<double> values;
};

/// Interior equations of the discretized radial problem. Row i couples the
/// unknowns at nodes i, i+1, i+2 of the grid; boundary values are folded into rhs.
struct TridiagonalSystem {
    RadialGrid grid;
    double inner_value = 0.0;  // psi at node 0
    double outer_value = 0.0;  // psi at node N-1
    std::vector<double> sub;   // sub[0] unused (0)
    std::vector<double> diag;
    std::vector<double> super; // super[n-1] unused (0)
    std::vector<double> rhs;
};

/// (psi_{i+1} - 2 psi_i + psi_{i-1}) / h^2 + (psi_{i+1} - psi_{i-1}) / (2 h r_i) = -eps,
/// psi_0 = 0, psi_{N-1} = pi_amp.
TridiagonalSystem assemble_system(const RadialGrid& grid, double eps, double pi_amp);

/// Thomas elimination of the interior unknowns; returns all N nodes.
WaveFunction solve_tridiagonal(const TridiagonalSystem& system);

/// assemble_system + solve_tridiagonal on an N-point grid over [R_a, R].
WaveFunction solve_bvp(const ZeroEnergyConfig& cfg, std::size_t points);

/// Max-norm distance between a sampled wave function and the closed-form solution.
double max_error_vs_analytic(const ZeroEnergyConfig& cfg, const WaveFunction& numeric);

struct GridLevel {
    std::size_t points = 0;
    double spacing = 0.0;
    double max_error = 0.0;
};

struct ConvergenceStudy {
    std::vector<GridLevel> levels;
    // Least-squares slope of log(error) against log(h); empty when every
    // error is exactly zero (the discrete solution is exact).
    std::optional<double> order;

    bool exact() const noexcept { return !order.has_value(); }
};

/// Least-squares slope of log(error) vs log(spacing) over levels with error > 0.
/// Empty when fewer than two levels carry a nonzero error.
std::optional<double> fitted_order(std::span<const GridLevel> levels);

/// Solves on each grid size (strictly increasing, each >= 3, at least two)
/// and fits the convergence order against the closed-form solution.
ConvergenceStudy convergence_study(const ZeroEnergyConfig& cfg, std::span<const std::size_t> grid_points);

} // namespace mgpe
