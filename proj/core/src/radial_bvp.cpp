#include "mgpe/radial_bvp.hpp"

#include <cmath>
#include <string>

#include "mgpe/errors.hpp"
#include "mgpe/tridiagonal.hpp"

namespace mgpe {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t points)
    : r_min_(r_min), r_max_(r_max), points_(points), spacing_(0.0) {
    if (!std::isfinite(r_min) || !std::isfinite(r_max))
        throw DomainError("RadialGrid: bounds must be finite");
    if (!(r_min < r_max)) throw DomainError("RadialGrid: r_min must be below r_max");
    if (points < 3) throw DomainError("RadialGrid: need at least 3 points");
    spacing_ = (r_max - r_min) / static_cast<double>(points - 1);
}

double RadialGrid::node(std::size_t i) const noexcept {
    // Exact endpoint instead of r_min + (N-1) h, which may round past r_max.
    if (i + 1 == points_) return r_max_;
    return r_min_ + static_cast<double>(i) * spacing_;
}

std::vector<double> RadialGrid::nodes() const {
    std::vector<double> out(points_);
    for (std::size_t i = 0; i < points_; ++i) out[i] = node(i);
    return out;
}

WaveFunction::WaveFunction(RadialGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.points())
        throw DomainError("WaveFunction: " + std::to_string(values.size()) + " values for " +
                          std::to_string(grid.points()) + " grid points");
    for (double x : values)
        if (!std::isfinite(x)) throw DomainError("WaveFunction: non-finite sample");
}

TridiagonalSystem assemble_system(const RadialGrid& grid, double eps, double pi_amp) {
    if (!(grid.r_min() > 0.0))
        throw DomainError("assemble_system: radial grid must start at r_min > 0");
    if (!std::isfinite(eps) || !std::isfinite(pi_amp))
        throw DomainError("assemble_system: source and boundary amplitude must be finite");

    const std::size_t n = grid.points() - 2;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    TridiagonalSystem sys{grid, 0.0, pi_amp, std::vector<double>(n), std::vector<double>(n),
                          std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const double r = grid.node(k + 1);
        const double drift = 1.0 / (2.0 * h * r);
        const double lower = inv_h2 - drift;
        const double upper = inv_h2 + drift;
        sys.sub[k] = k == 0 ? 0.0 : lower;
        sys.diag[k] = -2.0 * inv_h2;
        sys.super[k] = k + 1 == n ? 0.0 : upper;
        sys.rhs[k] = -eps;
        if (k == 0) sys.rhs[k] -= sys.inner_value * lower;
        if (k + 1 == n) sys.rhs[k] -= sys.outer_value * upper;
    }
    return sys;
}

WaveFunction solve_tridiagonal(const TridiagonalSystem& system) {
    const std::size_t n = system.diag.size();
    if (n + 2 != system.grid.points())
        throw DomainError("solve_tridiagonal: system size does not match grid");
    const auto interior = thomas_solve(system.sub, system.diag, system.super, system.rhs);
    std::vector<double> values(system.grid.points());
    values.front() = system.inner_value;
    values.back() = system.outer_value;
    std::copy(interior.begin(), interior.end(), values.begin() + 1);
    return WaveFunction(system.grid, std::move(values));
}

WaveFunction solve_bvp(const ZeroEnergyConfig& cfg, std::size_t points) {
    cfg.validate();
    const RadialGrid grid(cfg.inner_radius, cfg.outer_radius, points);
    return solve_tridiagonal(assemble_system(grid, cfg.source, cfg.boundary_amplitude));
}

double max_error_vs_analytic(const ZeroEnergyConfig& cfg, const WaveFunction& numeric) {
    double worst = 0.0;
    for (std::size_t i = 0; i < numeric.values.size(); ++i)
        worst = std::max(worst, std::abs(numeric.values[i] - psi(cfg, numeric.grid.node(i))));
    return worst;
}

std::optional<double> fitted_order(std::span<const GridLevel> levels) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    for (const auto& level : levels) {
        if (!(level.max_error > 0.0)) continue;
        const double x = std::log(level.spacing);
        const double y = std::log(level.max_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return std::nullopt;
    const double count = static_cast<double>(m);
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

ConvergenceStudy convergence_study(const ZeroEnergyConfig& cfg, std::span<const std::size_t> grid_points) {
    if (grid_points.size() < 2)
        throw DomainError("convergence_study: need at least two grid levels");
    for (std::size_t i = 0; i < grid_points.size(); ++i) {
        if (grid_points[i] < 3) throw DomainError("convergence_study: grid levels need >= 3 points");
        if (i > 0 && grid_points[i] <= grid_points[i - 1])
            throw DomainError("convergence_study: grid levels must be strictly increasing");
    }
    ConvergenceStudy study;
    for (std::size_t n : grid_points) {
        const auto numeric = solve_bvp(cfg, n);
        study.levels.push_back({n, numeric.grid.spacing(), max_error_vs_analytic(cfg, numeric)});
    }
    study.order = fitted_order(study.levels);
    return study;
}

} // namespace mgpe
