#include "mgpe/gpe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mgpe/tridiagonal.hpp"

namespace mgpe {

namespace {

void require_same_grid(const GpeProblem& prob, const WaveFunction& psi, const char* op) {
    if (!(psi.grid == prob.grid))
        throw DomainError(std::string(op) + ": wave function is not defined on the problem grid");
}

double interior_dot(const std::vector<double>& a, const std::vector<double>& b, double h) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) sum += a[i] * b[i];
    return sum * h;
}

double kinetic_scale(const GpeProblem& prob) {
    return prob.params.hbar * prob.params.hbar / (2.0 * prob.params.mass);
}

} // namespace

void GpeProblem::validate() const {
    params.validate();
    if (!(trap_frequency > 0.0)) throw DomainError("GpeProblem: trap frequency must be positive");
    if (!(coupling >= 0.0) || !std::isfinite(coupling))
        throw DomainError("GpeProblem: coupling must be finite and non-negative");
    if (!(particle_number > 0.0) || !std::isfinite(particle_number))
        throw DomainError("GpeProblem: particle number must be positive");
    if (std::abs(grid.r_min() + grid.r_max()) > grid.spacing())
        throw DomainError("GpeProblem: grid must be symmetric about x = 0");
}

double GpeProblem::potential(double x) const {
    return 0.5 * params.mass * trap_frequency * trap_frequency * x * x;
}

double default_box_half_width(double coupling, double trap_frequency, double particle_number,
                              const PhysicalParams& params) {
    PhysicalParams p = params;
    p.trap_frequency = trap_frequency;
    double radius = trap_length(p);
    if (coupling > 0.0) {
        const GpeProblem probe{RadialGrid(-1.0, 1.0, 3), trap_frequency, coupling, particle_number, p};
        const double mu = thomas_fermi_mu(probe);
        radius = std::max(radius, std::sqrt(2.0 * mu / p.mass) / trap_frequency);
    }
    return 8.0 * radius;
}

GpeProblem make_gpe_problem(double coupling, double trap_frequency, double particle_number,
                            std::size_t points, std::optional<double> box_half_width,
                            const PhysicalParams& params) {
    PhysicalParams p = params;
    p.trap_frequency = trap_frequency;
    const double half_width =
        box_half_width ? *box_half_width : default_box_half_width(coupling, trap_frequency, particle_number, p);
    if (!(half_width > 0.0)) throw DomainError("make_gpe_problem: box half-width must be positive");
    GpeProblem prob{RadialGrid(-half_width, half_width, points), trap_frequency, coupling, particle_number, p};
    prob.validate();
    return prob;
}

double norm_squared(const WaveFunction& psi) {
    return interior_dot(psi.values, psi.values, psi.grid.spacing());
}

WaveFunction apply_hamiltonian(const GpeProblem& prob, const WaveFunction& psi) {
    require_same_grid(prob, psi, "apply_hamiltonian");
    const auto& v = psi.values;
    const std::size_t n = v.size();
    const double h = prob.grid.spacing();
    const double kin = kinetic_scale(prob) / (h * h);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        // Dirichlet: the box-end samples count as zero.
        const double left = i == 1 ? 0.0 : v[i - 1];
        const double right = i + 2 == n ? 0.0 : v[i + 1];
        const double laplace = left - 2.0 * v[i] + right;
        const double x = prob.grid.node(i);
        out[i] = -kin * laplace + prob.potential(x) * v[i] + prob.coupling * v[i] * v[i] * v[i];
    }
    return WaveFunction(prob.grid, std::move(out));
}

EnergyTerms energy_functional(const GpeProblem& prob, const WaveFunction& psi) {
    require_same_grid(prob, psi, "energy_functional");
    const auto& v = psi.values;
    const std::size_t n = v.size();
    const double h = prob.grid.spacing();
    auto sample = [&](std::size_t i) { return (i == 0 || i + 1 == n) ? 0.0 : v[i]; };

    EnergyTerms terms;
    double gradient = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = sample(i + 1) - sample(i);
        gradient += d * d;
    }
    terms.kinetic = kinetic_scale(prob) * gradient / h;
    double trap = 0.0;
    double quartic = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double density = v[i] * v[i];
        trap += prob.potential(prob.grid.node(i)) * density;
        quartic += density * density;
    }
    terms.potential = trap * h;
    terms.interaction = 0.5 * prob.coupling * quartic * h;
    return terms;
}

double chemical_potential(const GpeProblem& prob, const WaveFunction& psi) {
    const double norm = norm_squared(psi);
    if (!(norm > 0.0)) throw DomainError("chemical_potential: wave function has zero norm");
    const auto hpsi = apply_hamiltonian(prob, psi);
    return interior_dot(psi.values, hpsi.values, prob.grid.spacing()) / norm;
}

double eigen_residual(const GpeProblem& prob, const WaveFunction& psi) {
    const double norm = norm_squared(psi);
    if (!(norm > 0.0)) throw DomainError("eigen_residual: wave function has zero norm");
    const auto hpsi = apply_hamiltonian(prob, psi);
    const double h = prob.grid.spacing();
    const double mu = interior_dot(psi.values, hpsi.values, h) / norm;
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < psi.values.size(); ++i) {
        const double d = hpsi.values[i] - mu * psi.values[i];
        sum += d * d;
    }
    return std::sqrt(sum * h / norm);
}

double max_stable_step(const GpeProblem& prob, const WaveFunction& psi) {
    double peak = 0.0;
    for (double x : psi.values) peak = std::max(peak, x * x);
    const double stiffness = prob.coupling * peak;
    if (!(stiffness > 0.0)) return std::numeric_limits<double>::infinity();
    return 0.5 / stiffness;
}

WaveFunction imaginary_time_step(const GpeProblem& prob, const WaveFunction& psi, double dt) {
    require_same_grid(prob, psi, "imaginary_time_step");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("imaginary_time_step: dt must be positive");
    const double bound = max_stable_step(prob, psi);
    if (dt > bound)
        throw StepSizeError("imaginary_time_step: dt = " + std::to_string(dt) +
                            " exceeds the stability bound " + std::to_string(bound));

    const auto& v = psi.values;
    const std::size_t n = v.size();
    const std::size_t m = n - 2;
    const double h = prob.grid.spacing();
    const double kin = kinetic_scale(prob) / (h * h);
    const double mu = chemical_potential(prob, psi);

    std::vector<double> sub(m, -dt * kin), diag(m), super(m, -dt * kin), rhs(m);
    sub.front() = 0.0;
    super.back() = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double x = prob.grid.node(k + 1);
        const double value = v[k + 1];
        diag[k] = 1.0 + dt * (2.0 * kin + prob.potential(x));
        rhs[k] = value + dt * (mu * value - prob.coupling * value * value * value);
    }
    const auto interior = thomas_solve(sub, diag, super, rhs);

    std::vector<double> next(n, 0.0);
    std::copy(interior.begin(), interior.end(), next.begin() + 1);
    const double before = norm_squared(psi);
    const double after = interior_dot(next, next, h);
    if (!(after > 0.0) || !std::isfinite(after))
        throw StepSizeError("imaginary_time_step: iterate collapsed to zero or overflowed");
    if (after > 100.0 * before)
        throw StepSizeError("imaginary_time_step: norm grew more than tenfold before renormalization");
    const double scale = std::sqrt(prob.particle_number / after);
    for (double& x : next) x *= scale;
    return WaveFunction(prob.grid, std::move(next));
}

WaveFunction initial_guess(const GpeProblem& prob) {
    PhysicalParams p = prob.params;
    p.trap_frequency = prob.trap_frequency;
    const double lt = trap_length(p);
    std::vector<double> v(prob.grid.points(), 0.0);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double x = prob.grid.node(i);
        v[i] = std::exp(-x * x / (4.0 * lt * lt));
    }
    WaveFunction psi(prob.grid, std::move(v));
    const double norm = norm_squared(psi);
    if (!(norm > 0.0)) throw DomainError("initial_guess: Gaussian underflows on this grid");
    const double scale = std::sqrt(prob.particle_number / norm);
    for (double& x : psi.values) x *= scale;
    return psi;
}

namespace {

GroundState make_state(const GpeProblem& prob, WaveFunction psi, SolveReport report) {
    const EnergyTerms terms = energy_functional(prob, psi);
    const double mu = chemical_potential(prob, psi);
    return GroundState{std::move(psi), mu, terms.total(), terms, report};
}

} // namespace

GroundState solve_ground_state(const GpeProblem& prob, WaveFunction start, const GroundStateOptions& options) {
    prob.validate();
    require_same_grid(prob, start, "solve_ground_state");
    if (!(options.tolerance > 0.0)) throw DomainError("solve_ground_state: tolerance must be positive");
    if (!(options.dt > 0.0)) throw DomainError("solve_ground_state: dt must be positive");

    WaveFunction psi = std::move(start);
    const double start_norm = norm_squared(psi);
    if (!(start_norm > 0.0)) throw DomainError("solve_ground_state: starting iterate has zero norm");
    for (double& x : psi.values) x *= std::sqrt(prob.particle_number / start_norm);
    psi.values.front() = 0.0;
    psi.values.back() = 0.0;

    SolveReport report;
    double dt = options.dt;
    std::size_t halvings = 0;
    double energy = energy_functional(prob, psi).total();

    auto relative_residual = [&](const WaveFunction& w) {
        const double mu = chemical_potential(prob, w);
        const double r = eigen_residual(prob, w);
        return mu != 0.0 ? r / std::abs(mu) : r;
    };

    report.final_residual = relative_residual(psi);
    while (report.final_residual > options.tolerance) {
        if (report.iterations >= options.max_iters) {
            throw GroundStateNotConverged("solve_ground_state: no convergence within " +
                                              std::to_string(options.max_iters) + " iterations",
                                          make_state(prob, std::move(psi), report));
        }
        ++report.wall_steps;
        std::optional<WaveFunction> next;
        double next_energy = energy;
        try {
            next = imaginary_time_step(prob, psi, dt);
            next_energy = energy_functional(prob, *next).total();
            if (next_energy > energy + 1e-12 * std::max(1.0, std::abs(energy))) next.reset();
        } catch (const StepSizeError&) {
            next.reset();
        }
        if (!next) {
            if (halvings == options.max_halvings) {
                throw GroundStateNotConverged("solve_ground_state: step size halved " +
                                                  std::to_string(halvings) + " times without a stable step",
                                              make_state(prob, std::move(psi), report));
            }
            ++halvings;
            dt *= 0.5;
            continue;
        }
        psi = std::move(*next);
        energy = next_energy;
        ++report.iterations;
        report.final_residual = relative_residual(psi);
        if (options.observer) {
            options.observer(IterationInfo{report.iterations, dt, energy, chemical_potential(prob, psi),
                                           report.final_residual, norm_squared(psi)});
        }
    }
    report.converged = true;
    return make_state(prob, std::move(psi), report);
}

GroundState solve_ground_state(const GpeProblem& prob, const GroundStateOptions& options) {
    prob.validate();
    return solve_ground_state(prob, initial_guess(prob), options);
}

GroundState solve_ground_state(const GpeProblem& prob, double tol, std::size_t max_iters) {
    GroundStateOptions options;
    options.tolerance = tol;
    options.max_iters = max_iters;
    return solve_ground_state(prob, options);
}

double thomas_fermi_mu(const GpeProblem& prob) {
    if (!(prob.coupling > 0.0)) throw DomainError("thomas_fermi_mu: coupling must be positive");
    if (!(prob.particle_number > 0.0)) throw DomainError("thomas_fermi_mu: particle number must be positive");
    if (!(prob.trap_frequency > 0.0)) throw DomainError("thomas_fermi_mu: trap frequency must be positive");
    const double scaled = 1.5 * prob.coupling * prob.particle_number * prob.trap_frequency;
    return 0.5 * std::cbrt(prob.params.mass) * std::pow(scaled, 2.0 / 3.0);
}

} // namespace mgpe
