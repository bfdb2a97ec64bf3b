#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "mgpe/errors.hpp"
#include "mgpe/params.hpp"
#include "mgpe/radial_bvp.hpp"

namespace mgpe {

/// Stationary 1D Gross-Pitaevskii problem in a harmonic trap V(x) = m w^2 x^2 / 2,
/// Dirichlet zero at x = +-L. The 1D coupling g is taken as given; no reduction
/// from the 3D value 4 pi a hbar^2 / m is imposed.
struct GpeProblem {
    RadialGrid grid;  // Cartesian mesh on [-L, L]
    double trap_frequency = 1.0;
    double coupling = 0.0;  // repulsive only
    double particle_number = 1.0;
    PhysicalParams params;

    /// Grid symmetric about 0 within one spacing, w > 0, g >= 0, N > 0, valid params.
    void validate() const;

    double potential(double x) const;
};

/// Half-width L = 8 max(l_t, R_TF), R_TF the Thomas-Fermi radius (0 when g = 0).
double default_box_half_width(double coupling, double trap_frequency, double particle_number,
                              const PhysicalParams& params = {});

/// Problem on [-L, L] with the given number of grid points; L defaults per default_box_half_width.
GpeProblem make_gpe_problem(double coupling, double trap_frequency, double particle_number,
                            std::size_t points, std::optional<double> box_half_width = std::nullopt,
                            const PhysicalParams& params = {});

struct EnergyTerms {
    double kinetic = 0.0;
    double potential = 0.0;
    double interaction = 0.0;

    double total() const noexcept { return kinetic + potential + interaction; }
};

struct SolveReport {
    std::size_t iterations = 0;   // accepted steps
    double final_residual = 0.0;  // ||H psi - mu psi|| / (||psi|| |mu|)
    bool converged = false;
    std::size_t wall_steps = 0;   // step attempts, including retries after halving
};

struct GroundState {
    WaveFunction wavefunction;
    double chemical_potential = 0.0;
    double total_energy = 0.0;
    EnergyTerms energy;
    SolveReport report;
};

/// Raised when a step would be unstable: dt beyond the scheme's bound, or the
/// pre-normalization norm grew more than tenfold.
class StepSizeError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

/// Raised when the solver exhausts max_iters or its step halvings.
class GroundStateNotConverged : public ConvergenceError {
public:
    GroundStateNotConverged(const std::string& what, GroundState last)
        : ConvergenceError(what), last_(std::move(last)) {}

    const GroundState& last_iterate() const noexcept { return last_; }

private:
    GroundState last_;
};

/// h * sum psi_i^2 over the mesh.
double norm_squared(const WaveFunction& psi);

/// (-hbar^2 / 2m) D2 psi + V psi + g psi^3 at interior nodes; zero at the box ends.
WaveFunction apply_hamiltonian(const GpeProblem& prob, const WaveFunction& psi);

/// Kinetic (hbar^2/2m) int |psi'|^2, trap int V |psi|^2 and interaction (g/2) int |psi|^4.
/// The kinetic term uses forward differences so that it matches <psi, -D2 psi> exactly.
EnergyTerms energy_functional(const GpeProblem& prob, const WaveFunction& psi);

/// Rayleigh quotient <psi, H[psi] psi> / <psi, psi>.
double chemical_potential(const GpeProblem& prob, const WaveFunction& psi);

/// ||H psi - mu psi||_2 / ||psi||_2 with mu the Rayleigh quotient.
double eigen_residual(const GpeProblem& prob, const WaveFunction& psi);

/// Largest dt accepted by imaginary_time_step for this iterate: 1 / (2 g max psi^2).
double max_stable_step(const GpeProblem& prob, const WaveFunction& psi);

/// One normalized gradient-flow step. Kinetic and trap terms are implicit,
/// the nonlinear term and the multiplier mu_n psi explicit:
///   (I + dt (T + V)) phi = psi + dt (mu_n psi - g psi^3),
/// then phi is rescaled to particle_number.
WaveFunction imaginary_time_step(const GpeProblem& prob, const WaveFunction& psi, double dt);

/// Gaussian exp(-x^2 / (4 l_t^2)) normalized to particle_number, zero at the box ends.
WaveFunction initial_guess(const GpeProblem& prob);

struct IterationInfo {
    std::size_t iteration = 0;
    double dt = 0.0;
    double energy = 0.0;
    double chemical_potential = 0.0;
    double residual = 0.0;
    double norm = 0.0;
};

struct GroundStateOptions {
    double tolerance = 1e-8;
    std::size_t max_iters = 100'000;
    double dt = 1e-2;
    std::size_t max_halvings = 10;
    // Called after every accepted step.
    std::function<void(const IterationInfo&)> observer;
};

GroundState solve_ground_state(const GpeProblem& prob, const GroundStateOptions& options);
GroundState solve_ground_state(const GpeProblem& prob, double tol, std::size_t max_iters);

/// Same iteration from a caller-supplied starting iterate.
GroundState solve_ground_state(const GpeProblem& prob, WaveFunction start,
                               const GroundStateOptions& options);

/// Thomas-Fermi chemical potential: the mu for which (mu - V(x)) / g integrates to N,
/// mu_TF = (1/2) m^(1/3) (3 g N w / 2)^(2/3).
double thomas_fermi_mu(const GpeProblem& prob);

} // namespace mgpe
