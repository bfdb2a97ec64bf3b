#pragma once

#include "mgpe/params.hpp"
#include "mgpe/quadrature.hpp"

namespace mgpe {

/// Circularly symmetric zero-energy pair problem on the annulus R_a <= r <= R:
///   psi'' + psi'/r = -source,  psi(R_a) = 0,  psi(R) = boundary_amplitude.
///
/// Often called "the 1D solution"; mathematically it is the radial
/// reduction of a 2D problem, which is what is solved here.
struct ZeroEnergyConfig {
    double inner_radius = 0.0;        // R_a, hard-core radius
    double outer_radius = 0.0;        // R, box radius
    double source = 0.0;              // epsilon = mu * Psi
    double boundary_amplitude = 0.0;  // Pi, |Pi|^2 ~ condensate density
    // Negative source has no physical motivation; opt in explicitly to explore it.
    bool allow_negative_source = false;

    /// Requires 0 < R_a < R and finite inputs; negative source needs the opt-in.
    void validate() const;

    /// ln(R / R_a), the recurring denominator.
    double log_ratio() const;
};

// Every operation below validates cfg and throws DomainError on violation.

/// Closed-form solution at r in [R_a, R].
double psi(const ZeroEnergyConfig& cfg, double r);

/// d psi / dr = -source * r / 2 + A / r with A = [source (R^2 - R_a^2) / 4 + Pi] / ln(R / R_a).
double psi_prime(const ZeroEnergyConfig& cfg, double r);

/// The coefficient A of the 1/r term in psi_prime.
double log_coefficient(const ZeroEnergyConfig& cfg);

/// Centered-difference estimate of psi'' + psi'/r + source at r, step h.
/// The stencil [r - h, r + h] must lie strictly inside (R_a, R).
double pde_residual(const ZeroEnergyConfig& cfg, double r, double h);

/// (pi hbar^2 / m) * integral_{R_a}^{R} psi'(r)^2 r dr by adaptive Gauss-Kronrod.
/// Throws QuadratureError (carrying the best estimate) if the budget runs out.
double delta_energy_quadrature(const ZeroEnergyConfig& cfg, const PhysicalParams& p,
                               double tol = 1e-10, std::size_t max_evaluations = 1'000'000);

/// Termwise integration of the same integral:
/// (pi hbar^2 / m) [eps^2 (R^4 - R_a^4)/16 - eps A (R^2 - R_a^2)/2 + A^2 ln(R/R_a)].
double delta_energy_closed_form(const ZeroEnergyConfig& cfg, const PhysicalParams& p);

/// The curvature-energy expression exactly as typeset in the source article.
/// It agrees with the integral only when source == 0; kept for auditing.
double delta_energy_paper_eq8(const ZeroEnergyConfig& cfg, const PhysicalParams& p);

struct EnergyBreakdown {
    double quadrature_value = 0.0;
    double derived_closed_form = 0.0;
    double paper_eq8_value = 0.0;
    double relative_gap_quadrature_vs_derived = 0.0;
    double relative_gap_quadrature_vs_paper = 0.0;
};

/// |a - b| / max(|a|, |b|), defined as 0 when both are 0.
double relative_gap(double a, double b);

/// Runs all three evaluators. Throws ConvergenceError if quadrature and the
/// closed form disagree by more than 1e-8; the printed-expression gap is only reported.
EnergyBreakdown energy_audit(const ZeroEnergyConfig& cfg, const PhysicalParams& p,
                             double tol = 1e-10);

} // namespace mgpe
