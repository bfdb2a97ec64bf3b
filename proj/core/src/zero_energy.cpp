#include "mgpe/zero_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mgpe/errors.hpp"

namespace mgpe {

namespace {

void require_in_domain(const ZeroEnergyConfig& cfg, double r, const char* op) {
    cfg.validate();
    if (!(r >= cfg.inner_radius && r <= cfg.outer_radius))
        throw DomainError(std::string(op) + ": r = " + std::to_string(r) + " outside [R_a, R]");
}

double energy_prefactor(const PhysicalParams& p) {
    if (!(p.mass > 0.0)) throw DomainError("curvature energy: mass must be positive");
    return std::numbers::pi * p.hbar * p.hbar / p.mass;
}

} // namespace

void ZeroEnergyConfig::validate() const {
    if (!std::isfinite(inner_radius) || !std::isfinite(outer_radius) || !std::isfinite(source) ||
        !std::isfinite(boundary_amplitude))
        throw DomainError("zero-energy config: all fields must be finite");
    if (!(inner_radius > 0.0)) throw DomainError("zero-energy config: inner radius must be positive");
    if (!(outer_radius > inner_radius))
        throw DomainError("zero-energy config: outer radius must exceed inner radius");
    if (source < 0.0 && !allow_negative_source)
        throw DomainError("zero-energy config: negative source rejected");
}

double ZeroEnergyConfig::log_ratio() const { return std::log(outer_radius / inner_radius); }

double log_coefficient(const ZeroEnergyConfig& cfg) {
    cfg.validate();
    const double ra = cfg.inner_radius;
    const double r = cfg.outer_radius;
    return (cfg.source * (r * r - ra * ra) / 4.0 + cfg.boundary_amplitude) / cfg.log_ratio();
}

namespace {

// Closed form in the caller's precision; endpoints are pinned exactly because
// the log terms would otherwise leave rounding residue there.
template <typename Real>
Real psi_closed_form(const ZeroEnergyConfig& cfg, Real r) {
    const Real ra = cfg.inner_radius;
    const Real big_r = cfg.outer_radius;
    if (r == ra) return Real(0);
    if (r == big_r) return Real(cfg.boundary_amplitude);
    const Real lr = std::log(big_r / ra);
    const Real curvature =
        Real(cfg.source) / 4 * (big_r * big_r - r * r + (big_r * big_r - ra * ra) * std::log(r / big_r) / lr);
    return curvature + Real(cfg.boundary_amplitude) * std::log(r / ra) / lr;
}

} // namespace

double psi(const ZeroEnergyConfig& cfg, double r) {
    require_in_domain(cfg, r, "psi");
    return psi_closed_form<double>(cfg, r);
}

double psi_prime(const ZeroEnergyConfig& cfg, double r) {
    require_in_domain(cfg, r, "psi_prime");
    return -cfg.source * r / 2.0 + log_coefficient(cfg) / r;
}

double pde_residual(const ZeroEnergyConfig& cfg, double r, double h) {
    cfg.validate();
    if (!(h > 0.0)) throw DomainError("pde_residual: step must be positive");
    if (!(r - h > cfg.inner_radius && r + h < cfg.outer_radius))
        throw DomainError("pde_residual: stencil leaves the open interval (R_a, R)");
    // Extended precision keeps the second difference's cancellation below the h^2 truncation error.
    using Wide = long double;
    const Wide step = h;
    const Wide centre = r;
    const Wide lo = psi_closed_form<Wide>(cfg, centre - step);
    const Wide mid = psi_closed_form<Wide>(cfg, centre);
    const Wide hi = psi_closed_form<Wide>(cfg, centre + step);
    const Wide second = (hi - 2 * mid + lo) / (step * step);
    const Wide first = (hi - lo) / (2 * step);
    return static_cast<double>(second + first / centre + Wide(cfg.source));
}

double delta_energy_quadrature(const ZeroEnergyConfig& cfg, const PhysicalParams& p, double tol,
                               std::size_t max_evaluations) {
    if (!(tol > 0.0)) throw DomainError("delta_energy_quadrature: tolerance must be positive");
    const double prefactor = energy_prefactor(p);
    const double a = log_coefficient(cfg);
    const double eps = cfg.source;
    auto integrand = [a, eps](double r) {
        const double slope = -eps * r / 2.0 + a / r;
        return slope * slope * r;
    };
    QuadratureOptions options;
    options.relative_tolerance = tol;
    options.max_evaluations = max_evaluations;
    try {
        return prefactor * integrate(integrand, cfg.inner_radius, cfg.outer_radius, options).value;
    } catch (const QuadratureError& e) {
        QuadratureResult scaled = e.best_estimate();
        scaled.value *= prefactor;
        scaled.error_estimate *= prefactor;
        throw QuadratureError(std::string("delta_energy_quadrature: ") + e.what(), scaled);
    }
}

double delta_energy_closed_form(const ZeroEnergyConfig& cfg, const PhysicalParams& p) {
    const double prefactor = energy_prefactor(p);
    const double ra2 = cfg.inner_radius * cfg.inner_radius;
    const double r2 = cfg.outer_radius * cfg.outer_radius;
    const double eps = cfg.source;
    const double a = log_coefficient(cfg);
    const double quartic = eps * eps * (r2 * r2 - ra2 * ra2) / 16.0;
    const double cross = eps * a * (r2 - ra2) / 2.0;
    return prefactor * (quartic - cross + a * a * cfg.log_ratio());
}

double delta_energy_paper_eq8(const ZeroEnergyConfig& cfg, const PhysicalParams& p) {
    cfg.validate();
    const double prefactor = energy_prefactor(p);
    const double ra = cfg.inner_radius;
    const double r = cfg.outer_radius;
    const double eps = cfg.source;
    const double pi_amp = cfg.boundary_amplitude;
    const double lr = cfg.log_ratio();
    const double width = r - ra;
    const double source_terms =
        eps * ((r * r * r - ra * ra * ra) / 12.0 + eps * (r * r - ra * ra) / lr * (1.0 / 16.0 - width / 4.0));
    const double boundary_terms = pi_amp / lr * (pi_amp + eps * width * (width / 2.0 - 1.0));
    return prefactor * (source_terms + boundary_terms);
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

EnergyBreakdown energy_audit(const ZeroEnergyConfig& cfg, const PhysicalParams& p, double tol) {
    EnergyBreakdown out;
    out.quadrature_value = delta_energy_quadrature(cfg, p, tol);
    out.derived_closed_form = delta_energy_closed_form(cfg, p);
    out.paper_eq8_value = delta_energy_paper_eq8(cfg, p);
    out.relative_gap_quadrature_vs_derived = relative_gap(out.quadrature_value, out.derived_closed_form);
    out.relative_gap_quadrature_vs_paper = relative_gap(out.quadrature_value, out.paper_eq8_value);
    if (out.relative_gap_quadrature_vs_derived > 1e-8)
        throw ConvergenceError("energy_audit: quadrature and closed form disagree (relative gap " +
                               std::to_string(out.relative_gap_quadrature_vs_derived) + ")");
    return out;
}

} // namespace mgpe
