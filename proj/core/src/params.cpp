#include "mgpe/params.hpp"

#include <cmath>
#include <numbers>

#include "mgpe/errors.hpp"

namespace mgpe {

void PhysicalParams::validate() const {
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (!(trap_frequency > 0.0)) throw DomainError("trap_frequency must be positive");
    if (!std::isfinite(scattering_length)) throw DomainError("scattering_length must be finite");
    if (density && !(*density >= 0.0)) throw DomainError("density must be non-negative");
    if (effective_radius && !(*effective_radius >= 0.0))
        throw DomainError("effective_radius must be non-negative");
}

double coupling_constant(const PhysicalParams& p) {
    if (!(p.mass > 0.0)) throw DomainError("coupling_constant: mass must be positive");
    return 4.0 * std::numbers::pi * p.scattering_length * p.hbar * p.hbar / p.mass;
}

double trap_length(const PhysicalParams& p) {
    if (!(p.mass > 0.0)) throw DomainError("trap_length: mass must be positive");
    if (!(p.trap_frequency > 0.0)) throw DomainError("trap_length: trap_frequency must be positive");
    return std::sqrt(p.hbar / (2.0 * p.mass * p.trap_frequency));
}

double healing_length(const PhysicalParams& p, double mu) {
    if (!(p.mass > 0.0)) throw DomainError("healing_length: mass must be positive");
    if (!(mu > 0.0)) throw DomainError("healing_length: chemical potential must be positive");
    return p.hbar / std::sqrt(2.0 * p.mass * mu);
}

std::optional<DilutenessReport> diluteness(const PhysicalParams& p, double threshold) {
    if (!p.density || !p.effective_radius) return std::nullopt;
    if (*p.density < 0.0 || *p.effective_radius < 0.0)
        throw DomainError("diluteness: density and effective_radius must be non-negative");
    const double re = *p.effective_radius;
    const double value = *p.density * re * re * re;
    return DilutenessReport{value, value < threshold};
}

} // namespace mgpe
