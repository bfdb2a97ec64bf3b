#pragma once

#include <optional>

namespace mgpe {

/// Physical constants of the gas. Trap units (hbar = m = 1) are the default;
/// SI values may be supplied field by field, no conversion is applied.
struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
    double scattering_length = 0.0;
    double trap_frequency = 1.0;
    // Unset unless the caller provides them; diluteness needs both.
    std::optional<double> density;
    std::optional<double> effective_radius;

    /// Throws DomainError unless hbar > 0, mass > 0, trap_frequency > 0 and
    /// any provided density / effective_radius is non-negative.
    void validate() const;
};

inline constexpr double kDefaultDilutenessThreshold = 1e-2;

struct DilutenessReport {
    double value = 0.0;   // n * r_e^3
    bool dilute = true;   // value < threshold
};

/// g = 4 pi a hbar^2 / m. Sign follows the scattering length.
double coupling_constant(const PhysicalParams& p);

/// l_t = sqrt(hbar / (2 m omega)).
double trap_length(const PhysicalParams& p);

/// l_h = hbar / sqrt(2 m mu); mu <= 0 means there is no condensate scale.
double healing_length(const PhysicalParams& p, double mu);

/// n * r_e^3 against a threshold. Empty when density or effective radius is unset.
std::optional<DilutenessReport> diluteness(const PhysicalParams& p,
                                           double threshold = kDefaultDilutenessThreshold);

} // namespace mgpe
