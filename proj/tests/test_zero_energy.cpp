#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "mgpe/errors.hpp"
#include "mgpe/zero_energy.hpp"

using namespace mgpe;

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

// Extended-precision references, see tests/oracles/compute_oracles.py.
constexpr double kPsiAt2 = 1.4285562214131032148;
constexpr double kSlopeAt2 = -0.80547195053467488638;
constexpr double kEnergyR2Small = 0.00049281506747898284528;  // R_a=1 R=2 eps=Pi=0.01
constexpr double kEnergyE4 = 40.143623407547187995;           // R_a=1 R=e eps=4 Pi=0
constexpr double kEnergyR2Unit = 0.39579053296263464314;      // R_a=1 R=2 eps=1 Pi=0
constexpr double kPrintedR2Unit = -0.71685686518375034588;

ZeroEnergyConfig random_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> inner(0.1, 1.0), ratio(1.5, 20.0), source(0.0, 1.0),
        amp(-1.0, 1.0);
    ZeroEnergyConfig cfg;
    cfg.inner_radius = inner(rng);
    cfg.outer_radius = cfg.inner_radius * ratio(rng);
    cfg.source = source(rng);
    cfg.boundary_amplitude = amp(rng);
    return cfg;
}

} // namespace

TEST_CASE("config validation") {
    ZeroEnergyConfig cfg{1.0, 2.0, 0.1, 0.1};
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS((ZeroEnergyConfig{2.0, 2.0, 0.1, 0.1}.validate()), DomainError);
    CHECK_THROWS_AS((ZeroEnergyConfig{0.0, 2.0, 0.1, 0.1}.validate()), DomainError);
    CHECK_THROWS_AS((ZeroEnergyConfig{1.0, 2.0, -0.1, 0.1}.validate()), DomainError);
    ZeroEnergyConfig explore{1.0, 2.0, -0.1, 0.1, true};
    CHECK_NOTHROW(explore.validate());
    CHECK(psi(explore, 1.5) < psi(cfg, 1.5));
}

TEST_CASE("psi at the boundaries and one interior point") {
    const ZeroEnergyConfig cfg{1.0, kE, 4.0, 0.0};
    CHECK(psi(cfg, 1.0) == 0.0);
    CHECK(psi(cfg, kE) == 0.0);
    CHECK(psi(cfg, 2.0) == doctest::Approx(kPsiAt2).epsilon(1e-14));

    const ZeroEnergyConfig with_amp{0.3, 2.5, 0.7, -0.4};
    CHECK(psi(with_amp, 0.3) == 0.0);
    CHECK(psi(with_amp, 2.5) == -0.4);

    CHECK_THROWS_AS(psi(cfg, 0.999), DomainError);
    CHECK_THROWS_AS(psi(cfg, 2.72), DomainError);
}

TEST_CASE("psi_prime") {
    const ZeroEnergyConfig harmonic{1.0, kE, 0.0, 1.0};
    CHECK(psi_prime(harmonic, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(psi_prime(harmonic, kE) == doctest::Approx(1.0 / kE).epsilon(1e-15));

    const ZeroEnergyConfig cfg{1.0, kE, 4.0, 0.0};
    CHECK(psi_prime(cfg, 2.0) == doctest::Approx(kSlopeAt2).epsilon(1e-14));
    CHECK_THROWS_AS(psi_prime(cfg, 3.0), DomainError);

    // Central difference of psi agrees with the analytic slope.
    const ZeroEnergyConfig other{0.2, 1.7, 0.9, 0.35};
    const double h = 1e-5;
    for (double r : {0.3, 0.8, 1.5}) {
        const double fd = (psi(other, r + h) - psi(other, r - h)) / (2.0 * h);
        CHECK(fd == doctest::Approx(psi_prime(other, r)).epsilon(1e-8));
    }
}

TEST_CASE("pde residual") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto cfg = random_config(rng);
        const double mid = 0.5 * (cfg.inner_radius + cfg.outer_radius);
        const double scale =
            std::max(cfg.source, std::abs(cfg.boundary_amplitude) / (cfg.outer_radius * cfg.outer_radius));
        CHECK(std::abs(pde_residual(cfg, mid, 1e-3)) < 1e-4 * scale);
    }

    const ZeroEnergyConfig null{0.5, 1.5, 0.0, 0.0};
    CHECK(pde_residual(null, 1.0, 1e-2) == 0.0);

    const ZeroEnergyConfig cfg{1.0, kE, 4.0, 0.0};
    const double ratio = pde_residual(cfg, 1.5, 1e-2) / pde_residual(cfg, 1.5, 5e-3);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);

    CHECK_THROWS_AS(pde_residual(cfg, 1.005, 1e-2), DomainError);
    CHECK_THROWS_AS(pde_residual(cfg, 2.0, 0.0), DomainError);
}

TEST_CASE("psi is affine in (eps, Pi) jointly") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        auto a = random_config(rng);
        auto b = a;
        b.source = u(rng);
        b.boundary_amplitude = 2.0 * u(rng) - 1.0;
        auto sum = a;
        sum.source = a.source + b.source;
        sum.boundary_amplitude = a.boundary_amplitude + b.boundary_amplitude;
        const double r = a.inner_radius + u(rng) * (a.outer_radius - a.inner_radius);
        const double pa = psi(a, r), pb = psi(b, r);
        CHECK(std::abs(psi(sum, r) - (pa + pb)) <= 1e-12 * std::max(std::abs(pa) + std::abs(pb), 1e-300));
    }
}

TEST_CASE("source coefficient is non-negative on the annulus") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        auto cfg = random_config(rng);
        cfg.source = 1.0;
        cfg.boundary_amplitude = 0.0;
        const int points = 10'000;
        for (int i = 0; i <= points; ++i) {
            const double r = cfg.inner_radius + (cfg.outer_radius - cfg.inner_radius) * i / points;
            REQUIRE(psi(cfg, std::min(r, cfg.outer_radius)) >= -1e-12);
        }
    }
}

TEST_CASE("curvature energy: homogeneous limit") {
    const PhysicalParams units;
    const ZeroEnergyConfig cfg{1.0, kE, 0.0, 1.0};
    CHECK(delta_energy_quadrature(cfg, units) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(delta_energy_closed_form(cfg, units) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(delta_energy_paper_eq8(cfg, units) == doctest::Approx(kPi).epsilon(1e-14));

    const ZeroEnergyConfig zero{0.4, 3.0, 0.0, 0.0};
    CHECK(delta_energy_quadrature(zero, units) == 0.0);
    CHECK(delta_energy_closed_form(zero, units) == 0.0);
    CHECK(delta_energy_paper_eq8(zero, units) == 0.0);

    // pi hbar^2 Pi^2 / (m ln(R/R_a)) with non-unit constants.
    PhysicalParams p;
    p.hbar = 1.7;
    p.mass = 0.6;
    const ZeroEnergyConfig amp{0.3, 2.1, 0.0, -0.8};
    const double expected = kPi * p.hbar * p.hbar / p.mass * 0.64 / std::log(2.1 / 0.3);
    CHECK(delta_energy_closed_form(amp, p) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(delta_energy_paper_eq8(amp, p) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(delta_energy_quadrature(amp, p) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("curvature energy: frozen references") {
    const PhysicalParams units;
    const ZeroEnergyConfig small{1.0, 2.0, 0.01, 0.01};
    CHECK(relative_gap(delta_energy_quadrature(small, units), kEnergyR2Small) <= 1e-8);
    CHECK(relative_gap(delta_energy_closed_form(small, units), kEnergyR2Small) <= 1e-12);

    const ZeroEnergyConfig big{1.0, kE, 4.0, 0.0};
    CHECK(relative_gap(delta_energy_quadrature(big, units), kEnergyE4) <= 1e-10);
    CHECK(relative_gap(delta_energy_closed_form(big, units), kEnergyE4) <= 1e-12);

    const ZeroEnergyConfig unit{1.0, 2.0, 1.0, 0.0};
    CHECK(relative_gap(delta_energy_closed_form(unit, units), kEnergyR2Unit) <= 1e-12);
    CHECK(delta_energy_paper_eq8(unit, units) == doctest::Approx(kPrintedR2Unit).epsilon(1e-13));
}

TEST_CASE("quadrature matches closed form over random configs") {
    std::mt19937_64 rng(8);
    const PhysicalParams units;
    for (int k = 0; k < 200; ++k) {
        const auto cfg = random_config(rng);
        const double q = delta_energy_quadrature(cfg, units);
        CHECK(q >= 0.0);
        CHECK(relative_gap(q, delta_energy_closed_form(cfg, units)) <= 1e-8);
    }
}

TEST_CASE("quadrature budget and tolerance errors") {
    const PhysicalParams units;
    const ZeroEnergyConfig cfg{0.1, 2.0, 1.0, 1.0};
    CHECK_THROWS_AS(delta_energy_quadrature(cfg, units, 0.0), DomainError);
    try {
        delta_energy_quadrature(cfg, units, 1e-15, 45);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.best_estimate().value > 0.0);
        CHECK(e.best_estimate().evaluations <= 45);
    }
}

TEST_CASE("energy audit") {
    const PhysicalParams units;
    auto audit = energy_audit({1.0, kE, 0.0, 1.0}, units);
    CHECK(audit.quadrature_value == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(audit.relative_gap_quadrature_vs_derived <= 1e-10);
    CHECK(audit.relative_gap_quadrature_vs_paper <= 1e-10);

    audit = energy_audit({1.0, 2.0, 0.0, 0.0}, units);
    CHECK(audit.quadrature_value == 0.0);
    CHECK(audit.derived_closed_form == 0.0);
    CHECK(audit.paper_eq8_value == 0.0);
    CHECK(audit.relative_gap_quadrature_vs_derived == 0.0);
    CHECK(audit.relative_gap_quadrature_vs_paper == 0.0);

    audit = energy_audit({1.0, 2.0, 0.01, 0.01}, units);
    CHECK(audit.relative_gap_quadrature_vs_derived <= 1e-8);
    // The printed expression is off by more than an order of magnitude here.
    CHECK(audit.relative_gap_quadrature_vs_paper > 0.9);
}
