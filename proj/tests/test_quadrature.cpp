#include "doctest.h"

#include <cmath>
#include <numbers>

#include "mgpe/quadrature.hpp"

using namespace mgpe;

TEST_CASE("polynomials up to degree 13 are exact on one panel") {
    auto r = integrate([](double x) { return std::pow(x, 13) - 3.0 * x * x + 1.0; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 14.0 - 1.0 + 1.0).epsilon(1e-14));
    CHECK(r.intervals == 1);
    CHECK(r.evaluations == 15);
}

TEST_CASE("smooth integrals reach the tolerance") {
    auto r = integrate([](double x) { return 1.0 / x; }, 1.0, std::numbers::e);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.error_estimate <= 1e-10);

    r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("zero integrand terminates immediately") {
    auto r = integrate([](double) { return 0.0; }, -2.0, 5.0);
    CHECK(r.value == 0.0);
    CHECK(r.evaluations == 15);
}

TEST_CASE("budget exhaustion reports the best estimate") {
    // 1/sqrt(x) has an endpoint singularity that eats subdivisions.
    QuadratureOptions opt;
    opt.relative_tolerance = 1e-15;
    opt.max_evaluations = 200;
    try {
        integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.best_estimate().evaluations <= 200);
        CHECK(e.best_estimate().value == doctest::Approx(2.0).epsilon(0.05));
        CHECK(e.achieved_relative_tolerance() > 1e-15);
    }
}

TEST_CASE("invalid arguments") {
    QuadratureOptions opt;
    opt.relative_tolerance = 0.0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, opt), DomainError);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, INFINITY), DomainError);
}
