#pragma once

#include <cstddef>
#include <functional>

#include "mgpe/errors.hpp"

namespace mgpe {

struct QuadratureOptions {
    double relative_tolerance = 1e-10;
    // Absolute floor on the error target, so integrals that are exactly zero terminate.
    double absolute_tolerance = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
};

/// Raised when the evaluation budget runs out before the error target is met.
class QuadratureError : public ConvergenceError {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : ConvergenceError(what), best_(best) {}

    const QuadratureResult& best_estimate() const noexcept { return best_; }
    double achieved_relative_tolerance() const noexcept;

private:
    QuadratureResult best_;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration on [a, b]. The interval
/// with the largest error estimate is bisected until the summed estimate drops
/// below max(relative_tolerance * |I|, absolute_tolerance).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

} // namespace mgpe
