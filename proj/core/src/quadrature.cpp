#include "mgpe/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace mgpe {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (indices 1, 3, 5) and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

constexpr std::size_t kEvalsPerPanel = 15;

} // namespace

double QuadratureError::achieved_relative_tolerance() const noexcept {
    const double scale = std::abs(best_.value);
    if (scale == 0.0) return best_.error_estimate == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return best_.error_estimate / scale;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
    if (!(options.relative_tolerance > 0.0))
        throw DomainError("integrate: relative tolerance must be positive");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate: limits must be finite");
    if (a == b) return {};

    std::priority_queue<Panel> panels;
    Panel first = kronrod15(f, a, b);
    double total = first.value;
    double total_error = first.error;
    std::size_t evaluations = kEvalsPerPanel;
    panels.push(first);

    auto target = [&] {
        return std::max(options.relative_tolerance * std::abs(total), options.absolute_tolerance);
    };

    while (total_error > target()) {
        if (evaluations + 2 * kEvalsPerPanel > options.max_evaluations) {
            QuadratureResult best{total, total_error, evaluations, panels.size()};
            throw QuadratureError("integrate: evaluation budget of " +
                                      std::to_string(options.max_evaluations) +
                                      " exhausted before reaching tolerance",
                                  best);
        }
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval cannot be split further in double precision.
            QuadratureResult best{total, total_error, evaluations, panels.size()};
            throw QuadratureError("integrate: subinterval underflow near x = " + std::to_string(mid),
                                  best);
        }
        panels.pop();
        const Panel left = kronrod15(f, worst.a, mid);
        const Panel right = kronrod15(f, mid, worst.b);
        evaluations += 2 * kEvalsPerPanel;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        if (!std::isfinite(total)) {
            QuadratureResult best{total, total_error, evaluations, panels.size()};
            throw QuadratureError("integrate: integrand produced a non-finite value", best);
        }
    }

    // Re-sum to shed the drift accumulated by the running updates.
    double value = 0.0;
    double error = 0.0;
    const std::size_t count = panels.size();
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return {value, error, evaluations, count};
}

} // namespace mgpe
