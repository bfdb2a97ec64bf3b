#include "mgpe/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mgpe/errors.hpp"

namespace mgpe {

namespace {

void check_pivot(double pivot, std::size_t row) {
    // Rejects 0, subnormals and NaN in one comparison.
    if (!(std::abs(pivot) >= std::numeric_limits<double>::min()) || !std::isfinite(pivot))
        throw SingularSystemError("thomas_solve: singular pivot at row " + std::to_string(row));
}

} // namespace

std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> super, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (sub.size() != n || super.size() != n || rhs.size() != n)
        throw DomainError("thomas_solve: band and right-hand side sizes differ");
    if (n == 0) return {};

    std::vector<double> c(n, 0.0);
    std::vector<double> x(n, 0.0);

    check_pivot(diag[0], 0);
    c[0] = n > 1 ? super[0] / diag[0] : 0.0;
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double pivot = diag[i] - sub[i] * c[i - 1];
        check_pivot(pivot, i);
        c[i] = i + 1 < n ? super[i] / pivot : 0.0;
        x[i] = (rhs[i] - sub[i] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

double tridiagonal_residual_inf(std::span<const double> sub, std::span<const double> diag,
                                std::span<const double> super, std::span<const double> x,
                                std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (sub.size() != n || super.size() != n || rhs.size() != n || x.size() != n)
        throw DomainError("tridiagonal_residual_inf: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = diag[i] * x[i];
        if (i > 0) ax += sub[i] * x[i - 1];
        if (i + 1 < n) ax += super[i] * x[i + 1];
        worst = std::max(worst, std::abs(ax - rhs[i]));
    }
    return worst;
}

} // namespace mgpe
