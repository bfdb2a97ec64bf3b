#pragma once

#include <span>
#include <vector>

namespace mgpe {

/// Thomas algorithm for a tridiagonal system of size n.
///   sub[i] x[i-1] + diag[i] x[i] + super[i] x[i+1] = rhs[i]
/// sub[0] and super[n-1] are ignored. No pivoting: a zero, subnormal or
/// non-finite pivot raises SingularSystemError.
std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> super, std::span<const double> rhs);

/// ||A x - b||_inf for the same banded layout.
double tridiagonal_residual_inf(std::span<const double> sub, std::span<const double> diag,
                                std::span<const double> super, std::span<const double> x,
                                std::span<const double> rhs);

} // namespace mgpe
