#pragma once

#include <span>
#include <vector>

namespace nearquad {

/// Finite-difference weights (Fornberg's recurrence) for derivatives of
/// orders 0..max_order at `x0`, using the interpolating polynomial through
/// `nodes`. Result is indexed [order][node].
std::vector<std::vector<double>> fd_weights(std::span<const double> nodes, double x0,
                                            int max_order);

/// Derivatives 0..max_order at x0 of the polynomial interpolating
/// (nodes[i], values[i]).
std::vector<double> interpolant_derivatives(std::span<const double> nodes,
                                            std::span<const double> values, double x0,
                                            int max_order);

}  // namespace nearquad
