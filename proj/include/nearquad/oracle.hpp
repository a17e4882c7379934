#pragma once

#include <functional>
#include <vector>

#include "nearquad/corrections.hpp"
#include "nearquad/integrator.hpp"

namespace nearquad {

struct ReferenceResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature. `breakpoints` must be
/// sorted and include both ends. Panels are bisected until the summed
/// |K15 - G7| estimates fall below `tol`; panels whose estimate is at the
/// rounding floor are not split further. Throws std::runtime_error if the
/// evaluation budget runs out first.
ReferenceResult adaptive_integrate(const std::function<double(double)>& f,
                                   const std::vector<double>& breakpoints, double tol,
                                   long max_evaluations = 4'000'000);

/// Reference value of the near-singular integral, pre-split at x_s and at
/// x_s +- (d/c) 4^j to resolve the peak. `tol` is relative to max(1, integral of |f|).
ReferenceResult reference_integral(const GEval& g, const KernelParams& params,
                                   double tol = 1e-14);

/// Exponential integral Ei(z) with the principal branch of log z.
Complex complex_ei(Complex z);

/// Integral of d e^x / (d^2 + x^2) over [-1, 1].
double exact_test1(double d);

/// Integral of d e^x / (d^2 + c^2 (x - x_s)^2) over [-1, 1].
double exact_test2(double d, double c, double x_s);

/// Hadamard finite part of the integral of g(x)/(x - x_s)^2 over [-a, a] by
/// singularity subtraction. The smooth remainder near x_s and g'(x_s) are
/// computed from Cauchy integrals on a circle of `contour_radius` about x_s,
/// so g must be analytic there (g.complex is required).
double finite_part_reference(const GEval& g, double a, double x_s, double tol = 1e-13,
                             double contour_radius = 0.5);

}  // namespace nearquad
