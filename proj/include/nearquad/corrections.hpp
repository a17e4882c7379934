#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "nearquad/meshrule.hpp"
#include "nearquad/specfun.hpp"

namespace nearquad {

/// The smooth numerator g of g(x) / (d^2 + c^2 (x - x_s)^2).
///
/// `complex` is an optional analytic continuation of `real`, used by the
/// closed-form corrections. `derivs`, when non-empty, holds g^{(k)}(x_s) for
/// k = 0, 1, ... and takes precedence over finite-difference estimates.
struct GEval {
  std::function<double(double)> real;
  std::function<Complex(Complex)> complex;
  std::vector<double> derivs;

  bool has_complex() const { return static_cast<bool>(complex); }
};

enum class CorrectionMethod { closed_form, truncated_series };

/// Estimate of E_h = I - T_h. singular_part is the continuous extension of the
/// singular Euler-Maclaurin terms; jump_part is the pi/(c d) series.
struct CorrectionBreakdown {
  double singular_part = 0.0;
  double jump_part = 0.0;
  double total = 0.0;
  int terms_used = 0;
  CorrectionMethod method = CorrectionMethod::closed_form;
};

/// Below this d/c the centred closed form gets (g(x_s + i d/c) - g(x_s)) / (i d/c)^2
/// from a Cauchy integral of radius kCauchyRadius, where g must be analytic.
inline constexpr double kSmallImagShift = 1e-2;
inline constexpr double kCauchyRadius = 0.25;

/// Closed-form correction when the near-singularity sits on a node x_s.
CorrectionBreakdown correction_centered_closed(const GEval& g, double c, double d, double h,
                                               double x_s = 0.0);

/// Closed-form correction for x_s = x_0 + s h, where x_0 = x_s - s h is the
/// nearest (punctured) node. s = 0 reproduces the centred form.
CorrectionBreakdown correction_offmesh_closed(const GEval& g, double c, double d, double h,
                                              double s, double x_s);

/// Partial sums of the correction series using g.derivs (derivatives at x_s)
/// through order K. s = 0 uses the even-k form with 2 z_{2k}; otherwise all k
/// with p_{k,s}. The jump series is truncated at the same order.
CorrectionBreakdown correction_series_truncated(const GEval& g, double c, double d, double h,
                                                double s, int K, int k_max = 12);

/// E_h[g(x)/(x - x_s)^2] for the punctured rule, x_s = x_0 + s h with x_0 the
/// punctured node. Needs g.derivs at x_s through order 2; for |s| below
/// kSmallShift the divided-difference term is summed from its Taylor series
/// using every derivative supplied (order 6 recommended).
double hypersingular_offmesh(const GEval& g, double h, double s, double x_s);

inline constexpr double kSmallShift = 0.1;

inline constexpr int kStencilHalfWidth = 4;
using Stencil = std::array<double, 2 * kStencilHalfWidth + 1>;

/// g^{(0..6)} at centre + `offset` (a distance in x, not in units of h) from the degree-8
/// interpolant through nine samples spaced h apart.
std::array<double, 7> fd_derivatives(const Stencil& samples, double h, double offset);

/// Gathers g on the nine nodes centred at node `centre` and differentiates at
/// x_s. Throws std::invalid_argument if the stencil leaves the mesh.
std::array<double, 7> fd_derivatives_on_mesh(const Mesh& mesh,
                                             const std::function<double(double)>& g,
                                             int centre, double x_s);

}  // namespace nearquad
