#include "nearquad/corrections.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "nearquad/emcoeff.hpp"
#include "nearquad/finite_difference.hpp"

namespace nearquad {

namespace {

void require_kernel(double c, double d, double h) {
  if (!(c > 0.0)) throw std::invalid_argument("correction: c must be positive");
  if (!(d > 0.0)) throw std::invalid_argument("correction: d must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("correction: h must be positive");
}

void require_complex(const GEval& g) {
  if (!g.has_complex()) {
    throw std::invalid_argument("closed-form correction needs a complex evaluator for g");
  }
}

CorrectionBreakdown assemble(double singular, double jump, int terms, CorrectionMethod m) {
  return {singular, jump, singular + jump, terms, m};
}

// (g(x_s + w) - g(x_s)) / w^2 at w = i y. Below kSmallImagShift the direct
// difference cancels, so the value comes from Cauchy's formula on |w| = R.
double divided_difference_imag(const GEval& g, double x_s, double y, Complex gi, double g0) {
  const Complex iy(0.0, y);
  if (y >= kSmallImagShift) return ((gi - g0) / (iy * iy)).real();
  constexpr int m = 32;
  constexpr double r = kCauchyRadius;
  Complex acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const Complex w = std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / m);
    const Complex phi = (g.complex(x_s + w) - g0) / (w * w);
    acc += phi * w / (w - iy);
  }
  return (acc / static_cast<double>(m)).real();
}

}  // namespace

CorrectionBreakdown correction_centered_closed(const GEval& g, double c, double d, double h,
                                               double x_s) {
  require_kernel(c, d, h);
  require_complex(g);
  const double lambda = d / (c * h);
  const double y = d / c;
  const double z0 = zk_table(CoeffParams{lambda, 0.0, h, 0})[0];
  const Complex gi = g.complex(Complex(x_s, y));
  const double g0 = g.real(x_s);
  const double c2 = c * c;
  const double divided = divided_difference_imag(g, x_s, y, gi, g0);
  const double singular = divided * h / c2 - 2.0 * z0 / (c2 * h) * gi.real();
  const double jump = std::numbers::pi / (c * d) * gi.real();
  return assemble(singular, jump, 0, CorrectionMethod::closed_form);
}

CorrectionBreakdown correction_offmesh_closed(const GEval& g, double c, double d, double h,
                                              double s, double x_s) {
  require_kernel(c, d, h);
  require_complex(g);
  if (!(std::abs(s) <= 0.5)) {
    throw std::invalid_argument("correction_offmesh_closed: |s| must not exceed 1/2");
  }
  const double lambda = d / (c * h);
  const auto p = pks_table(CoeffParams{lambda, s, h, 1});
  const Complex gi = g.complex(Complex(x_s, lambda * h));
  const double g_node = g.real(x_s - s * h);
  const double r2 = s * s + lambda * lambda;
  const double braces = (p[0] + 1.0 / r2) * gi.real() - g_node / r2 +
                        (p[1] - s / r2) * gi.imag() / lambda;
  const double singular = -braces / (c * c * h);
  const double jump = std::numbers::pi / (c * d) * gi.real();
  return assemble(singular, jump, 0, CorrectionMethod::closed_form);
}

CorrectionBreakdown correction_series_truncated(const GEval& g, double c, double d, double h,
                                                double s, int K, int k_max) {
  require_kernel(c, d, h);
  if (K < 0) throw std::invalid_argument("correction_series_truncated: K must be >= 0");
  if (K > k_max) {
    throw std::invalid_argument("correction_series_truncated: K exceeds coefficient table");
  }
  if (static_cast<int>(g.derivs.size()) <= K) {
    throw std::invalid_argument("correction_series_truncated: need derivatives through order K");
  }
  const double lambda = d / (c * h);
  const CoeffParams params{lambda, s, h, k_max};
  // At s = 0 the odd coefficients vanish and p_{k,0} = 2 z_k.
  const bool centred = s == 0.0;
  const auto coeff = centred ? zk_table(params) : pks_table(params);

  double sum = 0.0;
  double jump_sum = 0.0;
  double factorial = 1.0;
  double hpow = 1.0 / h;
  const double ratio = -(d * d) / (c * c);
  double ratio_pow = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      factorial *= k;
      hpow *= h;
    }
    const double term = g.derivs[k] / factorial;
    if (k % 2 == 0) {
      jump_sum += term * ratio_pow;
      ratio_pow *= ratio;
    }
    if (centred) {
      if (k % 2 == 0) sum += term * hpow * 2.0 * coeff[k];
    } else {
      sum += term * hpow * coeff[k];
    }
  }
  const double singular = -sum / (c * c);
  const double jump = std::numbers::pi / (c * d) * jump_sum;
  return assemble(singular, jump, K + 1, CorrectionMethod::truncated_series);
}

double hypersingular_offmesh(const GEval& g, double h, double s, double x_s) {
  if (!(h > 0.0)) throw std::invalid_argument("hypersingular_offmesh: h must be positive");
  if (!(std::abs(s) <= 0.5)) {
    throw std::invalid_argument("hypersingular_offmesh: |s| must not exceed 1/2");
  }
  if (g.derivs.size() < 3) {
    throw std::invalid_argument("hypersingular_offmesh: need g, g' and g'' at x_s");
  }
  const auto& dv = g.derivs;
  double divided = 0.0;
  if (std::abs(s) < kSmallShift) {
    // (g(x_s - sh) - g(x_s) + g'(x_s) sh) / (sh)^2 = sum_{k>=2} g^(k) (-sh)^(k-2) / k!
    const double step = -s * h;
    double factorial = 2.0;
    double pw = 1.0;
    for (std::size_t k = 2; k < dv.size(); ++k) {
      if (k > 2) {
        factorial *= static_cast<double>(k);
        pw *= step;
      }
      divided += dv[k] * pw / factorial;
    }
  } else {
    if (!g.real) throw std::invalid_argument("hypersingular_offmesh: missing evaluator for g");
    const double offset = s * h;
    divided = (g.real(x_s - offset) - dv[0] + dv[1] * offset) / (offset * offset);
  }
  const double p0 = trigamma(1.0 - s) + trigamma(1.0 + s);
  const double p1 = -digamma(1.0 - s) + digamma(1.0 + s);
  return divided * h - p0 / h * dv[0] - p1 * dv[1];
}

std::array<double, 7> fd_derivatives(const Stencil& samples, double h, double offset) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_derivatives: h must be positive");
  std::array<double, kStencilHalfWidth * 2 + 1> nodes{};
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) nodes[i] = i - kStencilHalfWidth;
  const auto unit = interpolant_derivatives(nodes, samples, offset / h, 6);
  std::array<double, 7> out{};
  double scale = 1.0;
  for (int k = 0; k <= 6; ++k) {
    out[k] = unit[k] / scale;
    scale *= h;
  }
  return out;
}

std::array<double, 7> fd_derivatives_on_mesh(const Mesh& mesh,
                                             const std::function<double(double)>& g,
                                             int centre, double x_s) {
  if (!mesh.contains(centre - kStencilHalfWidth) || !mesh.contains(centre + kStencilHalfWidth)) {
    throw std::invalid_argument(
        "fd_derivatives: stencil leaves the domain (near-singularity too close to an endpoint)");
  }
  Stencil samples{};
  for (int i = -kStencilHalfWidth; i <= kStencilHalfWidth; ++i) {
    samples[i + kStencilHalfWidth] = g(mesh.node(centre + i));
  }
  return fd_derivatives(samples, mesh.h(), x_s - mesh.node(centre));
}

}  // namespace nearquad
