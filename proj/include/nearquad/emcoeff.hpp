#pragma once

#include <vector>

#include "nearquad/specfun.hpp"

namespace nearquad {

/// Parameters of the correction coefficients: lambda = d/(c h), the off-mesh
/// fraction s (x_s = s h relative to the nearest node), the mesh size h and
/// the highest coefficient index.
struct CoeffParams {
  double lambda = 0.0;
  double s = 0.0;
  double h = 1.0;
  int k_max = 12;

  void validate() const;
};

/// z_0..z_{k_max}: z_0 = -Im psi(1 - i lambda)/lambda,
/// z_1 = -Re psi(1 - i lambda) - log h, z_k = zeta(2-k) - lambda^2 z_{k-2}.
/// lambda = 0 uses the limits zeta(2), gamma - log h, zeta(2-k).
std::vector<double> zk_table(const CoeffParams& p);

/// z_{k,s}: as zk_table with psi(1 + s - i lambda) and zeta(2-k, 1+s).
std::vector<double> zks_table(const CoeffParams& p);

/// p_{k,s} = z_{k,-s} + (-1)^k z_{k,s}, through its own recurrence
/// p_0 = -Im[psi(1-s-i lambda) + psi(1+s-i lambda)]/lambda,
/// p_1 = -Re[psi(1-s-i lambda) - psi(1+s-i lambda)],
/// p_k = -(-s)^{k-2} - lambda^2 p_{k-2}.
std::vector<double> pks_table(const CoeffParams& p);

/// Closed form of p_{k,s} in terms of p_{0,s} and p_{1,s}. Requires
/// s^2 + lambda^2 > 0.
std::vector<double> pks_closed_form(const CoeffParams& p);

/// Rounding-error bound lambda^{2 floor(k/2)} * eps for the k-th coefficient
/// of a recurrence table.
double significance_loss_bound(double lambda, int k);

struct CoeffTable {
  CoeffParams params;
  std::vector<double> zk;
  std::vector<double> zks;
  std::vector<double> zk_minus_s;
  std::vector<double> pks;
  std::vector<double> loss_bound;
};

CoeffTable coeff_table(const CoeffParams& p);

/// |p_{k,s} - (z_{k,-s} + (-1)^k z_{k,s})| divided by max(1, |z_{k,-s}|, |z_{k,s}|),
/// the magnitude the two z terms carry before they cancel.
double pks_identity_residual(const CoeffTable& t, int k);

/// Truncated rational zeta series sum_{m=0}^{m_max} z^{2m} zeta_h(2m+2-k, 1+s).
/// With s = 0 this is f_k(z). Zeta values at positive orders come from a
/// direct Euler-Maclaurin summation that shares nothing with the recurrences.
/// Requires |z| < min(1, 1+s). m_max = 0 picks a length whose tail is below
/// 1e-17 relative.
Complex fks_series_oracle(int k, Complex z, double s, double h, int m_max = 0);
Complex fk_series_oracle(int k, Complex z, double h, int m_max = 0);

/// zeta(n, a) for integer n >= 2 by direct summation with an Euler-Maclaurin tail.
double hurwitz_zeta_positive(int n, double a);

}  // namespace nearquad
