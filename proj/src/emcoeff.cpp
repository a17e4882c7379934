#include "nearquad/emcoeff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nearquad {

namespace {

std::vector<double> recurrence_tail(std::vector<double> t, double lambda2, auto&& constant) {
  for (std::size_t k = 2; k < t.size(); ++k) {
    t[k] = constant(static_cast<int>(k)) - lambda2 * t[k - 2];
  }
  return t;
}

std::vector<double> shifted_z_table(const CoeffParams& p, double s) {
  const double a = 1.0 + s;
  std::vector<double> t(p.k_max + 1, 0.0);
  if (p.lambda == 0.0) {
    t[0] = zeta_h_hurwitz(2, a, p.h);
    if (p.k_max >= 1) t[1] = zeta_h_hurwitz(1, a, p.h);
  } else {
    const Complex psi = digamma(Complex(a, -p.lambda));
    t[0] = -psi.imag() / p.lambda;
    if (p.k_max >= 1) t[1] = -psi.real() - std::log(p.h);
  }
  return recurrence_tail(std::move(t), p.lambda * p.lambda,
                         [&](int k) { return zeta_h_hurwitz(2 - k, a, p.h); });
}

}  // namespace

void CoeffParams::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("CoeffParams: lambda must be finite and >= 0");
  }
  if (!(std::abs(s) <= 0.5)) {
    throw std::invalid_argument("CoeffParams: |s| must not exceed 1/2");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("CoeffParams: h must be positive");
  }
  if (k_max < 0 || k_max > 32) {
    throw std::invalid_argument("CoeffParams: k_max must lie in 0..32");
  }
}

std::vector<double> zk_table(const CoeffParams& p) {
  p.validate();
  return shifted_z_table(p, 0.0);
}

std::vector<double> zks_table(const CoeffParams& p) {
  p.validate();
  return shifted_z_table(p, p.s);
}

std::vector<double> pks_table(const CoeffParams& p) {
  p.validate();
  const double s = p.s;
  std::vector<double> t(p.k_max + 1, 0.0);
  if (p.lambda == 0.0) {
    t[0] = trigamma(1.0 - s) + trigamma(1.0 + s);
    if (p.k_max >= 1) t[1] = -digamma(1.0 - s) + digamma(1.0 + s);
  } else {
    const Complex lo = digamma(Complex(1.0 - s, -p.lambda));
    const Complex hi = digamma(Complex(1.0 + s, -p.lambda));
    t[0] = -(lo.imag() + hi.imag()) / p.lambda;
    if (p.k_max >= 1) t[1] = -(lo.real() - hi.real());
  }
  return recurrence_tail(std::move(t), p.lambda * p.lambda,
                         [&](int k) { return -std::pow(-s, k - 2); });
}

std::vector<double> pks_closed_form(const CoeffParams& p) {
  p.validate();
  const double s = p.s;
  const double l2 = p.lambda * p.lambda;
  const double denom = s * s + l2;
  if (!(denom > 0.0)) {
    throw std::domain_error("pks_closed_form: undefined at s = lambda = 0");
  }
  const auto base = pks_table(CoeffParams{p.lambda, s, p.h, std::min(p.k_max, 1)});
  std::vector<double> t(p.k_max + 1, 0.0);
  for (int k = 0; k <= p.k_max; ++k) {
    const int half = k / 2;
    const double ml = std::pow(-l2, half);
    if (k % 2 == 0) {
      t[k] = -(std::pow(s, k) - ml) / denom + ml * base[0];
    } else {
      t[k] = (std::pow(s, k) - ml * s) / denom + ml * base[1];
    }
  }
  return t;
}

double significance_loss_bound(double lambda, int k) {
  return std::pow(lambda, 2 * (k / 2)) * std::numeric_limits<double>::epsilon();
}

CoeffTable coeff_table(const CoeffParams& p) {
  p.validate();
  CoeffTable t;
  t.params = p;
  t.zk = zk_table(p);
  t.zks = zks_table(p);
  t.zk_minus_s = zks_table(CoeffParams{p.lambda, -p.s, p.h, p.k_max});
  t.pks = pks_table(p);
  t.loss_bound.resize(p.k_max + 1);
  for (int k = 0; k <= p.k_max; ++k) t.loss_bound[k] = significance_loss_bound(p.lambda, k);
  return t;
}

double pks_identity_residual(const CoeffTable& t, int k) {
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  const double scale = std::max({1.0, std::abs(t.zk_minus_s[k]), std::abs(t.zks[k])});
  return std::abs(t.pks[k] - (t.zk_minus_s[k] + sign * t.zks[k])) / scale;
}

double hurwitz_zeta_positive(int n, double a) {
  if (n < 2) throw std::domain_error("hurwitz_zeta_positive: order must be >= 2");
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta_positive: offset must be positive");
  const int terms = n + 20;
  double head = 0.0;
  for (int j = terms - 1; j >= 0; --j) head += std::pow(j + a, -n);
  const double x = terms + a;
  double tail = std::pow(x, 1 - n) / (n - 1) + 0.5 * std::pow(x, -n);
  // sum_j B_2j/(2j)! * n(n+1)...(n+2j-2) * x^{-n-2j+1}
  double rising = n;
  double factorial = 2.0;
  double xpow = std::pow(x, -n - 1);
  constexpr double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
                            7.0 / 6, -3617.0 / 510};
  for (int j = 1; j <= 8; ++j) {
    tail += b2j[j - 1] / factorial * rising * xpow;
    rising *= (n + 2.0 * j - 1) * (n + 2.0 * j);
    factorial *= (2.0 * j + 1) * (2.0 * j + 2);
    xpow /= x * x;
  }
  return head + tail;
}

Complex fks_series_oracle(int k, Complex z, double s, double h, int m_max) {
  if (k < 0) throw std::invalid_argument("fks_series_oracle: k must be >= 0");
  const double radius = std::min(1.0, 1.0 + s);
  const double r = std::abs(z) / radius;
  if (!(r < 1.0)) {
    throw std::domain_error("fks_series_oracle: |z| outside the convergence disc");
  }
  if (m_max <= 0) {
    m_max = r == 0.0 ? 1 : static_cast<int>(std::ceil(std::log(1e-17 * (1.0 - r)) / (2.0 * std::log(r)))) + k;
  }
  const double a = 1.0 + s;
  const Complex z2 = z * z;
  Complex zpow = 1.0;
  Complex acc = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const int order = 2 * m + 2 - k;
    double zeta = 0.0;
    if (order >= 2) {
      zeta = hurwitz_zeta_positive(order, a);
    } else if (order == 1) {
      zeta = -digamma(a) - std::log(h);
    } else {
      zeta = hurwitz_zeta_nonpos(-order, a);
    }
    acc += zpow * zeta;
    zpow *= z2;
  }
  return acc;
}

Complex fk_series_oracle(int k, Complex z, double h, int m_max) {
  return fks_series_oracle(k, z, 0.0, h, m_max);
}

}  // namespace nearquad
