#include "nearquad/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace nearquad {

namespace {

constexpr std::array<double, 65> kBernoulli = {
    1, -0.5, 0.16666666666666666,
    0, -0.033333333333333333, 0,
    0.023809523809523808, 0, -0.033333333333333333,
    0, 0.07575757575757576, 0,
    -0.2531135531135531, 0, 1.1666666666666667,
    0, -7.0921568627450977, 0,
    54.971177944862156, 0, -529.12424242424242,
    0, 6192.123188405797, 0,
    -86580.253113553117, 0, 1425517.1666666667,
    0, -27298231.067816094, 0,
    601580873.9006424, 0, -15116315767.092157,
    0, 429614643061.16669, 0,
    -13711655205088.332, 0, 488332318973593.19,
    0, -19296579341940068, 0,
    8.4169304757368256e+17, 0, -4.0338071854059454e+19,
    0, 2.1150748638081993e+21, 0,
    -1.2086626522296526e+23, 0, 7.5008667460769642e+24,
    0, -5.0387781014810688e+26, 0,
    3.6528776484818122e+28, 0, -2.8498769302450882e+30,
    0, 2.3865427499683627e+32, 0,
    -2.1399949257225335e+34, 0, 2.0500975723478097e+36,
    0, -2.0938005911346379e+38,
};

constexpr double kShiftRadius = 12.0;

using LComplex = std::complex<long double>;

// sum_{k=1}^{8} B_{2k} / (2k w^{2k})
LComplex digamma_asymptotic_tail(LComplex w) {
  const LComplex w2inv = 1.0L / (w * w);
  LComplex acc = 0.0L;
  for (int k = 8; k >= 1; --k) {
    acc = acc * w2inv + static_cast<long double>(kBernoulli[2 * k]) / (2.0L * k);
  }
  return acc * w2inv;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

void require_order(int n, int max, const char* what) {
  if (n < 0 || n > max) {
    throw std::out_of_range(std::string(what) + ": order " + std::to_string(n) +
                            " outside [0, " + std::to_string(max) + "]");
  }
}

}  // namespace

double bernoulli_number(int n) {
  require_order(n, 64, "bernoulli_number");
  return kBernoulli[n];
}

double bernoulli_poly(int n, double x) {
  require_order(n, 32, "bernoulli_poly");
  // Horner over sum_k C(n,k) B_k x^{n-k}, highest power of x first.
  long double binom = 1.0L;
  long double acc = 0.0L;
  for (int k = 0; k <= n; ++k) {
    acc = acc * x + binom * kBernoulli[k];
    binom = binom * (n - k) / (k + 1);
  }
  return static_cast<double>(acc);
}

Complex digamma(Complex z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
    throw std::domain_error("digamma: pole at nonpositive integer");
  }
  // Reflection is not needed on the supported domain; shift upward only.
  const LComplex zl(z.real(), z.imag());
  LComplex shift_sum = 0.0L;
  LComplex w = zl;
  int steps = 0;
  while (std::abs(w) < kShiftRadius) {
    ++steps;
    w += 1.0L;
  }
  for (int k = steps - 1; k >= 0; --k) {
    shift_sum += 1.0L / (zl + static_cast<long double>(k));
  }
  const LComplex psi = std::log(w) - 0.5L / w - digamma_asymptotic_tail(w) - shift_sum;
  return {static_cast<double>(psi.real()), static_cast<double>(psi.imag())};
}

double digamma(double x) { return digamma(Complex(x, 0.0)).real(); }

double trigamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("trigamma: argument must be positive");
  }
  long double shift_sum = 0.0L;
  long double w = x;
  int steps = 0;
  while (w < kShiftRadius) {
    ++steps;
    w += 1.0L;
  }
  for (int k = steps - 1; k >= 0; --k) {
    const long double t = static_cast<long double>(x) + k;
    shift_sum += 1.0L / (t * t);
  }
  // psi'(w) ~ 1/w + 1/(2w^2) + sum_k B_{2k} / w^{2k+1}
  const long double w2inv = 1.0L / (w * w);
  long double acc = 0.0L;
  for (int k = 8; k >= 1; --k) {
    acc = acc * w2inv + kBernoulli[2 * k];
  }
  return static_cast<double>(shift_sum + 1.0L / w + 0.5L * w2inv + acc * w2inv / w);
}

double hurwitz_zeta_nonpos(int n, double a) {
  require_order(n, 31, "hurwitz_zeta_nonpos");
  return -bernoulli_poly(n + 1, a) / (n + 1);
}

double zeta_h(int order, double h) { return zeta_h_hurwitz(order, 1.0, h); }

double zeta_h_hurwitz(int order, double offset, double h) {
  if (!(h > 0.0)) {
    throw std::domain_error("zeta_h: mesh size must be positive");
  }
  if (!(offset > 0.0)) {
    throw std::domain_error("zeta_h: Hurwitz offset must be positive");
  }
  if (order == 2) {
    return offset == 1.0 ? std::numbers::pi * std::numbers::pi / 6.0 : trigamma(offset);
  }
  if (order == 1) {
    const double psi = offset == 1.0 ? -euler_gamma : digamma(offset);
    return -psi - std::log(h);
  }
  if (order <= 0) {
    return hurwitz_zeta_nonpos(-order, offset);
  }
  throw std::domain_error("zeta_h: unsupported order " + std::to_string(order));
}

}  // namespace nearquad
