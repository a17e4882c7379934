#pragma once

#include <complex>
#include <numbers>

namespace nearquad {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = std::numbers::egamma;

/// Bernoulli number B_n for 0 <= n <= 64, with the B_1 = -1/2 convention.
double bernoulli_number(int n);

/// Bernoulli polynomial B_n(x) for 0 <= n <= 32.
double bernoulli_poly(int n, double x);

/// Digamma function psi(z) = Gamma'(z)/Gamma(z) for complex z.
///
/// Shifts z upward with psi(z+1) = psi(z) + 1/z until |z| >= 12, then sums the
/// asymptotic series through B_16. Throws std::domain_error at the poles
/// z = 0, -1, -2, ...
Complex digamma(Complex z);
double digamma(double x);

/// Trigamma psi'(x) = zeta(2, x) for x > 0.
double trigamma(double x);

/// Hurwitz zeta at a nonpositive integer order, zeta(-n, a) = -B_{n+1}(a)/(n+1).
double hurwitz_zeta_nonpos(int n, double a);

// Modified zeta functions. Only the orders the coefficient recurrences touch
// are supported: order 2, order 1 (where -log h replaces the pole), and
// nonpositive integer orders. Anything else throws std::domain_error.
double zeta_h(int order, double h);
double zeta_h_hurwitz(int order, double offset, double h);

}  // namespace nearquad
