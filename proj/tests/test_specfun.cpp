#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nearquad/specfun.hpp"
#include "reference_values.hpp"

using namespace nearquad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Sum of the moduli of the terms of sum_k C(n,k) B_k x^{n-k}: the rounding scale of B_n(x).
double bernoulli_term_scale(int n, double x) {
  double binom = 1.0;
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    total += binom * std::abs(bernoulli_number(k)) * std::pow(std::abs(x), n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("bernoulli numbers", "[specfun]") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(bernoulli_number(2) == 1.0 / 6.0);
  CHECK(bernoulli_number(3) == 0.0);
  for (int n = 0; n <= 64; ++n) {
    INFO("n = " << n);
    CHECK(bernoulli_number(n) == refvals::bernoulli[n]);
    if (n >= 3 && n % 2 == 1) CHECK(bernoulli_number(n) == 0.0);
  }
  CHECK_THROWS_AS(bernoulli_number(65), std::out_of_range);
  CHECK_THROWS_AS(bernoulli_number(-1), std::out_of_range);
}

TEST_CASE("bernoulli polynomials", "[specfun]") {
  CHECK_THAT(bernoulli_poly(1, 0.25), WithinAbs(-0.25, 1e-16));
  CHECK_THAT(bernoulli_poly(0, 3.7), WithinAbs(1.0, 0.0));
  CHECK_THAT(bernoulli_poly(2, 0.3), WithinAbs(0.09 - 0.3 + 1.0 / 6.0, 1e-16));
  CHECK_THAT(bernoulli_poly(5, 0.7), WithinRel(refvals::bernoulli_poly_5_0p7, 1e-14));
  CHECK_THAT(bernoulli_poly(16, 0.3), WithinRel(refvals::bernoulli_poly_16_0p3, 1e-13));
  for (int n = 0; n <= 20; ++n) CHECK(bernoulli_poly(n, 0.0) == bernoulli_number(n));
  CHECK_THROWS_AS(bernoulli_poly(33, 0.5), std::out_of_range);
}

TEST_CASE("bernoulli polynomial reflection and shift identities", "[specfun][property]") {
  const double x = GENERATE(take(25, random(0.0, 1.0)));
  for (int n = 1; n <= 16; ++n) {
    INFO("n = " << n << ", x = " << x);
    const double lhs = bernoulli_poly(n, 1.0 - x);
    const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * bernoulli_poly(n, x);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    const double shift = bernoulli_poly(n, 1.0 + x) - bernoulli_poly(n, x);
    const double want = n * std::pow(x, n - 1);
    CHECK(std::abs(shift - want) <= 8 * eps * bernoulli_term_scale(n, 1.0 + x));
  }
}

TEST_CASE("digamma special values", "[specfun]") {
  CHECK_THAT(digamma(Complex(1.0, 0.0)).real(), WithinRel(-euler_gamma, 4 * eps));
  CHECK(digamma(Complex(1.0, 0.0)).imag() == 0.0);
  CHECK_THAT(digamma(Complex(2.0, 0.0)).real(), WithinRel(1.0 - euler_gamma, 4 * eps));
  CHECK_THAT(digamma(0.5), WithinRel(-euler_gamma - 2.0 * std::numbers::ln2, 4 * eps));
  CHECK_THROWS_AS(digamma(Complex(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(digamma(Complex(-3.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(digamma(-2.0), std::domain_error);
}

TEST_CASE("digamma matches the high-precision table", "[specfun]") {
  for (const auto& c : refvals::digamma_cases) {
    INFO("z = " << c.z);
    const Complex got = digamma(c.z);
    CHECK(std::abs(got.real() - c.value.real()) <= 2 * eps * std::abs(c.value.real()));
    CHECK(std::abs(got.imag() - c.value.imag()) <= 2 * eps * std::abs(c.value.imag()));
    CHECK(rel_err(got, c.value) <= 2 * eps);
  }
}

TEST_CASE("digamma conjugate symmetry", "[specfun][property]") {
  const double x = GENERATE(take(40, random(0.25, 2.0)));
  const double y = GENERATE(1e-6, 0.37, 5.0, 123.0, 1e6);
  const Complex z(x, y);
  const Complex lhs = digamma(std::conj(z));
  const Complex rhs = std::conj(digamma(z));
  CHECK(std::abs(lhs - rhs) <= 4 * eps * std::abs(rhs));
}

TEST_CASE("digamma recurrence", "[specfun][property]") {
  const double x = GENERATE(take(40, random(0.25, 2.0)));
  const double y = GENERATE(0.0, 1e-3, 0.9, 11.0, 2e3, 1e6);
  const Complex z(x, y);
  const Complex defect = digamma(z + 1.0) - digamma(z) - 1.0 / z;
  CHECK(std::abs(defect) <= 1e-14 * std::max(1.0, std::abs(digamma(z + 1.0))));
}

TEST_CASE("trigamma", "[specfun]") {
  CHECK_THAT(trigamma(1.0), WithinRel(std::numbers::pi * std::numbers::pi / 6.0, 1e-15));
  CHECK_THAT(trigamma(0.5), WithinRel(std::numbers::pi * std::numbers::pi / 2.0, 1e-15));
  CHECK_THAT(trigamma(1.3), WithinRel(refvals::trigamma_1p3, 1e-14));
  CHECK_THAT(trigamma(0.05), WithinRel(refvals::trigamma_0p05, 1e-14));
  CHECK_THAT(trigamma(37.0), WithinRel(refvals::trigamma_37, 1e-14));
  CHECK_THROWS_AS(trigamma(0.0), std::domain_error);
  CHECK_THROWS_AS(trigamma(-1.5), std::domain_error);
}

TEST_CASE("trigamma recurrence", "[specfun][property]") {
  const double x = GENERATE(take(50, random(0.01, 30.0)));
  const double defect = trigamma(x) - trigamma(x + 1.0) - 1.0 / (x * x);
  CHECK(std::abs(defect) <= 1e-14 * trigamma(x));
}

TEST_CASE("hurwitz zeta at nonpositive orders", "[specfun]") {
  const double a = GENERATE(0.3, 1.0, 1.7);
  CHECK_THAT(hurwitz_zeta_nonpos(0, a), WithinAbs(0.5 - a, 1e-15));
  CHECK_THAT(hurwitz_zeta_nonpos(1, 1.0), WithinAbs(-1.0 / 12.0, 1e-16));
  CHECK_THAT(hurwitz_zeta_nonpos(3, 1.0), WithinAbs(1.0 / 120.0, 1e-16));
  CHECK_THAT(hurwitz_zeta_nonpos(2, 1.0), WithinAbs(0.0, 1e-16));
  CHECK_THROWS_AS(hurwitz_zeta_nonpos(32, 1.0), std::out_of_range);
}

TEST_CASE("hurwitz zeta reflection identity", "[specfun][property]") {
  for (double s = 0.05; s < 0.46; s += 0.05) {
    for (int k = 0; k <= 10; ++k) {
      INFO("s = " << s << ", k = " << k);
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      const double lhs = hurwitz_zeta_nonpos(k, 1.0 + s) + sign * hurwitz_zeta_nonpos(k, 1.0 - s);
      CHECK_THAT(lhs, WithinAbs(-std::pow(s, k), 1e-12));
    }
  }
}

TEST_CASE("modified zeta functions", "[specfun]") {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK_THAT(zeta_h(1, 0.01), WithinRel(euler_gamma + std::log(100.0), 1e-15));
  const double h = GENERATE(0.5, 0.01, 1e-4);
  CHECK_THAT(zeta_h_hurwitz(1, 1.0, h), WithinRel(euler_gamma - std::log(h), 1e-15));
  CHECK(zeta_h(2, h) == pi2_6);
  CHECK_THAT(zeta_h(0, h), WithinAbs(-0.5, 1e-16));
  CHECK_THAT(zeta_h(-1, h), WithinAbs(-1.0 / 12.0, 1e-16));
  CHECK_THAT(zeta_h_hurwitz(2, 1.25, h), WithinRel(trigamma(1.25), 1e-15));
  CHECK_THAT(zeta_h_hurwitz(1, 1.25, h), WithinRel(-digamma(1.25) - std::log(h), 1e-15));
  CHECK_THROWS_AS(zeta_h(3, h), std::domain_error);
  CHECK_THROWS_AS(zeta_h_hurwitz(4, 1.5, h), std::domain_error);
}
