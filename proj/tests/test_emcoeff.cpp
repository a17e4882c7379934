#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nearquad/emcoeff.hpp"

using namespace nearquad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

bool close_rel(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("coefficient parameters are validated", "[emcoeff]") {
  CHECK_THROWS_AS(zk_table({-0.1, 0.0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(zks_table({0.5, 0.6, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(pks_table({0.5, 0.2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(pks_table({0.5, 0.2, 0.1, 40}), std::invalid_argument);
  CHECK_THROWS_AS(pks_closed_form({0.0, 0.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(fk_series_oracle(0, Complex(0.0, 1.2), 0.1), std::domain_error);
}

TEST_CASE("z_k basic relations", "[emcoeff]") {
  const double lambda = GENERATE(1e-3, 0.25, 0.5, 3.0);
  const double h = GENERATE(0.1, 0.01);
  const auto z = zk_table({lambda, 0.0, h});
  REQUIRE(z.size() == 13);
  CHECK_THAT(z[2] + lambda * lambda * z[0], WithinAbs(-0.5, 1e-15));
  CHECK_THAT(z[3] + lambda * lambda * z[1], WithinAbs(-1.0 / 12.0, 1e-14));
  CHECK(std::isfinite(z[12]));
}

TEST_CASE("z_k small-lambda limit", "[emcoeff]") {
  const auto z = zk_table({1e-6, 0.0, 0.01});
  CHECK_THAT(z[0], WithinRel(pi * pi / 6.0, 1e-11));
  CHECK_THAT(z[1], WithinRel(euler_gamma - std::log(0.01), 1e-11));
  const auto z0 = zk_table({0.0, 0.0, 0.01});
  CHECK(z0[0] == pi * pi / 6.0);
  CHECK_THAT(z0[1], WithinRel(euler_gamma - std::log(0.01), 1e-15));
  CHECK_THAT(z0[2], WithinAbs(-0.5, 1e-16));
  CHECK_THAT(std::real(fk_series_oracle(0, Complex(0.0, 1e-6), 0.01)), WithinRel(pi * pi / 6.0, 1e-11));
}

TEST_CASE("z_k recurrence against the rational zeta series", "[emcoeff]") {
  const double h = 0.01;
  const auto z = zk_table({0.5, 0.0, h, 10});
  for (int k = 0; k <= 10; ++k) {
    INFO("k = " << k);
    const Complex series = fk_series_oracle(k, Complex(0.0, 0.5), h);
    CHECK(close_rel(z[k], series.real(), 1e-12));
    CHECK(std::abs(series.imag()) <= 1e-15 * std::max(1.0, std::abs(series.real())));
  }
}

TEST_CASE("series oracle closed forms", "[emcoeff]") {
  const double h = 0.05;
  const Complex x(0.4, 0.0);
  const Complex f0 = fk_series_oracle(0, x, h);
  const Complex want0 = (digamma(1.0 + x) - digamma(1.0 - x)) / (2.0 * x);
  CHECK(std::abs(f0 - want0) <= 1e-13 * std::abs(want0));
  const Complex f2 = fk_series_oracle(2, x, h);
  CHECK(std::abs(f2 - x * x * f0 - (-0.5)) <= 1e-13);
  const double s = 0.2;
  const Complex z(0.3, 0.0);
  const Complex f1s = fks_series_oracle(1, z, s, h);
  const Complex want1s = -(digamma(1.0 + s + z) + digamma(1.0 + s - z)) / 2.0 - std::log(h);
  CHECK(std::abs(f1s - want1s) <= 1e-13 * std::abs(want1s));
}

TEST_CASE("z_{k,s} tables", "[emcoeff]") {
  const double h = 0.02;
  SECTION("s = 0 reproduces z_k") {
    const auto z = zk_table({0.7, 0.0, h});
    const auto zs = zks_table({0.7, 0.0, h});
    for (int k = 0; k <= 12; ++k) CHECK(close_rel(zs[k], z[k], 1e-15));
  }
  SECTION("recurrence against the shifted series") {
    const double lambda = 0.3;
    const double s = 0.25;
    const auto zs = zks_table({lambda, s, h});
    for (int k = 0; k <= 12; ++k) {
      INFO("k = " << k);
      CHECK(close_rel(zs[k], fks_series_oracle(k, Complex(0.0, lambda), s, h).real(), 1e-12));
    }
    CHECK_THAT(zs[2] + lambda * lambda * zs[0], WithinAbs(-0.5 - s, 1e-15));
  }
}

TEST_CASE("recurrences match series oracles on the convergence grid", "[emcoeff][property]") {
  const double h = 0.03;
  const double lambda = GENERATE(0.1, 0.5, 0.9);
  const double s = GENERATE(0.0, 0.2, -0.2, 0.45, -0.45);
  if (lambda >= 1.0 - std::abs(s)) SKIP("series diverges outside |z| < 1 - |s|");
  const auto t = coeff_table({lambda, s, h});
  const Complex z(0.0, lambda);
  for (int k = 0; k <= 12; ++k) {
    INFO("lambda = " << lambda << ", s = " << s << ", k = " << k);
    CHECK(close_rel(t.zk[k], fk_series_oracle(k, z, h).real(), 1e-12));
    CHECK(close_rel(t.zks[k], fks_series_oracle(k, z, s, h).real(), 1e-12));
    CHECK(close_rel(t.zk_minus_s[k], fks_series_oracle(k, z, -s, h).real(), 1e-12));
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double series_p = fks_series_oracle(k, z, -s, h).real() + sign * fks_series_oracle(k, z, s, h).real();
    CHECK(close_rel(t.pks[k], series_p, 1e-12));
  }
}

TEST_CASE("p_{k,s} identity with z_{k,-s} and z_{k,s}", "[emcoeff][property]") {
  const double lambda = GENERATE(0.1, 0.5, 0.9, 2.0);
  const double s = GENERATE(take(12, random(-0.5, 0.5)));
  const double h = GENERATE(0.1, 1.0 / 64.0);
  const auto t = coeff_table({lambda, s, h});
  for (int k = 0; k <= 12; ++k) {
    INFO("lambda = " << lambda << ", s = " << s << ", k = " << k);
    CHECK(pks_identity_residual(t, k) <= 1e-12);
  }
  if (lambda < 1.0) {
    for (int k = 0; k <= 12; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      CHECK(close_rel(t.pks[k], t.zk_minus_s[k] + sign * t.zks[k], 1e-12));
    }
  }
}

TEST_CASE("p_{k,s} closed form agrees with the recurrence", "[emcoeff][property]") {
  SECTION("reference point") {
    const CoeffParams p{0.7, 0.3, 0.01};
    const auto rec = pks_table(p);
    const auto closed = pks_closed_form(p);
    for (int k = 0; k <= 12; ++k) CHECK(close_rel(closed[k], rec[k], 1e-12));
  }
  SECTION("random points") {
    const double lambda = GENERATE(0.0, 0.1, 0.5, 0.9, 2.0);
    const double s = GENERATE(take(10, random(-0.5, 0.5)));
    const CoeffParams p{lambda, s, 0.05};
    const auto rec = pks_table(p);
    const auto closed = pks_closed_form(p);
    for (int k = 0; k <= 12; ++k) {
      INFO("lambda = " << lambda << ", s = " << s << ", k = " << k);
      CHECK(close_rel(closed[k], rec[k], 1e-12));
    }
  }
}

TEST_CASE("p_{1,s} does not depend on h", "[emcoeff][property]") {
  const double lambda = GENERATE(0.0, 0.1, 0.5, 2.0);
  const double s = GENERATE(take(10, random(-0.5, 0.5)));
  const double h = GENERATE(0.1, 0.01, 1e-3);
  const auto p1 = pks_table({lambda, s, h});
  const auto p2 = pks_table({lambda, s, 2.0 * h});
  CHECK_THAT(p1[1], WithinAbs(p2[1], 1e-13));
  const auto t = coeff_table({lambda, s, h});
  CHECK_THAT(t.zk_minus_s[1] - t.zks[1], WithinAbs(p1[1], 1e-13));
}

TEST_CASE("p_{k,s} limits", "[emcoeff]") {
  SECTION("s -> 0 gives (1 + (-1)^k) z_k") {
    const double lambda = GENERATE(0.2, 0.8);
    const auto p = pks_table({lambda, 1e-7, 0.01});
    const auto z = zk_table({lambda, 0.0, 0.01});
    for (int k = 0; k <= 12; ++k) {
      const double want = (k % 2 == 0 ? 2.0 : 0.0) * z[k];
      INFO("k = " << k);
      CHECK_THAT(p[k], WithinAbs(want, 1e-6 * std::max(1.0, std::abs(want))));
    }
    const auto p0 = pks_table({lambda, 0.0, 0.01});
    for (int k = 0; k <= 12; ++k) {
      CHECK(close_rel(p0[k], (k % 2 == 0 ? 2.0 : 0.0) * z[k], 1e-14));
    }
  }
  SECTION("lambda = 0, s = 1/2 gives pi^2 - 4 and 2") {
    const auto p = pks_table({0.0, 0.5, 0.01});
    CHECK_THAT(p[0], WithinAbs(pi * pi - 4.0, 1e-14));
    CHECK_THAT(p[1], WithinAbs(2.0, 1e-15));
  }
  SECTION("lambda -> 0 reproduces trigamma and digamma sums") {
    const double s = GENERATE(0.05, 0.2, 0.35, 0.5, -0.3);
    const auto p = pks_table({1e-6, s, 0.01});
    CHECK_THAT(p[0], WithinRel(trigamma(1.0 - s) + trigamma(1.0 + s), 1e-11));
    CHECK_THAT(p[1], WithinAbs(-digamma(1.0 - s) + digamma(1.0 + s), 1e-11));
  }
}

TEST_CASE("loss-of-significance bound", "[emcoeff]") {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  CHECK(significance_loss_bound(10.0, 0) == eps);
  CHECK(significance_loss_bound(10.0, 1) == eps);
  CHECK_THAT(significance_loss_bound(10.0, 6), WithinRel(1e6 * eps, 1e-15));
  CHECK_THAT(significance_loss_bound(10.0, 7), WithinRel(1e6 * eps, 1e-15));
  CHECK(significance_loss_bound(0.5, 12) < eps);
  const auto t = coeff_table({10.0, 0.0, 0.01});
  for (int k = 0; k <= 12; ++k) CHECK(t.loss_bound[k] == significance_loss_bound(10.0, k));
}

TEST_CASE("all coefficients are finite real numbers", "[emcoeff][property]") {
  const double lambda = GENERATE(0.0, 1e-8, 0.3, 5.0, 1e4);
  const double s = GENERATE(take(6, random(-0.5, 0.5)));
  const auto t = coeff_table({lambda, s, 1.0 / 64.0});
  for (int k = 0; k <= 12; ++k) {
    CHECK(std::isfinite(t.zk[k]));
    CHECK(std::isfinite(t.zks[k]));
    CHECK(std::isfinite(t.zk_minus_s[k]));
    CHECK(std::isfinite(t.pks[k]));
  }
}

TEST_CASE("hurwitz zeta at positive orders", "[emcoeff]") {
  CHECK_THAT(hurwitz_zeta_positive(2, 1.0), WithinRel(pi * pi / 6.0, 1e-15));
  CHECK_THAT(hurwitz_zeta_positive(4, 1.0), WithinRel(std::pow(pi, 4) / 90.0, 1e-15));
  CHECK_THAT(hurwitz_zeta_positive(2, 0.5), WithinRel(pi * pi / 2.0, 1e-15));
  const double a = GENERATE(take(10, random(0.5, 1.5)));
  CHECK_THAT(hurwitz_zeta_positive(2, a), WithinRel(trigamma(a), 1e-14));
  CHECK_THROWS_AS(hurwitz_zeta_positive(1, 1.0), std::domain_error);
}
