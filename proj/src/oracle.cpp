#include "nearquad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace nearquad {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool at_floor;

  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double abs_sum = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double floor = 8.0 * kEps * abs_sum * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  const bool at_floor = error <= floor || !(hi - lo > 4.0 * kEps * std::max(std::abs(lo), std::abs(hi)));
  if (at_floor) error = std::min(error, floor);
  return {lo, hi, value, error, at_floor};
}


Complex ei_series(Complex z) {
  Complex term = 1.0;
  Complex sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= z / static_cast<double>(k);
    const Complex add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return euler_gamma + std::log(z) + sum;
}

// E1(w) by the continued fraction, for Re w > 0.
Complex e1_continued_fraction(Complex w) {
  const double tiny = 1e-300;
  Complex b = w + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h * std::exp(-w);
}

Complex ei_asymptotic(Complex z) {
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const Complex next = term * static_cast<double>(k) / z;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  const double branch = z.imag() > 0.0 ? 1.0 : (z.imag() < 0.0 ? -1.0 : 0.0);
  return std::exp(z) / z * sum + Complex(0.0, branch * std::numbers::pi);
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

ReferenceResult adaptive_integrate(const std::function<double(double)>& f,
                                   const std::vector<double>& breakpoints, double tol,
                                   long max_evaluations) {
  if (breakpoints.size() < 2 || !std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw std::invalid_argument("adaptive_integrate: need sorted breakpoints including both ends");
  }
  std::priority_queue<Panel> active;
  ReferenceResult out;
  double settled_value = 0.0;
  double settled_error = 0.0;
  double active_error = 0.0;
  auto push = [&](const Panel& p) {
    out.evaluations += 15;
    if (!std::isfinite(p.value) || !std::isfinite(p.error)) {
      throw std::domain_error("adaptive_integrate: integrand is not finite on the panel");
    }
    if (p.at_floor) {
      settled_value += p.value;
      settled_error += p.error;
    } else {
      active.push(p);
      active_error += p.error;
    }
  };
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) push(gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]));
  }
  while (!active.empty() && settled_error + active_error > tol) {
    if (out.evaluations >= max_evaluations) {
      throw std::runtime_error("adaptive_integrate: tolerance unreachable within evaluation budget");
    }
    const Panel worst = active.top();
    active.pop();
    active_error -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    push(gauss_kronrod(f, worst.lo, mid));
    push(gauss_kronrod(f, mid, worst.hi));
  }
  double active_value = 0.0;
  active_error = 0.0;
  while (!active.empty()) {
    active_value += active.top().value;
    active_error += active.top().error;
    active.pop();
  }
  out.value = settled_value + active_value;
  out.est_error = settled_error + active_error;
  if (out.est_error > tol) {
    throw std::runtime_error("adaptive_integrate: rounding floor exceeds requested tolerance");
  }
  return out;
}

ReferenceResult reference_integral(const GEval& g, const KernelParams& params, double tol) {
  params.validate();
  if (!(params.d > 0.0)) throw std::invalid_argument("reference_integral: need d > 0");
  if (!(tol >= 1e-14)) throw std::invalid_argument("reference_integral: tol must be >= 1e-14");
  const double a = params.a;
  const double width = params.d / params.c;
  // Work in u = x - x_s so the peak sits at an exactly representable point.
  const double lo = -a - params.x_s;
  const double hi = a - params.x_s;
  std::vector<double> cuts = {lo, 0.0, hi};
  for (double w = width; w < 2.0 * a; w *= 4.0) {
    for (double u : {-w, w}) {
      if (u > lo && u < hi) cuts.push_back(u);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double c2 = params.c * params.c;
  const double d2 = params.d * params.d;
  const auto f = [&](double u) { return g.real(params.x_s + u) / (d2 + c2 * u * u); };
  const double l1 =
      adaptive_integrate([&](double u) { return std::abs(f(u)); }, cuts, 1e-6 * (1.0 + std::abs(f(0.0)) * width)).value;
  return adaptive_integrate(f, cuts, tol * std::max(1.0, l1));
}

Complex complex_ei(Complex z) {
  if (z == Complex(0.0, 0.0)) throw std::domain_error("complex_ei: logarithmic singularity at 0");
  const double r = std::abs(z);
  if (r <= 4.0 || (z.real() >= 0.0 && r <= 40.0)) return ei_series(z);
  if (z.real() < 0.0) {
    return -e1_continued_fraction(-z) + Complex(0.0, sign_of(z.imag()) * std::numbers::pi);
  }
  return ei_asymptotic(z);
}

double exact_test1(double d) { return exact_test2(d, 1.0, 0.0); }

double exact_test2(double d, double c, double x_s) {
  if (d == 0.0) throw std::domain_error("exact_test: d = 0 (the one-sided limits are +-pi)");
  if (!(c > 0.0)) throw std::invalid_argument("exact_test: c must be positive");
  const double delta = d / c;
  const Complex shift(0.0, -delta);
  const Complex diff = complex_ei(1.0 - x_s + shift) - complex_ei(-1.0 - x_s + shift);
  return std::exp(x_s) / c * (std::exp(Complex(0.0, delta)) * diff).imag();
}

double finite_part_reference(const GEval& g, double a, double x_s, double tol,
                             double contour_radius) {
  if (!g.has_complex()) throw std::invalid_argument("finite_part_reference: needs complex g");
  if (!(std::abs(x_s) < a)) throw std::invalid_argument("finite_part_reference: need |x_s| < a");
  constexpr int kContourPoints = 64;
  const double rho = contour_radius;
  std::array<Complex, kContourPoints> circle{};
  std::array<Complex, kContourPoints> values{};
  for (int m = 0; m < kContourPoints; ++m) {
    circle[m] = std::polar(rho, 2.0 * std::numbers::pi * m / kContourPoints);
    values[m] = g.complex(x_s + circle[m]);
  }
  const double g0 = g.real(x_s);
  Complex acc = 0.0;
  for (int m = 0; m < kContourPoints; ++m) acc += values[m] / circle[m];
  const double g1 = acc.real() / kContourPoints;

  // (g(x_s+u) - g(x_s) - g'(x_s) u) / u^2 as a Cauchy integral when |u| is small.
  const auto remainder = [&](double x) {
    const double u = x - x_s;
    if (std::abs(u) < 0.5 * rho) {
      Complex sum = 0.0;
      for (int m = 0; m < kContourPoints; ++m) sum += values[m] / (circle[m] * (circle[m] - u));
      return sum.real() / kContourPoints;
    }
    return (g.real(x) - g0 - g1 * u) / (u * u);
  };
  const double smooth = adaptive_integrate(remainder, {-a, x_s, a}, tol).value;
  return smooth + g0 * (-1.0 / (a - x_s) - 1.0 / (a + x_s)) + g1 * std::log((a - x_s) / (a + x_s));
}

}  // namespace nearquad
