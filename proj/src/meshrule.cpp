#include "nearquad/meshrule.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nearquad/finite_difference.hpp"
#include "nearquad/specfun.hpp"

namespace nearquad {

namespace {

constexpr int kEndpointStencil = 10;

std::vector<double> compute_gregory_weights(int order) {
  // w_j = L(l_j), with l_j the Lagrange basis on nodes 0..order-1 and L the
  // left-end Euler-Maclaurin functional: L(x^m) = B_{m+1}/(m+1) for odd m, 0
  // otherwise.
  std::vector<double> w(order, 0.0);
  for (int j = 0; j < order; ++j) {
    std::vector<long double> poly{1.0L};
    long double denom = 1.0L;
    for (int i = 0; i < order; ++i) {
      if (i == j) continue;
      std::vector<long double> next(poly.size() + 1, 0.0L);
      for (std::size_t m = 0; m < poly.size(); ++m) {
        next[m + 1] += poly[m];
        next[m] -= i * poly[m];
      }
      poly = std::move(next);
      denom *= static_cast<long double>(j - i);
    }
    long double acc = 0.0L;
    for (std::size_t m = 1; m < poly.size(); m += 2) {
      acc += poly[m] * static_cast<long double>(bernoulli_number(static_cast<int>(m) + 1)) /
             static_cast<long double>(m + 1);
    }
    w[j] = static_cast<double>(acc / denom);
  }
  return w;
}

void require_sample(const SampleSet& samples, int slot) {
  if (!std::isfinite(samples.values[slot])) {
    throw std::invalid_argument("trapezoid: missing or non-finite sample at slot " +
                                std::to_string(slot));
  }
}

void require_length(const Mesh& mesh, const SampleSet& samples) {
  if (static_cast<int>(samples.values.size()) != mesh.size()) {
    throw std::invalid_argument("trapezoid: sample count does not match mesh");
  }
}

// Odd derivatives f^{(1)}, f^{(3)}, ... at one end, from the caller or from
// the degree-9 interpolant through the ten outermost samples.
std::vector<double> end_derivatives(const Mesh& mesh, const SampleSet& samples, bool right,
                                    int max_order) {
  if (samples.endpoint_derivatives) {
    const auto& d = right ? samples.endpoint_derivatives->right : samples.endpoint_derivatives->left;
    if (static_cast<int>(d.size()) <= max_order) {
      throw std::invalid_argument("edge correction: too few endpoint derivatives supplied");
    }
    return d;
  }
  if (mesh.size() < kEndpointStencil) {
    throw std::invalid_argument("edge correction: mesh too small for endpoint stencil");
  }
  std::array<double, kEndpointStencil> x{};
  std::array<double, kEndpointStencil> y{};
  for (int i = 0; i < kEndpointStencil; ++i) {
    const int k = right ? mesh.n() - i : -mesh.n() + i;
    require_sample(samples, mesh.slot(k));
    x[i] = mesh.node(k);
    y[i] = samples.values[mesh.slot(k)];
  }
  const double x0 = right ? mesh.a() : -mesh.a();
  auto d = interpolant_derivatives(x, y, x0, std::min(max_order, kEndpointStencil - 1));
  d.resize(max_order + 1, 0.0);
  return d;
}

double edge_correction(const Mesh& mesh, const SampleSet& samples, const EdgeScheme& scheme,
                       bool right) {
  scheme.validate();
  require_length(mesh, samples);
  const double h = mesh.h();
  const int end = right ? mesh.n() : -mesh.n();
  const int inward = right ? -1 : 1;
  require_sample(samples, mesh.slot(end));
  double c = -0.5 * samples.values[mesh.slot(end)] * h;

  if (scheme.kind == EdgeKind::gregory) {
    const auto& w = gregory_weights(scheme.order);
    if (static_cast<int>(w.size()) > mesh.size()) {
      throw std::invalid_argument("edge correction: mesh too small for Gregory order");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const int slot = mesh.slot(end + inward * static_cast<int>(j));
      require_sample(samples, slot);
      acc += w[j] * samples.values[slot];
    }
    return c + acc * h;
  }

  const auto d = end_derivatives(mesh, samples, right, scheme.order - 1);
  // C^{a} = -f(a)h/2 - sum B_2k/(2k)! f^(2k-1)(a) h^2k; the left end flips sign.
  const double sign = right ? -1.0 : 1.0;
  double factorial = 1.0;
  double hpow = 1.0;
  for (int k = 1; 2 * k <= scheme.order; ++k) {
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    hpow *= h * h;
    c += sign * bernoulli_number(2 * k) / factorial * d[2 * k - 1] * hpow;
  }
  return c;
}

}  // namespace

Mesh::Mesh(double a, int n) : a_(a), n_(n), h_(a / n) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("Mesh: half-width must be positive and finite");
  }
  if (n < 1) {
    throw std::invalid_argument("Mesh: need at least one node per half");
  }
}

std::vector<double> Mesh::nodes() const {
  std::vector<double> x(size());
  for (int k = -n_; k <= n_; ++k) x[slot(k)] = node(k);
  return x;
}

void EdgeScheme::validate() const {
  if (kind == EdgeKind::gregory) {
    if (order < 2 || order > 10) {
      throw std::invalid_argument("EdgeScheme: Gregory order must lie in 2..10");
    }
  } else if (order < 2 || order > 16 || order % 2 != 0) {
    throw std::invalid_argument("EdgeScheme: Bernoulli order must be even, 2..16");
  }
}

SampleSet sample(const Mesh& mesh, const std::function<double(double)>& f,
                 std::optional<int> skip) {
  SampleSet s;
  s.values.resize(mesh.size());
  for (int k = -mesh.n(); k <= mesh.n(); ++k) {
    s.values[mesh.slot(k)] = (skip && *skip == k) ? std::nan("") : f(mesh.node(k));
  }
  return s;
}

const std::vector<double>& gregory_weights(int order) {
  if (order < 2 || order > 10) {
    throw std::invalid_argument("gregory_weights: order must lie in 2..10");
  }
  static const std::array<std::vector<double>, 11> table = [] {
    std::array<std::vector<double>, 11> t;
    for (int q = 2; q <= 10; ++q) t[q] = compute_gregory_weights(q);
    return t;
  }();
  return table[order];
}

double edge_correction_left(const Mesh& mesh, const SampleSet& samples,
                            const EdgeScheme& scheme) {
  return edge_correction(mesh, samples, scheme, false);
}

double edge_correction_right(const Mesh& mesh, const SampleSet& samples,
                             const EdgeScheme& scheme) {
  return edge_correction(mesh, samples, scheme, true);
}

HalfSums half_sums(const Mesh& mesh, const SampleSet& samples, std::optional<int> puncture,
                   const EdgeScheme& scheme) {
  require_length(mesh, samples);
  if (puncture && !mesh.contains(*puncture)) {
    throw std::invalid_argument("trapezoid: puncture index outside mesh");
  }
  const double h = mesh.h();
  auto partial = [&](int lo, int hi) {
    double acc = 0.0;
    for (int k = lo; k <= hi; ++k) {
      if (puncture && *puncture == k) continue;
      require_sample(samples, mesh.slot(k));
      acc += samples.values[mesh.slot(k)];
    }
    return acc * h;
  };
  HalfSums out;
  out.left = partial(-mesh.n(), -1) + edge_correction_left(mesh, samples, scheme);
  out.right = partial(1, mesh.n()) + edge_correction_right(mesh, samples, scheme);
  out.centre = partial(0, 0);
  return out;
}

double punctured_trapezoid(const Mesh& mesh, const SampleSet& samples,
                           std::optional<int> puncture, const EdgeScheme& scheme) {
  return half_sums(mesh, samples, puncture, scheme).total();
}

double shifted_trapezoid(const Mesh& mesh, const std::function<double(double)>& f, double s,
                         const EdgeScheme& scheme, std::optional<int> puncture) {
  if (!(std::abs(s) <= 0.5)) {
    throw std::invalid_argument("shifted_trapezoid: shift must satisfy |s| <= 1/2");
  }
  const double offset = s * mesh.h();
  SampleSet samples;
  samples.values.resize(mesh.size());
  for (int k = -mesh.n(); k <= mesh.n(); ++k) {
    if (puncture && *puncture == k) {
      samples.values[mesh.slot(k)] = std::nan("");
      continue;
    }
    const double y = f(mesh.node(k) + offset);
    if (!std::isfinite(y)) {
      throw std::runtime_error("shifted_trapezoid: evaluator returned a non-finite value");
    }
    samples.values[mesh.slot(k)] = y;
  }
  return punctured_trapezoid(mesh, samples, puncture, scheme);
}

}  // namespace nearquad
