#include "nearquad/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nearquad/emcoeff.hpp"

namespace nearquad {

namespace {

constexpr int kMinNodesPerHalf = 16;
constexpr int kEndpointMargin = 10;

Mesh checked_mesh(double a, double x_s, int n) {
  if (n < kMinNodesPerHalf) {
    throw std::invalid_argument("integrate: need n >= 16 nodes per half");
  }
  Mesh mesh(a, n);
  if (!(std::abs(x_s) < a - kEndpointMargin * mesh.h())) {
    throw std::invalid_argument("integrate: x_s too close to an endpoint (need |x_s| < a - 10h)");
  }
  return mesh;
}

GEval with_derivatives(const GEval& g, const Mesh& mesh, const Puncture& p, double x_s) {
  GEval out = g;
  if (static_cast<int>(out.derivs.size()) <= kFdSeriesOrder) {
    const auto fd = fd_derivatives_on_mesh(mesh, g.real, p.index, x_s);
    out.derivs.assign(fd.begin(), fd.end());
  }
  return out;
}

}  // namespace

void KernelParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("KernelParams: a must be > 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("KernelParams: c must be > 0");
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw std::invalid_argument("KernelParams: d must be >= 0 (negate the jump part for d < 0)");
  }
  if (!(std::abs(x_s) < a)) throw std::invalid_argument("KernelParams: need |x_s| < a");
}

Puncture locate_puncture(double x_s, double h) {
  const double t = x_s / h;
  const int index = static_cast<int>(std::ceil(t - 0.5));
  return {index, t - index};
}

QuadResult integrate_near_singular(const GEval& g, const KernelParams& params, int n,
                                   Method method, const EdgeScheme& edges) {
  params.validate();
  if (!g.real) throw std::invalid_argument("integrate: g needs a real evaluator");
  if (params.d == 0.0) {
    QuadResult r = integrate_finite_part(g, params.a, params.x_s, n, edges);
    const double scale = 1.0 / (params.c * params.c);
    r.uncorrected *= scale;
    r.breakdown.singular_part *= scale;
    r.breakdown.total = r.breakdown.singular_part;
    r.value = r.uncorrected + r.breakdown.total;
    r.warnings.push_back("d = 0: finite-part value, jump term omitted");
    return r;
  }
  const Mesh mesh = checked_mesh(params.a, params.x_s, n);
  const double h = mesh.h();
  const Puncture p = locate_puncture(params.x_s, h);
  const double c = params.c;
  const double d = params.d;
  const double x_s = params.x_s;

  const auto f = [&](double x) {
    const double u = x - x_s;
    return g.real(x) / (d * d + c * c * u * u);
  };
  const SampleSet samples = sample(mesh, f, p.index);

  QuadResult r;
  r.uncorrected = punctured_trapezoid(mesh, samples, p.index, edges);
  r.mesh = {mesh.a(), h, n, p.index, p.s, d / (c * h)};

  Method used = method;
  if (used == Method::automatic) {
    used = g.has_complex() ? Method::closed_form : Method::fd_series;
  }
  if (used == Method::closed_form) {
    r.breakdown = p.s == 0.0 ? correction_centered_closed(g, c, d, h, x_s)
                             : correction_offmesh_closed(g, c, d, h, p.s, x_s);
  } else {
    const GEval gd = with_derivatives(g, mesh, p, x_s);
    r.breakdown = correction_series_truncated(gd, c, d, h, p.s, kFdSeriesOrder);
    const double bound = significance_loss_bound(r.mesh.lambda, kFdSeriesOrder);
    if (bound > kConditioningWarning) {
      std::ostringstream os;
      os << "lambda = " << r.mesh.lambda << ": series coefficients carry rounding error up to "
         << bound;
      r.warnings.push_back(os.str());
    }
  }
  r.method = used;
  r.value = r.uncorrected + r.breakdown.total;
  return r;
}

QuadResult integrate_finite_part(const GEval& g, double a, double x_s, int n,
                                 const EdgeScheme& edges) {
  if (!(a > 0.0)) throw std::invalid_argument("integrate_finite_part: a must be > 0");
  if (!g.real) throw std::invalid_argument("integrate_finite_part: g needs a real evaluator");
  const Mesh mesh = checked_mesh(a, x_s, n);
  const double h = mesh.h();
  const Puncture p = locate_puncture(x_s, h);
  const auto f = [&](double x) {
    const double u = x - x_s;
    return g.real(x) / (u * u);
  };
  const SampleSet samples = sample(mesh, f, p.index);

  QuadResult r;
  r.uncorrected = punctured_trapezoid(mesh, samples, p.index, edges);
  r.mesh = {a, h, n, p.index, p.s, 0.0};
  const GEval gd = with_derivatives(g, mesh, p, x_s);
  const double e = hypersingular_offmesh(gd, h, p.s, x_s);
  r.breakdown = {e, 0.0, e, static_cast<int>(gd.derivs.size()), CorrectionMethod::closed_form};
  r.method = Method::closed_form;
  r.value = r.uncorrected + e;
  return r;
}

Baselines uncorrected_rules(const GEval& g, const KernelParams& params, int n,
                            const EdgeScheme& edges) {
  params.validate();
  const Mesh mesh = checked_mesh(params.a, params.x_s, n);
  const Puncture p = locate_puncture(params.x_s, mesh.h());
  const auto f = [&](double x) {
    const double u = x - params.x_s;
    return g.real(x) / (params.d * params.d + params.c * params.c * u * u);
  };
  const SampleSet samples = sample(mesh, f);
  Baselines b;
  b.punctured = punctured_trapezoid(mesh, samples, p.index, edges);
  b.plain = punctured_trapezoid(mesh, samples, std::nullopt, edges);
  return b;
}

SelfCheckReport self_check(const KernelParams& params, int n, int k_max) {
  params.validate();
  const Mesh mesh(params.a, n);
  const double h = mesh.h();
  const Puncture p = locate_puncture(params.x_s, h);
  SelfCheckReport rep;
  rep.lambda = params.d / (params.c * h);
  rep.s = p.s;
  rep.h = h;
  const CoeffParams cp{rep.lambda, p.s, h, k_max};

  for (int k = 0; k <= std::min(10, k_max); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double lhs = hurwitz_zeta_nonpos(k, 1.0 + p.s) + sign * hurwitz_zeta_nonpos(k, 1.0 - p.s);
    rep.reflection_max = std::max(rep.reflection_max, std::abs(lhs + std::pow(p.s, k)));
  }

  const CoeffTable t = coeff_table(cp);
  for (int k = 0; k <= k_max; ++k) {
    rep.pks_identity_max = std::max(rep.pks_identity_max, pks_identity_residual(t, k));
  }
  if (p.s != 0.0 || rep.lambda != 0.0) {
    const auto closed = pks_closed_form(cp);
    for (int k = 0; k <= k_max; ++k) {
      const double scale = std::max(1.0, std::abs(t.pks[k]));
      rep.closed_form_max = std::max(rep.closed_form_max, std::abs(closed[k] - t.pks[k]) / scale);
    }
  }
  rep.max_deviation = std::max({rep.reflection_max, rep.pks_identity_max, rep.closed_form_max});
  rep.p0 = t.pks[0];
  rep.p1 = k_max >= 1 ? t.pks[1] : 0.0;
  rep.loss_bound = t.loss_bound;

  for (int k = 0; k <= k_max; ++k) {
    if (t.loss_bound[k] > kConditioningWarning) {
      std::ostringstream os;
      os << "conditioning: lambda = " << rep.lambda << ", coefficients k >= " << k
         << " may lose accuracy (rounding bound " << t.loss_bound[k] << ")";
      rep.warnings.push_back(os.str());
      break;
    }
  }
  return rep;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::closed_form: return "closed-form";
    case Method::fd_series: return "fd-series";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "closed-form") return Method::closed_form;
  if (name == "fd-series") return Method::fd_series;
  throw std::invalid_argument("unknown method '" + name + "'");
}

}  // namespace nearquad
