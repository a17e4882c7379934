#pragma once

#include <string>
#include <vector>

#include "nearquad/corrections.hpp"
#include "nearquad/meshrule.hpp"

namespace nearquad {

/// Kernel 1 / (d^2 + c^2 (x - x_s)^2) on [-a, a].
struct KernelParams {
  double a = 1.0;
  double c = 1.0;
  double d = 0.0;
  double x_s = 0.0;

  void validate() const;
};

enum class Method { automatic, closed_form, fd_series };

/// Nearest node to x_s and the off-mesh fraction s = x_s/h - index, with
/// s in (-1/2, 1/2]. A tie at s = 1/2 goes to the left node.
struct Puncture {
  int index = 0;
  double s = 0.0;
};

Puncture locate_puncture(double x_s, double h);

struct MeshSummary {
  double a = 0.0;
  double h = 0.0;
  int n = 0;
  int puncture = 0;
  double s = 0.0;
  double lambda = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double uncorrected = 0.0;
  CorrectionBreakdown breakdown;
  MeshSummary mesh;
  Method method = Method::automatic;
  std::vector<std::string> warnings;
};

/// Number of derivatives of g used by the finite-difference correction.
inline constexpr int kFdSeriesOrder = 6;

/// Punctured trapezoidal rule for the near-singular integral plus the
/// Euler-Maclaurin correction. `automatic` uses the closed form when g has a
/// complex evaluator and the truncated series with finite-difference
/// derivatives otherwise. d = 0 is routed to integrate_finite_part (scaled by
/// 1/c^2).
QuadResult integrate_near_singular(const GEval& g, const KernelParams& params, int n,
                                   Method method = Method::automatic,
                                   const EdgeScheme& edges = {});

/// Hadamard finite part of the integral of g(x) / (x - x_s)^2 over [-a, a].
QuadResult integrate_finite_part(const GEval& g, double a, double x_s, int n,
                                 const EdgeScheme& edges = {});

/// The two uncorrected baselines: the punctured rule and the ordinary rule
/// that keeps the node nearest x_s.
struct Baselines {
  double punctured = 0.0;
  double plain = 0.0;
};

Baselines uncorrected_rules(const GEval& g, const KernelParams& params, int n,
                            const EdgeScheme& edges = {});

struct SelfCheckReport {
  double lambda = 0.0;
  double s = 0.0;
  double h = 0.0;
  double reflection_max = 0.0;       // zeta(-k,1+s) + (-1)^k zeta(-k,1-s) + s^k, k <= 10
  double pks_identity_max = 0.0; // p_{k,s} vs z_{k,-s} + (-1)^k z_{k,s}, relative
  double closed_form_max = 0.0;  // closed form vs recurrence for p_{k,s}, relative
  double max_deviation = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  std::vector<double> loss_bound;
  std::vector<std::string> warnings;
};

/// Threshold on significance_loss_bound above which self_check warns.
inline constexpr double kConditioningWarning = 1e-11;

/// Runs the coefficient identity checks at the (lambda, s, h) implied by
/// params and n.
SelfCheckReport self_check(const KernelParams& params, int n, int k_max = 12);

std::string to_string(Method m);
Method method_from_string(const std::string& name);

}  // namespace nearquad
