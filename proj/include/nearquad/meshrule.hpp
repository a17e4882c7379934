#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace nearquad {

/// Uniform mesh on [-a, a] with nodes x_k = k h, k = -n..n, h = a/n.
class Mesh {
 public:
  Mesh(double a, int n);

  double a() const { return a_; }
  int n() const { return n_; }
  double h() const { return h_; }
  int size() const { return 2 * n_ + 1; }

  double node(int k) const { return k * h_; }
  std::vector<double> nodes() const;

  /// Position of node k in a sample vector (k = -n maps to 0).
  int slot(int k) const { return k + n_; }
  bool contains(int k) const { return k >= -n_ && k <= n_; }

 private:
  double a_;
  int n_;
  double h_;
};

enum class EdgeKind { bernoulli, gregory };

/// How the trapezoidal sum is corrected at x = -a and x = a.
///
/// Bernoulli: classical Euler-Maclaurin terms through B_order times odd
/// derivatives of f at the ends; order in {2, 4, ..., 16}.
/// Gregory: `order` boundary-weight adjustments at each end; order in 2..10.
struct EdgeScheme {
  EdgeKind kind = EdgeKind::gregory;
  int order = 10;

  static EdgeScheme gregory(int order) { return {EdgeKind::gregory, order}; }
  static EdgeScheme bernoulli(int order) { return {EdgeKind::bernoulli, order}; }

  void validate() const;
};

/// Derivatives f^{(m)} at the two endpoints, indexed by m.
struct EndpointDerivatives {
  std::vector<double> left;
  std::vector<double> right;
};

/// Values of the full integrand at every mesh node, ordered k = -n..n. The
/// punctured node may hold NaN. Endpoint derivatives are only consulted by
/// the Bernoulli scheme; when absent they are estimated from the outermost
/// ten samples.
struct SampleSet {
  std::vector<double> values;
  std::optional<EndpointDerivatives> endpoint_derivatives;
};

SampleSet sample(const Mesh& mesh, const std::function<double(double)>& f,
                 std::optional<int> skip = std::nullopt);

/// Gregory end weights w_0..w_{order-1}. They are added to the trapezoid
/// weights at x = -a + j h (and mirrored at x = a - j h), making the rule
/// exact for polynomials of degree < order.
const std::vector<double>& gregory_weights(int order);

/// Edge corrections C_h^{-a} and C_h^{a}, including the -f(+-a) h / 2 terms.
double edge_correction_left(const Mesh& mesh, const SampleSet& samples,
                            const EdgeScheme& scheme);
double edge_correction_right(const Mesh& mesh, const SampleSet& samples,
                             const EdgeScheme& scheme);

/// The punctured rule split as L_h (k < 0), the centre node k = 0 and R_h
/// (k > 0). With the puncture at k = 0 the centre is zero and T_h = L_h + R_h.
struct HalfSums {
  double left = 0.0;
  double centre = 0.0;
  double right = 0.0;

  double total() const { return left + centre + right; }
};

HalfSums half_sums(const Mesh& mesh, const SampleSet& samples, std::optional<int> puncture,
                   const EdgeScheme& scheme = {});

/// Edge-corrected trapezoidal sum over all nodes except `puncture`. Without a
/// puncture this is the ordinary corrected trapezoidal rule.
double punctured_trapezoid(const Mesh& mesh, const SampleSet& samples,
                           std::optional<int> puncture, const EdgeScheme& scheme = {});

/// Trapezoidal rule on the nodes (k + s) h, k = -n..n, with edge corrections
/// at the shifted endpoints -a + s h and a + s h. By default the node k = 0
/// (x = s h) is omitted, so s = 0 reproduces punctured_trapezoid.
double shifted_trapezoid(const Mesh& mesh, const std::function<double(double)>& f, double s,
                         const EdgeScheme& scheme = {},
                         std::optional<int> puncture = 0);

}  // namespace nearquad
