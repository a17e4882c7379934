#include "nearquad/finite_difference.hpp"

#include <stdexcept>

namespace nearquad {

std::vector<std::vector<double>> fd_weights(std::span<const double> nodes, double x0,
                                            int max_order) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0 || max_order < 0) {
    throw std::invalid_argument("fd_weights: need at least one node and max_order >= 0");
  }
  std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

std::vector<double> interpolant_derivatives(std::span<const double> nodes,
                                            std::span<const double> values, double x0,
                                            int max_order) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("interpolant_derivatives: nodes and values differ in length");
  }
  const auto w = fd_weights(nodes, x0, max_order);
  std::vector<double> out(max_order + 1, 0.0);
  for (int k = 0; k <= max_order; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      acc += w[k][i] * values[i];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace nearquad
