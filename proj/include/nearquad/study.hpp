#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nearquad/emcoeff.hpp"
#include "nearquad/integrator.hpp"

#include "json.hpp"

namespace nearquad::study {

enum class Format { csv, json };

Format format_from_string(const std::string& name);

/// Named numerators g for custom studies and single evaluations:
/// one, x, x2, exp, cos, and dexp (d e^x, the numerator of the test integrals).
GEval numerator(const std::string& name, double d);

struct StudyConfig {
  std::vector<double> d_list;
  std::vector<int> n_list;
  double c = 1.0;
  double x_s = 0.0;
  double a = 1.0;
  std::string integrand = "test1";  // test1 | test2 | custom
  std::string numerator = "exp";    // used by custom
  std::vector<std::string> methods = {"corrected-closed", "uncorrected-plain"};
  std::string output;
  Format format = Format::csv;

  void validate() const;
};

struct ConvergenceRow {
  int n = 0;
  double h = 0.0;
  double d = 0.0;
  double c = 0.0;
  double x_s = 0.0;
  std::string method;
  double value = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
};

inline const std::vector<std::string> kStudyMethods = {
    "uncorrected-punctured", "uncorrected-plain", "corrected-closed", "corrected-fd6"};

/// One row per (d, n, method), sorted by (d, n, method).
std::vector<ConvergenceRow> run_convergence(const StudyConfig& config);

void write_rows(std::ostream& os, const std::vector<ConvergenceRow>& rows, Format format);

/// "16:256:*2" (geometric range, inclusive) or a comma-separated list.
std::vector<int> parse_n_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
std::vector<std::string> parse_list(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

struct CoeffRow {
  int k = 0;
  double zk = 0.0;
  double zks = 0.0;
  double zk_minus_s = 0.0;
  double pks = 0.0;
  double pks_closed = 0.0;       // NaN when s = lambda = 0
  double identity_residual = 0.0;
  double closed_residual = 0.0;  // NaN when s = lambda = 0
  double loss_bound = 0.0;
};

std::vector<CoeffRow> coefficient_rows(const CoeffParams& params);
void write_coeffs(std::ostream& os, const std::vector<CoeffRow>& rows, Format format);

nlohmann::json to_json(const QuadResult& r);

}  // namespace nearquad::study
