#include "nearquad/study.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "nearquad/oracle.hpp"

namespace nearquad::study {

namespace {

double parse_real(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != str.size()) {
    throw std::invalid_argument("not a number: '" + str + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double json_real(double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

GEval numerator(const std::string& name, double d) {
  GEval g;
  if (name == "one") {
    g.real = [](double) { return 1.0; };
    g.complex = [](Complex) { return Complex(1.0, 0.0); };
  } else if (name == "x") {
    g.real = [](double x) { return x; };
    g.complex = [](Complex z) { return z; };
  } else if (name == "x2") {
    g.real = [](double x) { return x * x; };
    g.complex = [](Complex z) { return z * z; };
  } else if (name == "exp") {
    g.real = [](double x) { return std::exp(x); };
    g.complex = [](Complex z) { return std::exp(z); };
  } else if (name == "cos") {
    g.real = [](double x) { return std::cos(x); };
    g.complex = [](Complex z) { return std::cos(z); };
  } else if (name == "dexp") {
    g.real = [d](double x) { return d * std::exp(x); };
    g.complex = [d](Complex z) { return d * std::exp(z); };
  } else {
    throw std::invalid_argument("unknown numerator '" + name + "'");
  }
  return g;
}

void StudyConfig::validate() const {
  if (d_list.empty() || n_list.empty() || methods.empty()) {
    throw std::invalid_argument("study: d, n and method lists must be nonempty");
  }
  if (integrand != "test1" && integrand != "test2" && integrand != "custom") {
    throw std::invalid_argument("study: integrand must be test1, test2 or custom");
  }
  for (const auto& m : methods) {
    if (std::find(kStudyMethods.begin(), kStudyMethods.end(), m) == kStudyMethods.end()) {
      throw std::invalid_argument("study: unknown method '" + m + "'");
    }
  }
  for (double d : d_list) {
    if (!(d > 0.0)) throw std::invalid_argument("study: every d must be positive");
  }
  if (integrand == "test1" || integrand == "test2") {
    if (a != 1.0) throw std::invalid_argument("study: the test integrals are posed on [-1, 1]");
  }
  KernelParams{a, c, d_list.front(), integrand == "test1" ? 0.0 : x_s}.validate();
  if (integrand == "custom") study::numerator(numerator, 1.0);
}

std::vector<ConvergenceRow> run_convergence(const StudyConfig& config) {
  config.validate();
  const bool test1 = config.integrand == "test1";
  const double c = test1 ? 1.0 : config.c;
  const double x_s = test1 ? 0.0 : config.x_s;

  std::vector<ConvergenceRow> rows;
  for (double d : config.d_list) {
    const KernelParams params{config.a, c, d, x_s};
    const GEval g = numerator(config.integrand == "custom" ? config.numerator : "dexp", d);
    double reference = 0.0;
    if (test1) {
      reference = exact_test1(d);
    } else if (config.integrand == "test2") {
      reference = exact_test2(d, c, x_s);
    } else {
      reference = reference_integral(g, params).value;
    }
    for (int n : config.n_list) {
      const double h = config.a / n;
      std::optional<Baselines> base;
      for (const auto& m : config.methods) {
        double value = 0.0;
        if (m == "uncorrected-punctured" || m == "uncorrected-plain") {
          if (!base) base = uncorrected_rules(g, params, n);
          value = m == "uncorrected-plain" ? base->plain : base->punctured;
        } else if (m == "corrected-closed") {
          value = integrate_near_singular(g, params, n, Method::closed_form).value;
        } else {
          value = integrate_near_singular(g, params, n, Method::fd_series).value;
        }
        rows.push_back({n, h, d, c, x_s, m, value, reference, std::abs(value - reference)});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ConvergenceRow& l, const ConvergenceRow& r) {
    return std::tie(l.d, l.n, l.method) < std::tie(r.d, r.n, r.method);
  });
  return rows;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

void write_rows(std::ostream& os, const std::vector<ConvergenceRow>& rows, Format format) {
  if (format == Format::csv) {
    os << "n,h,d,c,xs,method,value,reference,abs_err\n";
    for (const auto& r : rows) {
      os << r.n << ',' << format_real(r.h) << ',' << format_real(r.d) << ',' << format_real(r.c)
         << ',' << format_real(r.x_s) << ',' << r.method << ',' << format_real(r.value) << ','
         << format_real(r.reference) << ',' << format_real(r.abs_err) << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"h", r.h},
                   {"d", r.d},
                   {"c", r.c},
                   {"xs", r.x_s},
                   {"method", r.method},
                   {"value", r.value},
                   {"reference", r.reference},
                   {"abs_err", r.abs_err}});
  }
  os << arr.dump(2) << '\n';
}

std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> out;
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const int start = parse_int(colon[0]);
    const int stop = parse_int(colon[1]);
    std::string_view step = colon[2];
    if (step.empty() || step.front() != '*') {
      throw std::invalid_argument("n range step must look like '*factor'");
    }
    const int factor = parse_int(step.substr(1));
    if (start < 1 || factor < 2 || stop < start) {
      throw std::invalid_argument("n range needs 1 <= start <= stop and factor >= 2");
    }
    for (long n = start; n <= stop; n *= factor) out.push_back(static_cast<int>(n));
    return out;
  }
  if (colon.size() != 1) throw std::invalid_argument("malformed n list '" + std::string(text) + "'");
  for (auto part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<std::string> parse_list(std::string_view text) {
  std::vector<std::string> out;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    out.emplace_back(part);
  }
  return out;
}

std::vector<CoeffRow> coefficient_rows(const CoeffParams& params) {
  const CoeffTable t = coeff_table(params);
  const bool has_closed = params.s != 0.0 || params.lambda != 0.0;
  std::vector<double> closed;
  if (has_closed) closed = pks_closed_form(params);
  std::vector<CoeffRow> rows;
  for (int k = 0; k <= params.k_max; ++k) {
    const double scale = std::max(1.0, std::abs(t.pks[k]));
    CoeffRow r;
    r.k = k;
    r.zk = t.zk[k];
    r.zks = t.zks[k];
    r.zk_minus_s = t.zk_minus_s[k];
    r.pks = t.pks[k];
    r.identity_residual = pks_identity_residual(t, k);
    r.pks_closed = has_closed ? closed[k] : std::numeric_limits<double>::quiet_NaN();
    r.closed_residual = has_closed ? std::abs(closed[k] - t.pks[k]) / scale
                                   : std::numeric_limits<double>::quiet_NaN();
    r.loss_bound = t.loss_bound[k];
    rows.push_back(r);
  }
  return rows;
}

void write_coeffs(std::ostream& os, const std::vector<CoeffRow>& rows, Format format) {
  if (format == Format::csv) {
    os << "k,zk,zks,zk_minus_s,pks,pks_closed,identity_residual,closed_residual,loss_bound\n";
    for (const auto& r : rows) {
      os << r.k << ',' << format_real(r.zk) << ',' << format_real(r.zks) << ','
         << format_real(r.zk_minus_s) << ',' << format_real(r.pks) << ','
         << format_real(r.pks_closed) << ',' << format_real(r.identity_residual) << ','
         << format_real(r.closed_residual) << ',' << format_real(r.loss_bound) << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"k", r.k},
                   {"zk", r.zk},
                   {"zks", r.zks},
                   {"zk_minus_s", r.zk_minus_s},
                   {"pks", r.pks},
                   {"pks_closed", json_real(r.pks_closed)},
                   {"identity_residual", r.identity_residual},
                   {"closed_residual", json_real(r.closed_residual)},
                   {"loss_bound", r.loss_bound}});
  }
  os << arr.dump(2) << '\n';
}

nlohmann::json to_json(const QuadResult& r) {
  return {{"value", r.value},
          {"uncorrected", r.uncorrected},
          {"singular_part", r.breakdown.singular_part},
          {"jump_part", r.breakdown.jump_part},
          {"correction", r.breakdown.total},
          {"method", to_string(r.method)},
          {"n", r.mesh.n},
          {"h", r.mesh.h},
          {"puncture", r.mesh.puncture},
          {"s", r.mesh.s},
          {"lambda", r.mesh.lambda},
          {"warnings", r.warnings}};
}

}  // namespace nearquad::study
