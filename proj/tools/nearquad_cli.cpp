#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "nearquad/integrator.hpp"
#include "nearquad/study.hpp"

namespace nq = nearquad;
namespace st = nearquad::study;

namespace {

template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corrected trapezoidal quadrature for near-singular integrals"};
  app.require_subcommand(1);

  // converge
  std::string d_text = "0.1,0.01,1e-4";
  std::string n_text = "16:256:*2";
  std::string method_text = "corrected-closed,uncorrected-plain";
  std::string format_text = "csv";
  st::StudyConfig study;
  auto* converge = app.add_subcommand("converge", "Convergence study over d and n");
  converge->add_option("--integrand", study.integrand, "test1, test2 or custom")
      ->check(CLI::IsMember({"test1", "test2", "custom"}));
  converge->add_option("--g", study.numerator, "numerator for custom: one, x, x2, exp, cos, dexp");
  converge->add_option("--d", d_text, "comma-separated d values");
  converge->add_option("--n", n_text, "n list, e.g. 16,32 or 16:256:*2");
  converge->add_option("--c", study.c, "kernel scale c");
  converge->add_option("--xs", study.x_s, "near-singular point x_s");
  converge->add_option("--a", study.a, "half-length of the interval");
  converge->add_option("--method", method_text, "comma-separated methods");
  converge->add_option("--format", format_text)->check(CLI::IsMember({"csv", "json"}));
  converge->add_option("--out", study.output, "output file (stdout if omitted)");

  // coeffs
  nq::CoeffParams cp;
  std::string coeff_format = "csv";
  std::string coeff_out;
  auto* coeffs = app.add_subcommand("coeffs", "Dump correction coefficients");
  coeffs->set_help_flag("--help", "Print this help message and exit");
  coeffs->add_option("--lambda", cp.lambda, "lambda = d/(c h)");
  coeffs->add_option("--s", cp.s, "off-mesh fraction");
  coeffs->add_option("--h", cp.h, "mesh size");
  coeffs->add_option("--kmax", cp.k_max, "highest index");
  coeffs->add_option("--format", coeff_format)->check(CLI::IsMember({"csv", "json"}));
  coeffs->add_option("--out", coeff_out, "output file (stdout if omitted)");

  // eval
  nq::KernelParams kp{1.0, 1.0, 0.01, 0.1};
  int n = 64;
  std::string eval_method = "auto";
  std::string g_name = "dexp";
  std::string eval_out;
  auto* eval = app.add_subcommand("eval", "Evaluate one corrected integral and print JSON");
  eval->add_option("--c", kp.c);
  eval->add_option("--d", kp.d);
  eval->add_option("--xs", kp.x_s);
  eval->add_option("--a", kp.a);
  eval->add_option("--n", n);
  eval->add_option("--method", eval_method)->check(CLI::IsMember({"auto", "closed-form", "fd-series"}));
  eval->add_option("--g", g_name, "numerator: one, x, x2, exp, cos, dexp");
  eval->add_option("--out", eval_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*converge) {
      study.d_list = st::parse_real_list(d_text);
      study.n_list = st::parse_n_list(n_text);
      study.methods.clear();
      for (const auto& m : st::parse_list(method_text)) study.methods.push_back(m);
      study.format = st::format_from_string(format_text);
      const auto rows = st::run_convergence(study);
      emit(study.output, [&](std::ostream& os) { st::write_rows(os, rows, study.format); });
    } else if (*coeffs) {
      const auto rows = st::coefficient_rows(cp);
      const auto fmt = st::format_from_string(coeff_format);
      emit(coeff_out, [&](std::ostream& os) { st::write_coeffs(os, rows, fmt); });
    } else if (*eval) {
      const auto g = st::numerator(g_name, kp.d);
      const auto r = nq::integrate_near_singular(g, kp, n, nq::method_from_string(eval_method));
      emit(eval_out, [&](std::ostream& os) { os << st::to_json(r).dump(2) << '\n'; });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
