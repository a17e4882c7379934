#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "nearquad/emcoeff.hpp"
#include "nearquad/integrator.hpp"
#include "nearquad/oracle.hpp"
#include "nearquad/specfun.hpp"
#include "nearquad/study.hpp"

namespace py = pybind11;
namespace nq = nearquad;

namespace {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<nq::Complex(nq::Complex)>;

// g is either a numerator name ("exp", "dexp", ...) or a real callable.
nq::GEval make_g(const py::object& g, const std::optional<ComplexFn>& g_complex, double d) {
  if (py::isinstance<py::str>(g)) return nq::study::numerator(g.cast<std::string>(), d);
  nq::GEval out;
  out.real = g.cast<RealFn>();
  if (g_complex) out.complex = *g_complex;
  return out;
}

py::dict result_dict(const nq::QuadResult& r) {
  py::dict out;
  out["value"] = r.value;
  out["uncorrected"] = r.uncorrected;
  out["singular_part"] = r.breakdown.singular_part;
  out["jump_part"] = r.breakdown.jump_part;
  out["correction"] = r.breakdown.total;
  out["method"] = nq::to_string(r.method);
  out["n"] = r.mesh.n;
  out["h"] = r.mesh.h;
  out["puncture"] = r.mesh.puncture;
  out["s"] = r.mesh.s;
  out["lambda"] = r.mesh.lambda;
  out["warnings"] = r.warnings;
  return out;
}

nq::CoeffParams coeff_params(double lambda, double s, double h, int k_max) {
  nq::CoeffParams p{lambda, s, h, k_max};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_nearquad, m) {
  m.doc() = "Corrected trapezoidal rules for near-singular and finite-part integrals";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("digamma", py::overload_cast<nq::Complex>(&nq::digamma), py::arg("z"));
  m.def("bernoulli_number", &nq::bernoulli_number, py::arg("n"));

  m.def("zk_table", [](double lambda, double h, int k_max) {
    return nq::zk_table(coeff_params(lambda, 0.0, h, k_max));
  }, py::arg("lam"), py::arg("h") = 1.0, py::arg("k_max") = 12);
  m.def("zks_table", [](double lambda, double s, double h, int k_max) {
    return nq::zks_table(coeff_params(lambda, s, h, k_max));
  }, py::arg("lam"), py::arg("s"), py::arg("h") = 1.0, py::arg("k_max") = 12);
  m.def("pks_table", [](double lambda, double s, double h, int k_max) {
    return nq::pks_table(coeff_params(lambda, s, h, k_max));
  }, py::arg("lam"), py::arg("s"), py::arg("h") = 1.0, py::arg("k_max") = 12);
  m.def("pks_closed_form", [](double lambda, double s, double h, int k_max) {
    return nq::pks_closed_form(coeff_params(lambda, s, h, k_max));
  }, py::arg("lam"), py::arg("s"), py::arg("h") = 1.0, py::arg("k_max") = 12);

  m.def("integrate_near_singular",
        [](const py::object& g, double d, double c, double x_s, double a, int n,
           const std::string& method, std::optional<ComplexFn> g_complex) {
          const auto geval = make_g(g, g_complex, d);
          return result_dict(nq::integrate_near_singular(geval, {a, c, d, x_s}, n,
                                                         nq::method_from_string(method)));
        },
        py::arg("g"), py::arg("d"), py::arg("c") = 1.0, py::arg("xs") = 0.0, py::arg("a") = 1.0,
        py::arg("n") = 64, py::arg("method") = "auto", py::arg("g_complex") = py::none());

  m.def("integrate_finite_part",
        [](const py::object& g, double x_s, double a, int n, std::optional<ComplexFn> g_complex) {
          return result_dict(nq::integrate_finite_part(make_g(g, g_complex, 0.0), a, x_s, n));
        },
        py::arg("g"), py::arg("xs") = 0.0, py::arg("a") = 1.0, py::arg("n") = 64,
        py::arg("g_complex") = py::none());

  m.def("reference_integral",
        [](const py::object& g, double d, double c, double x_s, double a, double tol) {
          const auto r = nq::reference_integral(make_g(g, std::nullopt, d), {a, c, d, x_s}, tol);
          return py::make_tuple(r.value, r.est_error);
        },
        py::arg("g"), py::arg("d"), py::arg("c") = 1.0, py::arg("xs") = 0.0, py::arg("a") = 1.0,
        py::arg("tol") = 1e-14);

  m.def("finite_part_reference",
        [](const py::object& g, const ComplexFn& g_complex, double x_s, double a) {
          return nq::finite_part_reference(make_g(g, g_complex, 0.0), a, x_s);
        },
        py::arg("g"), py::arg("g_complex"), py::arg("xs") = 0.0, py::arg("a") = 1.0);

  m.def("exact_test1", &nq::exact_test1, py::arg("d"));
  m.def("exact_test2", &nq::exact_test2, py::arg("d"), py::arg("c"), py::arg("xs"));

  m.def("self_check",
        [](double d, double c, double x_s, double a, int n) {
          const auto r = nq::self_check({a, c, d, x_s}, n);
          py::dict out;
          out["lambda"] = r.lambda;
          out["s"] = r.s;
          out["h"] = r.h;
          out["reflection_max"] = r.reflection_max;
          out["pks_identity_max"] = r.pks_identity_max;
          out["closed_form_max"] = r.closed_form_max;
          out["max_deviation"] = r.max_deviation;
          out["p0"] = r.p0;
          out["p1"] = r.p1;
          out["warnings"] = r.warnings;
          return out;
        },
        py::arg("d"), py::arg("c") = 1.0, py::arg("xs") = 0.0, py::arg("a") = 1.0,
        py::arg("n") = 64);

  m.def("converge",
        [](const std::string& integrand, std::vector<double> d_list, std::vector<int> n_list,
           std::vector<std::string> methods, double c, double x_s, double a,
           const std::string& numerator) {
          nq::study::StudyConfig cfg;
          cfg.integrand = integrand;
          cfg.d_list = std::move(d_list);
          cfg.n_list = std::move(n_list);
          cfg.methods = std::move(methods);
          cfg.c = c;
          cfg.x_s = x_s;
          cfg.a = a;
          cfg.numerator = numerator;
          py::list rows;
          for (const auto& r : nq::study::run_convergence(cfg)) {
            py::dict row;
            row["n"] = r.n;
            row["h"] = r.h;
            row["d"] = r.d;
            row["c"] = r.c;
            row["xs"] = r.x_s;
            row["method"] = r.method;
            row["value"] = r.value;
            row["reference"] = r.reference;
            row["abs_err"] = r.abs_err;
            rows.append(row);
          }
          return rows;
        },
        py::arg("integrand"), py::arg("d"), py::arg("n"),
        py::arg("methods") = std::vector<std::string>{"corrected-closed", "uncorrected-plain"},
        py::arg("c") = 1.0, py::arg("xs") = 0.0, py::arg("a") = 1.0, py::arg("g") = "exp");
}
