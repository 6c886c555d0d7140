#include "rampsi/bernoulli.hpp"
#include "rampsi/errors.hpp"
#include "rampsi/oracles.hpp"
#include "rampsi/params.hpp"
#include "rampsi/planner.hpp"
#include "rampsi/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace rampsi;

namespace {

EvalParams params_for(double tol, double x, std::optional<int> k_terms) {
  EvalParams p = plan(tol, x);
  if (k_terms) p.k_terms = *k_terms;
  p.validate();
  return p;
}

py::dict as_dict(const SeriesValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["error_estimate"] = v.error_estimate;
  d["k_used"] = v.k_used;
  d["n_used"] = v.n_used;
  return d;
}

py::dict as_dict(const EulerGamma& g) {
  py::dict d;
  d["value"] = g.value;
  d["error_estimate"] = g.error_estimate;
  d["k_used"] = g.k_used;
  d["n_used"] = g.n_used;
  d["series_value"] = g.series_value;
  d["source"] = g.source == GammaSource::integer_limit ? "integer_limit" : "any_x";
  return d;
}

}  // namespace

PYBIND11_MODULE(_rampsi, m) {
  m.doc() = "Digamma, Euler's constant and odd zeta values from hyperbolic series";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<GuardBandError>(m, "GuardBandError", domain.ptr());
  py::register_exception<ToleranceError>(m, "ToleranceError", PyExc_ArithmeticError);

  py::class_<EvalParams>(m, "EvalParams")
      .def(py::init<>())
      .def_readwrite("tol", &EvalParams::tol)
      .def_readwrite("k_terms", &EvalParams::k_terms)
      .def_readwrite("n_terms", &EvalParams::n_terms)
      .def_readwrite("guard_delta", &EvalParams::guard_delta)
      .def("__repr__", [](const EvalParams& p) {
        return "EvalParams(tol=" + py::repr(py::float_(p.tol)).cast<std::string>() +
               ", k_terms=" + std::to_string(p.k_terms) + ", n_terms=" + std::to_string(p.n_terms) +
               ", guard_delta=" + py::repr(py::float_(p.guard_delta)).cast<std::string>() + ")";
      });

  m.def("plan", &plan, py::arg("tol"), py::arg("x"), py::arg("guard_delta") = 1e-3);

  m.def(
      "psi",
      [](double x, double tol, std::optional<int> k_terms) { return as_dict(psi_ramanujan(x, params_for(tol, x, k_terms))); },
      py::arg("x"), py::arg("tol") = 1e-13, py::arg("k_terms") = py::none(), "psi(x + 1) from the hyperbolic series");
  m.def(
      "psi_prime",
      [](double x, double tol, std::optional<int> k_terms) {
        return as_dict(psi_prime_ramanujan(x, params_for(tol, x, k_terms)));
      },
      py::arg("x"), py::arg("tol") = 1e-13, py::arg("k_terms") = py::none());
  m.def(
      "double_series",
      [](double x, double tol) { return as_dict(double_series_s(x, plan(tol, x))); }, py::arg("x"),
      py::arg("tol") = 1e-13);
  m.def(
      "gamma_at_integer",
      [](long mm, double tol, std::optional<int> k_terms) {
        return as_dict(gamma_at_integer(mm, params_for(tol, static_cast<double>(mm), k_terms)));
      },
      py::arg("m"), py::arg("tol") = 1e-13, py::arg("k_terms") = py::none());
  m.def(
      "gamma_any_x",
      [](double x, double tol) { return as_dict(gamma_any_x(x, plan(tol, x))); }, py::arg("x"),
      py::arg("tol") = 1e-13);
  m.def(
      "zeta_odd",
      [](int n, std::optional<double> alpha) {
        if (alpha) return as_dict(zeta_odd_general(n, ModularPair::from_alpha(*alpha), default_bernoulli_table(), EvalParams{}));
        return as_dict(zeta_odd(n, default_bernoulli_table(), EvalParams{}));
      },
      py::arg("n"), py::arg("alpha") = py::none(), "zeta(2n + 1), optionally from the pair (alpha, pi^2/alpha)");
  m.def("zeta_even", [](int n) { return zeta_even(n, default_bernoulli_table()); }, py::arg("n"));
  m.def(
      "csch2_sum", [](int k_terms) {
        EvalParams p;
        p.k_terms = k_terms;
        return as_dict(csch2_sum(p));
      },
      py::arg("k_terms") = 10);
  m.def(
      "lambert_sum", [](int power, int k_terms) {
        EvalParams p;
        p.k_terms = k_terms;
        return as_dict(lambert_sum(power, p));
      },
      py::arg("power"), py::arg("k_terms") = 10);
  m.def(
      "bernoulli",
      [](int index) {
        const BigRational b = default_bernoulli_table().at(index);
        return py::make_tuple(py::int_(py::str(b.numerator().str())), py::int_(py::str(b.denominator().str())));
      },
      py::arg("index"), "B_index as (numerator, denominator)");
  m.def("psi_oracle", [](double x) { return oracle::psi(x); }, py::arg("x"), "psi(x + 1) by recurrence and Stirling");
  m.def("zeta_direct", [](double s) { return oracle::zeta_direct(s); }, py::arg("s"));
}
