#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "howe/compact_characters.hpp"
#include "howe/errors.hpp"
#include "howe/metaplectic.hpp"
#include "howe/transfer.hpp"
#include "howe/verify.hpp"
#include "howe/weights.hpp"

namespace py = pybind11;
using namespace howe;

namespace {

py::dict diagnostics(const TransferDiagnostics& d) {
  py::list seq;
  for (const auto& [r, v] : d.rSequence) seq.append(py::make_tuple(r, v));
  py::dict out;
  out["value"] = d.extrapolated;
  out["r_sequence"] = seq;
  out["error_estimate"] = d.errorEstimate;
  out["method"] = to_string(d.method);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Characters for the dual pair (U(n), U(p,q))";
  m.attr("__version__") = HOWE_VERSION;

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NumericalDomainError>(m, "NumericalDomainError", PyExc_ArithmeticError);

  py::class_<HighestWeight>(m, "HighestWeight")
      .def(py::init(&make_weight), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("lambda_"))
      .def_readonly("n", &HighestWeight::n)
      .def_readonly("p", &HighestWeight::p)
      .def_readonly("q", &HighestWeight::q)
      .def_readonly("lambda_", &HighestWeight::lambda)
      .def_property_readonly("shift", [](const HighestWeight& w) { return w.shift().value(); })
      .def("__eq__", [](const HighestWeight& a, const HighestWeight& b) { return a == b; })
      .def("__repr__", [](const HighestWeight& w) {
        std::string s = "HighestWeight(n=" + std::to_string(w.n) + ", p=" + std::to_string(w.p) +
                        ", q=" + std::to_string(w.q) + ", lambda_=[";
        for (int a = 0; a < w.n; ++a) s += (a ? ", " : "") + std::to_string(w.lambda[a]);
        return s + "])";
      });

  m.def("enumerate_weights", &enumerate_weights, py::arg("n"), py::arg("p"), py::arg("q"), py::arg("bound"));
  m.def("rho", [](int n) {
    std::vector<double> out;
    for (const auto& h : rho(n).entries) out.push_back(h.value());
    return out;
  });
  m.def("dimension", &dimension);
  m.def(
      "weyl_character",
      [](const HighestWeight& w, std::vector<double> angles) { return weyl_character(w, TorusPoint{angles}).value; },
      py::arg("w"), py::arg("angles"));

  m.def(
      "in_semigroup", [](std::vector<cplx> d, int p, int q) { return in_semigroup(d, p, q); }, py::arg("diag"),
      py::arg("p"), py::arg("q"));
  m.def(
      "theta_on_torus",
      [](std::vector<double> t, int p, int q, std::vector<double> moduli, std::vector<double> angles) {
        return theta_on_torus(TorusPoint{t}, make_semigroup_point(p, q, moduli, angles)).value;
      },
      py::arg("t_angles"), py::arg("p"), py::arg("q"), py::arg("moduli"), py::arg("angles"));
  m.def(
      "theta_u11", [](double theta, double X, int sheet) { return theta_u11(theta, X, sheet).value; },
      py::arg("theta"), py::arg("X"), py::arg("sheet") = 0);

  m.def(
      "residue_circle_integral",
      [](int k, std::vector<cplx> a, int p, int q) { return residue_circle_integral(k, a, p, q); }, py::arg("k"),
      py::arg("a"), py::arg("p"), py::arg("q"));
  m.def(
      "transfer_integral_n1",
      [](int k, std::vector<double> angles, int p, int q, double r) {
        return transfer_integral_n1(k, angles, p, q, r);
      },
      py::arg("k"), py::arg("angles"), py::arg("p"), py::arg("q"), py::arg("r"));
  m.def(
      "transfer_integral_general",
      [](const HighestWeight& w, std::vector<double> angles, double r) {
        return transfer_integral_general(w, angles, r);
      },
      py::arg("w"), py::arg("angles"), py::arg("r"));
  m.def(
      "transfer_limit_n1",
      [](int k, std::vector<double> angles, int p, int q) {
        return diagnostics(transfer_limit_n1(k, angles, p, q, auto_r_sequence(angles)));
      },
      py::arg("k"), py::arg("angles"), py::arg("p"), py::arg("q"));
  m.def("limit_convention_constant", &limit_convention_constant);
  m.def(
      "char_closed_form_n1",
      [](int k, std::vector<double> angles, int p, int q) { return char_closed_form_n1(k, angles, p, q).value; },
      py::arg("k"), py::arg("angles"), py::arg("p"), py::arg("q"));
  m.def("char_noncompact_u11", &char_noncompact_u11, py::arg("k"), py::arg("theta"), py::arg("X"));
  m.def(
      "hecht_check",
      [](int k, std::vector<std::pair<double, double>> grid) {
        const auto rep = hecht_check(k, grid);
        py::dict out;
        out["pass"] = rep.pass;
        out["matched"] = rep.matched;
        out["constant"] = rep.constant;
        out["max_deviation"] = rep.maxDeviation;
        out["skipped"] = rep.skipped;
        return out;
      },
      py::arg("k"), py::arg("grid"));
  m.def(
      "p_function", [](std::vector<double> x) { return p_function(x); }, py::arg("x"));

  m.def(
      "run_verify",
      [](const std::string& suite, int cases, std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_verify({suite, cases, seed, {}})) {
          py::dict d;
          d["suite"] = r.suite;
          d["cases"] = r.cases;
          d["max_error"] = r.maxError;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("cases") = 0, py::arg("seed") = 1);
}
