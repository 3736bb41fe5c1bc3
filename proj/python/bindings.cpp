#include "angelesco/asymptotics.hpp"
#include "angelesco/cli.hpp"
#include "angelesco/modelrhp.hpp"
#include "angelesco/mop.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace angelesco;

namespace {

WeightParams ja(const std::string& a, const std::string& alpha, const std::string& beta, const std::string& gamma) {
  return WeightParams::jacobi_angelesco(parse_rational(a), parse_rational(alpha), parse_rational(beta),
                                        parse_rational(gamma));
}

// Full CLI report as JSON text; flags exactly as on the command line.
std::string run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"angelesco"};
  for (const auto& s : args) argv.push_back(s.c_str());
  const auto cfg = cli::parse_args(static_cast<int>(argv.size()), argv.data());
  return render_json(cli::run_command(cfg));
}

}  // namespace

PYBIND11_MODULE(_angelesco, m) {
  m.doc() = "Angelesco multiple orthogonal polynomials near the symmetric point";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("run", &run, py::arg("args"), "Run a CLI subcommand and return its JSON report.");

  m.def(
      "pnn_at_zero",
      [](unsigned n, const std::string& a, const std::string& alpha, const std::string& beta,
         const std::string& gamma) {
        return rational_to_string(classical_pnn_at_zero(n, parse_rational(alpha), parse_rational(beta),
                                                        parse_rational(gamma), parse_rational(a)));
      },
      py::arg("n"), py::arg("a"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("gamma") = "0",
      "Exact P_{n,n}(0; a) for Jacobi-Angelesco weights, as 'p/q'.");

  m.def(
      "mop_coefficients",
      [](unsigned n1, unsigned n2, const std::string& a, const std::string& alpha, const std::string& beta,
         const std::string& gamma, unsigned digits) {
        const Polynomial P = solve_mop({n1, n2}, ja(a, alpha, beta, gamma), digits);
        std::vector<std::string> out;
        for (const auto& c : P.coeffs) out.push_back(to_decimal(c, std::min(digits, 40u)));
        return out;
      },
      py::arg("n1"), py::arg("n2"), py::arg("a"), py::arg("alpha") = "0", py::arg("beta") = "0",
      py::arg("gamma") = "0", py::arg("digits") = 160, "Monic coefficients, ascending, as decimal strings.");

  m.def(
      "q_eval",
      [](std::complex<double> z, const std::string& tau, const std::string& beta, unsigned digits) {
        PrecisionGuard g(digits);
        return to_std(Q_eval(to_complex(z), to_real(parse_rational(tau)), to_real(parse_rational(beta)), {}, digits)
                          .value);
      },
      py::arg("z"), py::arg("tau") = "0", py::arg("beta") = "0", py::arg("digits") = 50);

  m.def(
      "cj_constant",
      [](int j, const std::string& alpha, const std::string& beta, const std::string& gamma, unsigned digits) {
        PrecisionGuard g(digits);
        return to_decimal(cj_constant(j, ja("-1", alpha, beta, gamma), digits), digits);
      },
      py::arg("j"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("gamma") = "0", py::arg("digits") = 50);
}
