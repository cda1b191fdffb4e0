#include "calogero/json_io.hpp"
#include "calogero/operators.hpp"
#include "calogero/pieri.hpp"
#include "calogero/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace calogero;

namespace {

Params make_params(const std::string& family, int n, const std::string& g0,
                   const std::string& g1, const std::string& omega) {
  Params p;
  p.family = parse_family(family);
  p.n = n;
  p.g0 = parse_rational(g0);
  p.g1 = parse_rational(g1);
  p.omega = parse_rational(omega);
  p.validate();
  return p;
}

std::string construct_json(const std::string& family, int n, const Partition& lam,
                           const std::string& g0, const std::string& g1,
                           const std::string& omega, const std::string& normalization) {
  Params params = make_params(family, n, g0, g1, omega);
  OrthoPoly p = construct_poly(lam, params);
  if (normalization == "pieri")
    p = pieri_normalize(p);
  else if (normalization != "monic")
    throw std::invalid_argument("normalization must be monic or pieri");
  return ortho_to_json(p).dump();
}

std::string decompose_json(const std::string& family, int n, const Partition& lam,
                           const std::string& g0, const std::string& g1,
                           const std::string& omega) {
  Params params = make_params(family, n, g0, g1, omega);
  return decomposition_to_json(decompose_harmonic(lam, params), params).dump();
}

double eval_poly(const std::string& family, int n, const Partition& lam,
                 const std::string& g0, const std::string& g1, const std::string& omega,
                 const std::vector<double>& x) {
  Params params = make_params(family, n, g0, g1, omega);
  return construct_poly(lam, params).poly.eval_double(x);
}

double eval_psi(const std::string& family, int n, const Partition& lam,
                const std::string& g0, const std::string& g1, const std::string& omega,
                const std::vector<double>& x) {
  Params params = make_params(family, n, g0, g1, omega);
  return wavefunction_eval(lam, x, params);
}

double residual(const std::string& family, int n, const Partition& lam,
                const std::string& g0, const std::string& g1, const std::string& omega,
                const std::vector<double>& x, double h) {
  Params params = make_params(family, n, g0, g1, omega);
  return hamiltonian_residual(lam, x, h, params);
}

std::string norm_formula_json(const std::string& family, int n, const Partition& lam,
                              const std::string& g0, const std::string& g1,
                              const std::string& omega) {
  Params params = make_params(family, n, g0, g1, omega);
  return scalar_to_json(norm_formula(lam, params)).dump();
}

std::string mehta_json(const std::string& family, int n, const std::string& g0,
                       const std::string& g1, const std::string& omega) {
  Params params = make_params(family, n, g0, g1, omega);
  return scalar_to_json(mehta_macdonald(params)).dump();
}

std::string norm_ratio_str(const std::string& family, int n, const Partition& lam,
                           const std::string& g0, const std::string& g1,
                           const std::string& omega) {
  Params params = make_params(family, n, g0, g1, omega);
  return rational_str(norm_ratio(lam, params));
}

std::string verify_json(const std::string& suite, const std::string& family, int n,
                        int max_weight, int r, const std::string& g0, const std::string& g1,
                        const std::string& omega, bool deep, std::uint64_t seed, double tol,
                        int threads) {
  VerifyOptions opt;
  if (!family.empty()) opt.family = parse_family(family);
  if (n) opt.n = n;
  if (max_weight) opt.max_weight = max_weight;
  if (r) opt.r = r;
  if (!g0.empty()) opt.g0 = parse_rational(g0);
  if (!g1.empty()) opt.g1 = parse_rational(g1);
  if (!omega.empty()) opt.omega = parse_rational(omega);
  opt.deep = deep;
  opt.seed = seed;
  opt.tol = tol;
  opt.threads = threads;
  auto results = run_suite(suite, opt);
  ordered_json out;
  out["schemaVersion"] = kSchemaVersion;
  out["suite"] = suite;
  ordered_json cases = ordered_json::array();
  int failed = 0, non_generic = 0;
  for (const auto& c : results) {
    cases.push_back(c.line);
    failed += c.failed ? 1 : 0;
    non_generic += c.non_generic ? 1 : 0;
  }
  out["cases"] = cases;
  out["failed"] = failed;
  out["nonGeneric"] = non_generic;
  out["status"] = failed == 0 ? "pass" : "fail";
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_calogero, m) {
  m.doc() = "exact multivariable Hermite/Laguerre polynomials of the confined "
            "rational Calogero system";

  m.def("construct_json", &construct_json, py::arg("family"), py::arg("n"),
        py::arg("lam"), py::arg("g0") = "0", py::arg("g1") = "0", py::arg("omega") = "1",
        py::arg("normalization") = "monic",
        "Build p_lambda (or its recurrence-normalized form) and return it as JSON.");
  m.def("decompose_json", &decompose_json, py::arg("family"), py::arg("n"), py::arg("lam"),
        py::arg("g0") = "0", py::arg("g1") = "0", py::arg("omega") = "1",
        "Radial-spherical decomposition of p_lambda as JSON.");
  m.def("eval_poly", &eval_poly, py::arg("family"), py::arg("n"), py::arg("lam"),
        py::arg("g0"), py::arg("g1"), py::arg("omega"), py::arg("x"));
  m.def("eval_psi", &eval_psi, py::arg("family"), py::arg("n"), py::arg("lam"),
        py::arg("g0"), py::arg("g1"), py::arg("omega"), py::arg("x"));
  m.def("hamiltonian_residual", &residual, py::arg("family"), py::arg("n"), py::arg("lam"),
        py::arg("g0"), py::arg("g1"), py::arg("omega"), py::arg("x"), py::arg("h") = 1e-3);
  m.def("norm_formula_json", &norm_formula_json, py::arg("family"), py::arg("n"),
        py::arg("lam"), py::arg("g0") = "0", py::arg("g1") = "0", py::arg("omega") = "1");
  m.def("mehta_json", &mehta_json, py::arg("family"), py::arg("n"), py::arg("g0") = "0",
        py::arg("g1") = "0", py::arg("omega") = "1");
  m.def("norm_ratio", &norm_ratio_str, py::arg("family"), py::arg("n"), py::arg("lam"),
        py::arg("g0") = "0", py::arg("g1") = "0", py::arg("omega") = "1");
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("family") = "",
        py::arg("n") = 0, py::arg("max_weight") = 0, py::arg("r") = 0, py::arg("g0") = "",
        py::arg("g1") = "", py::arg("omega") = "", py::arg("deep") = false,
        py::arg("seed") = 0, py::arg("tol") = 0.0, py::arg("threads") = 0,
        "Run one verification suite and return the aggregated JSON report.");
  m.def("suites", []() { return verify_suites(); });
}
