#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgip/cli.hpp"
#include "kgip/evolution.hpp"
#include "kgip/models/kg_lattice.hpp"
#include "kgip/models/sho.hpp"
#include "kgip/models/wdw.hpp"

namespace py = pybind11;
using namespace kgip;

namespace {

FieldState field(const ComplexVector& psi, const ComplexVector& psi_dot) { return {psi, psi_dot}; }

SpectralDecomposition decompose(const ComplexMatrix& d) { return hermitian_eigendecompose(d); }

InnerProductSpec make_spec(const std::vector<double>& a_plus_sq, const std::vector<double>& a_minus_sq) {
  return {a_plus_sq, a_minus_sq};
}

}  // namespace

PYBIND11_MODULE(_kgip, m) {
  m.doc() = "Invariant positive-definite inner products for Klein-Gordon type equations";

  py::register_exception<Error>(m, "KgipError", PyExc_ValueError);

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &SpectralDecomposition::eigenvectors)
      .def("reconstruct", &SpectralDecomposition::reconstruct);

  m.def("eigendecompose", &hermitian_eigendecompose, py::arg("m"), py::arg("tol") = kDefaultTol,
        "Cyclic Jacobi eigendecomposition of a Hermitian matrix.");
  m.def("operator_power", [](const ComplexMatrix& d, double gamma) { return operator_power(decompose(d), gamma); },
        py::arg("d"), py::arg("gamma"));

  m.def("hamiltonian", [](const ComplexMatrix& d, double lambda) { return build_hamiltonian(d, lambda).matrix; },
        py::arg("d"), py::arg("lambda_") = 1.0);
  m.def("sigma3", &sigma3, py::arg("field_dim"));
  m.def("pack",
        [](const ComplexVector& psi, const ComplexVector& psi_dot, double lambda) {
          return pack(field(psi, psi_dot), lambda).stacked();
        },
        py::arg("psi"), py::arg("psi_dot"), py::arg("lambda_") = 1.0);
  m.def("eta_plus", [](const ComplexMatrix& d, double lambda) { return eta_plus(decompose(d), lambda); },
        py::arg("d"), py::arg("lambda_") = 1.0);
  m.def("eta_tilde_plus",
        [](const ComplexMatrix& d, double lambda, const std::vector<double>& ap, const std::vector<double>& am) {
          return eta_tilde_plus(decompose(d), lambda, make_spec(ap, am)).matrix;
        },
        py::arg("d"), py::arg("lambda_"), py::arg("a_plus_sq"), py::arg("a_minus_sq"));
  m.def("eta_general",
        [](const ComplexMatrix& d, double lambda, const std::vector<int>& signs) {
          return eta_general(pseudo_real_eigen_system(decompose(d), lambda), {signs}).matrix;
        },
        py::arg("d"), py::arg("lambda_"), py::arg("signs"));
  m.def("energies", [](const ComplexMatrix& d, double lambda) { return pseudo_real_eigen_system(decompose(d), lambda).energies; },
        py::arg("d"), py::arg("lambda_") = 1.0);

  m.def("solution_inner",
        [](const ComplexVector& psi1, const ComplexVector& dpsi1, const ComplexVector& psi2, const ComplexVector& dpsi2,
           const ComplexMatrix& d, const std::vector<double>& ap, const std::vector<double>& am) {
          return solution_inner(field(psi1, dpsi1), field(psi2, dpsi2), decompose(d), make_spec(ap, am));
        },
        py::arg("psi1"), py::arg("psi1_dot"), py::arg("psi2"), py::arg("psi2_dot"), py::arg("d"),
        py::arg("a_plus_sq"), py::arg("a_minus_sq"));
  m.def("kg_inner",
        [](const ComplexVector& psi1, const ComplexVector& dpsi1, const ComplexVector& psi2, const ComplexVector& dpsi2,
           double lambda) { return kg_inner(field(psi1, dpsi1), field(psi2, dpsi2), lambda); },
        py::arg("psi1"), py::arg("psi1_dot"), py::arg("psi2"), py::arg("psi2_dot"), py::arg("lambda_") = 1.0);

  m.def("step_propagator",
        [](const ComplexMatrix& d, double lambda, double tau) { return step_propagator(decompose(d), lambda, tau); },
        py::arg("d"), py::arg("lambda_"), py::arg("tau"));
  m.def("evolve_field",
        [](const ComplexMatrix& d, const ComplexVector& psi, const ComplexVector& psi_dot, double t1, std::size_t steps) {
          const FieldState end = evolve_field(OperatorSource::constant(d), field(psi, psi_dot), 0.0, t1, steps,
                                              {.record_stride = steps})
                                     .states.back();
          return py::make_tuple(end.psi, end.psi_dot);
        },
        py::arg("d"), py::arg("psi"), py::arg("psi_dot"), py::arg("t1"), py::arg("steps"),
        "RK4 integration of psi'' + D psi = 0 from t = 0; returns (psi, psi_dot) at t1.");

  m.def("sho_inner",
        [](Complex x1, Complex v1, Complex x2, Complex v2, double omega, double lp, double lm) {
          return sho_inner({x1, v1}, {x2, v2}, omega, lp, lm);
        },
        py::arg("x1"), py::arg("x1_dot"), py::arg("x2"), py::arg("x2_dot"), py::arg("omega"), py::arg("l_plus"),
        py::arg("l_minus"));

  m.def("kg_spectrum",
        [](Index sites, double mu, int dims) {
          KleinGordonLattice l;
          l.sites = sites;
          l.mu = mu;
          l.dims = dims;
          const KgSpectrum s = kg_build(l);
          return py::make_tuple(s.spectral.eigenvalues, s.k_norm);
        },
        py::arg("sites"), py::arg("mu"), py::arg("dims") = 1, "Returns (omega^2 ascending, |k| per mode).");
  m.def("kg_inner_ri",
        [](const ComplexVector& psi1, const ComplexVector& dpsi1, const ComplexVector& psi2, const ComplexVector& dpsi2,
           Index sites, double mu, double a) {
          KleinGordonLattice l;
          l.sites = sites;
          l.mu = mu;
          return kg_inner_ri(field(psi1, dpsi1), field(psi2, dpsi2), kg_build(l), a);
        },
        py::arg("psi1"), py::arg("psi1_dot"), py::arg("psi2"), py::arg("psi2_dot"), py::arg("sites"), py::arg("mu"),
        py::arg("a"));
  m.def("woodard_inner",
        [](const ComplexVector& psi1, const ComplexVector& dpsi1, const ComplexVector& psi2, const ComplexVector& dpsi2,
           Index sites, double mu) {
          KleinGordonLattice l;
          l.sites = sites;
          l.mu = mu;
          return woodard_inner(field(psi1, dpsi1), field(psi2, dpsi2), kg_build(l));
        },
        py::arg("psi1"), py::arg("psi1_dot"), py::arg("psi2"), py::arg("psi2_dot"), py::arg("sites"), py::arg("mu"));

  auto wdw = [](double mass, int kappa, Index modes) {
    WdwFrwModel model;
    model.mass = mass;
    model.kappa = kappa;
    model.modes = modes;
    return model;
  };
  m.def("wdw_eigenvalues",
        [wdw](double mass, int kappa, double alpha, Index modes) { return wdw_eigenvalues(wdw(mass, kappa, modes), alpha); },
        py::arg("mass"), py::arg("kappa"), py::arg("alpha"), py::arg("modes") = 8);
  m.def("wdw_positivity",
        [wdw](double mass, int kappa, double alpha) { return to_string(wdw_positivity(wdw(mass, kappa, 1), alpha)); },
        py::arg("mass"), py::arg("kappa"), py::arg("alpha"));
  m.def("wdw_grid_errors",
        [wdw](double mass, int kappa, double alpha, Index modes, Index grid) {
          return wdw_numeric_crosscheck(wdw(mass, kappa, modes), alpha, grid).relative_error;
        },
        py::arg("mass"), py::arg("kappa"), py::arg("alpha"), py::arg("modes") = 8, py::arg("grid") = 256);

  m.def("verify_report",
        [](Index dim, std::uint64_t seed, double tol) {
          cli::RunConfig cfg;
          cfg.dim = dim;
          cfg.seed = seed;
          cfg.tol = tol;
          return cli::dump(cli::run_verify(cfg).to_json());
        },
        py::arg("dim") = 8, py::arg("seed") = 42, py::arg("tol") = kDefaultTol, "Full property battery as JSON text.");
}
