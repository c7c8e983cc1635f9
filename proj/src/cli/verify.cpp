#include <algorithm>
#include <cmath>

#include "kgip/cli.hpp"
#include "kgip/evolution.hpp"
#include "kgip/random.hpp"

namespace kgip::cli {

namespace {

double relative_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

ComplexMatrix eta_plus_from_left(const HamiltonianEigensystem& sys) {
  const Index dim = sys.vectors.left_vectors.front().size();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& phi : sys.vectors.left_vectors) out += phi * phi.adjoint();
  return out;
}

}  // namespace

Report run_verify(const RunConfig& cfg) {
  cfg.validate();
  Report report;
  report.config = cfg.to_json();

  SplitMix64 rng(cfg.seed);
  const Index n = cfg.dim;
  const double lambda = cfg.lambda;
  const ComplexMatrix d = random_positive_hermitian(rng, n);
  const InnerProductSpec spec = random_spec(rng, static_cast<std::size_t>(n));
  const FieldState f1 = random_field(rng, n);
  const FieldState f2 = random_field(rng, n);

  const SpectralDecomposition s = hermitian_eigendecompose(d, cfg.tol);
  const double d_scale = std::max(1.0, max_abs(d));
  report.add("jacobi_reconstruction", "spectral resolution of D", max_abs(s.reconstruct() - d) / d_scale, cfg.tol);
  report.add("jacobi_orthonormality", "orthonormal eigenbasis of D",
             max_abs(s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(n, n)), cfg.tol);

  const TwoComponentHamiltonian h = build_hamiltonian(d, lambda, cfg.tol);
  const ComplexMatrix s3 = sigma3(n);
  report.add("sigma3_pseudo_hermiticity", "H^dagger = sigma3 H sigma3",
             max_abs(h.matrix.adjoint() * s3 - s3 * h.matrix), cfg.tol);

  const HamiltonianEigensystem sys = eigen_system(s, lambda);
  const BiorthonormalReport bio = check_biorthonormal(sys.vectors, cfg.tol);
  report.add("biorthonormality", "biorthonormal eigenbasis of H",
             std::max(bio.max_orthonormality_defect, bio.max_completeness_defect), cfg.tol);

  double eigen_defect = 0.0;
  for (std::size_t i = 0; i < sys.vectors.size(); ++i) {
    const auto& psi = sys.vectors.right_vectors[i];
    eigen_defect = std::max(eigen_defect, max_abs(h.matrix * psi - sys.energies[i] * psi));
  }
  report.add("hamiltonian_eigenvectors", "H Psi = E Psi", eigen_defect / d_scale, cfg.tol);

  const ComplexMatrix eta0 = eta_plus(s, lambda);
  report.add("eta_plus_oracle", "closed-form positive metric", max_abs(eta0 - eta_plus_from_left(sys)), cfg.tol);

  const EtaOperator eta = eta_tilde_plus(s, lambda, spec);
  const ComplexMatrix a = symmetry_generator(sys, spec);
  report.add("eta_tilde_oracle", "transported metric A^dagger eta A",
             max_abs(eta.matrix - a.adjoint() * eta0 * a), cfg.tol);
  report.add("eta_tilde_pseudo_hermiticity", "H pseudo-Hermitian under the transported metric",
             pseudo_hermiticity_defect(eta.matrix, h.matrix), cfg.tol);
  report.add("symmetry_commutes", "[A, H] = 0", max_abs(a * h.matrix - h.matrix * a) / d_scale, cfg.tol);

  const RealVector metric_spectrum = hermitian_eigendecompose(eta.matrix, cfg.tol).eigenvalues;
  report.add("eta_tilde_positivity", "positive-definite metric", -metric_spectrum.minCoeff(), 0.0);

  // Products on the two-component side against the field-data formula.
  const Complex reference = solution_inner(f1, f2, s, spec);
  double gauge_gap = 0.0;
  for (double l : {0.5, 1.0, 2.0}) {
    const Complex value =
        two_component_inner(pack(f1, l), pack(f2, l), eta_tilde_plus(s, l, spec)) / (l * l);
    gauge_gap = std::max(gauge_gap, relative_gap(value, reference));
  }
  report.add("lambda_independence", "gauge parameter cancels", gauge_gap, cfg.tol);

  const Complex kg_two = kg_inner(pack(f1, lambda), pack(f2, lambda));
  report.add("kg_inner_forms", "sigma3 product equals Klein-Gordon product",
             relative_gap(kg_two, kg_inner(f1, f2, lambda)), cfg.tol);

  const double norm = solution_inner(f1, f1, s, spec).real();
  report.add("solution_norm_positive", "positive-definite product on solutions", -norm, 0.0);

  // Time evolution under constant D.
  const OperatorSource source = OperatorSource::constant(s);
  const double t_final = cfg.t_final;
  const auto traj1 = evolve_field(source, f1, 0.0, t_final, 10000, {.record_stride = 100});
  const auto traj2 = evolve_field(source, f2, 0.0, t_final, 10000, {.record_stride = 100});
  const DriftTable table =
      drift_report(traj1, traj2, source, spec, {Monitor::SolutionInner, Monitor::KgInner}, lambda);
  report.add("solution_inner_drift", "invariance under evolution", table.get(Monitor::SolutionInner).max_drift, 1e-6);
  report.add("kg_inner_drift", "invariance of the Klein-Gordon product", table.get(Monitor::KgInner).max_drift, 1e-6);

  const ComplexMatrix u = step_propagator(s, lambda, t_final);
  report.add("propagator_pseudo_unitarity", "eta-pseudo-unitary evolution", check_pseudo_unitary(u, eta, 1e-9).defect,
             1e-9);
  const TwoComponentState psi0 = pack(f1, lambda);
  const ComplexVector evolved = u * psi0.stacked();
  const ComplexVector from_field = pack(traj1.states.back(), lambda).stacked();
  report.add("propagator_vs_field", "two-component and field evolutions agree",
             max_abs(evolved - from_field) / std::max(1.0, max_abs(from_field)), 1e-6);

  report.data["seed"] = cfg.seed;
  report.data["d_spectrum"] = std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + n);
  return report;
}

}  // namespace kgip::cli
