#pragma once

#include <utility>
#include <vector>

#include "kgip/two_component.hpp"

namespace kgip {

/// Per-mode positive weights |a_n^+|^2 and |a_n^-|^2 selecting one member of
/// the invariant positive-definite family.
struct InnerProductSpec {
  std::vector<double> a_plus_sq;
  std::vector<double> a_minus_sq;

  std::size_t size() const { return a_plus_sq.size(); }

  /// All weights 1, i.e. L+ = 1, L- = 0.
  static InnerProductSpec uniform(std::size_t modes);
  /// Same L+ and L- scalars on every mode (A+- = L+ +- L-).
  static InnerProductSpec from_scalars(std::size_t modes, double l_plus, double l_minus);

  /// Throws LengthMismatch / NonPositiveCoefficient.
  void validate(std::size_t modes) const;
};

/// Sign per real-eigenvalue label, in the order those labels appear in the
/// eigensystem.
struct SignAssignment {
  std::vector<int> sigma;
};

struct EtaOperator {
  ComplexMatrix matrix;
  bool positive = false;
  double lambda = 1.0;
};

struct LPair {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

/// L+- = (1/2) sum_n (|a_n^+|^2 +- |a_n^-|^2) |phi_n><phi_n|.
LPair build_L(const InnerProductSpec& spec, const SpectralDecomposition& d);

/// Closed block form of the transported metric; positive-definite.
EtaOperator eta_tilde_plus(const SpectralDecomposition& d, double lambda, const InnerProductSpec& spec);

/// A = sum_n (a_n^+ |Psi_{+,n}><Phi_{+,n}| + a_n^- |Psi_{-,n}><Phi_{-,n}|) with
/// a_n^+- = sqrt(|a_n^+-|^2). Commutes with H.
ComplexMatrix symmetry_generator(const HamiltonianEigensystem& sys, const InnerProductSpec& spec);

/// Sign-classified metric: sum sigma |phi_0><phi_0| over real eigenvalues plus
/// |phi_+><phi_-| + |phi_-><phi_+| over each complex-conjugate pair.
EtaOperator eta_general(const HamiltonianEigensystem& sys, const SignAssignment& signs,
                        double pair_tol = 1e-10);

/// Invariant positive-definite product on solutions, evaluated on their data:
/// (1/2)[<psi1|L+|psi2> + <psi1'|L+ D^-1|psi2'> + i(<psi1|L- D^-1/2|psi2'> - <psi1'|L- D^-1/2|psi2>)].
Complex solution_inner(const FieldState& f1, const FieldState& f2, const SpectralDecomposition& d,
                       const InnerProductSpec& spec);

/// <Psi1 | eta Psi2>.
Complex two_component_inner(const TwoComponentState& s1, const TwoComponentState& s2, const EtaOperator& eta);
Complex two_component_inner(const TwoComponentState& s1, const TwoComponentState& s2, const ComplexMatrix& eta);

/// Sampled solution of the field equation.
struct FieldTrajectory {
  std::vector<double> times;
  std::vector<FieldState> states;

  std::size_t size() const { return times.size(); }
};

/// solution_inner frozen at the sample taken at t0, using D(t0).
Complex invariant_inner_frozen(const FieldTrajectory& traj1, const FieldTrajectory& traj2, double t0,
                               const SpectralDecomposition& d_at_t0, const InnerProductSpec& spec);

/// U^{-1 dagger} eta0 U^{-1}.
EtaOperator eta_inv(const ComplexMatrix& u, const EtaOperator& eta0);

struct PseudoUnitaryReport {
  double defect = 0.0;
  bool pass = false;
};

/// max |eta0^{-1} U^dagger eta0 U - I|.
PseudoUnitaryReport check_pseudo_unitary(const ComplexMatrix& u, const EtaOperator& eta0, double tol = kDefaultTol);

/// max |eta H - H^dagger eta|.
double pseudo_hermiticity_defect(const ComplexMatrix& eta, const ComplexMatrix& h);

}  // namespace kgip
