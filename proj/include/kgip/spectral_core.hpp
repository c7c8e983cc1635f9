#pragma once

#include <vector>

#include "kgip/types.hpp"

namespace kgip {

/// Eigenpairs of a Hermitian operator D: ascending eigenvalues (the omega_n^2
/// of the field equation) and the matching unit eigenvectors as columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Index size() const { return eigenvalues.size(); }
  bool positive() const { return size() > 0 && eigenvalues.minCoeff() > 0.0; }

  /// V diag(eigenvalues) V^dagger.
  ComplexMatrix reconstruct() const;

  /// Components of v in the eigenbasis, V^dagger v.
  ComplexVector to_modes(const ComplexVector& v) const;
  ComplexVector from_modes(const ComplexVector& c) const;
};

/// Cyclic complex Jacobi diagonalization.
///
/// Sweeps until the off-diagonal Frobenius mass drops below tol * ||M||_F
/// (cap of 100 sweeps), then polishes once more. Eigenvalues are sorted
/// ascending with ties broken by original column; vectors inside a
/// degenerate cluster are re-orthonormalized by modified Gram-Schmidt, and
/// each vector's first largest-modulus entry is made real and positive.
SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& m, double tol = kDefaultTol);

/// Builds the decomposition directly from known eigenpairs (columns of
/// `vectors` assumed orthonormal). Sorts ascending like the solver does.
SpectralDecomposition spectral_from_pairs(RealVector eigenvalues, ComplexMatrix vectors);

/// D^gamma = sum_n (omega_n^2)^gamma |phi_n><phi_n|.
ComplexMatrix operator_power(const SpectralDecomposition& s, double gamma);

/// sum_n f(omega_n^2) |phi_n><phi_n| for an arbitrary real spectral function.
template <typename Fn>
ComplexMatrix spectral_function(const SpectralDecomposition& s, Fn&& f) {
  RealVector w(s.size());
  for (Index n = 0; n < s.size(); ++n) w(n) = f(s.eigenvalues(n));
  return s.eigenvectors * w.asDiagonal() * s.eigenvectors.adjoint();
}

struct ModeLabel {
  int sign = +1;  // +1 or -1, the energy branch
  Index mode = 0;
};

/// Paired right/left eigenvector families of H and H^dagger.
struct BiorthonormalSystem {
  std::vector<ComplexVector> right_vectors;
  std::vector<ComplexVector> left_vectors;
  std::vector<ModeLabel> labels;

  std::size_t size() const { return right_vectors.size(); }
};

struct BiorthonormalReport {
  double max_orthonormality_defect = 0.0;
  double max_completeness_defect = 0.0;
  bool pass = false;
};

BiorthonormalReport check_biorthonormal(const BiorthonormalSystem& sys, double tol = kDefaultTol);

}  // namespace kgip
