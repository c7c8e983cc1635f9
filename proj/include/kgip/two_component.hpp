#pragma once

#include <vector>

#include "kgip/spectral_core.hpp"

namespace kgip {

/// Initial data (psi, psi_dot) of the second-order equation psi'' + D psi = 0.
struct FieldState {
  ComplexVector psi;
  ComplexVector psi_dot;

  Index size() const { return psi.size(); }
};

/// Two-component vector (psi + i lambda psi_dot, psi - i lambda psi_dot).
struct TwoComponentState {
  ComplexVector upper;
  ComplexVector lower;
  double lambda = 1.0;

  Index field_dim() const { return upper.size(); }

  /// upper stacked over lower, the element of C^2 (x) H~.
  ComplexVector stacked() const;
  static TwoComponentState from_stacked(const ComplexVector& v, double lambda);
};

/// Dense 2N x 2N Hamiltonian of the first-order form, hbar = 1.
struct TwoComponentHamiltonian {
  ComplexMatrix matrix;
  double lambda = 1.0;
  double hbar = 1.0;

  Index field_dim() const { return matrix.rows() / 2; }
};

TwoComponentState pack(const FieldState& f, double lambda);
FieldState unpack(const TwoComponentState& s);

/// (hbar/2) [[lambda D + 1/lambda, lambda D - 1/lambda], [-lambda D + 1/lambda, -lambda D - 1/lambda]].
TwoComponentHamiltonian build_hamiltonian(const ComplexMatrix& d, double lambda, double tol = kDefaultTol);

/// diag(I, -I) of size 2n.
ComplexMatrix sigma3(Index field_dim);

/// g H g^{-1} + i hbar g_dot g^{-1}, with the 2x2 gauge acting blockwise as scalars.
ComplexMatrix gauge_transform(const TwoComponentHamiltonian& h, const Eigen::Matrix2cd& g,
                              const Eigen::Matrix2cd& g_dot);

/// Biorthonormal eigensystem of H together with its eigenvalues E_{+-,n}.
/// Ordering is (+,0), (-,0), (+,1), (-,1), ...
struct HamiltonianEigensystem {
  BiorthonormalSystem vectors;
  std::vector<Complex> energies;
  double lambda = 1.0;
};

/// Analytic eigensystem for a strictly positive spectrum of D.
HamiltonianEigensystem eigen_system(const SpectralDecomposition& d, double lambda);

/// Same construction with omega_n = sqrt(omega_n^2) taken complex, so negative
/// eigenvalues of D give imaginary conjugate pairs. Zero modes are rejected.
HamiltonianEigensystem pseudo_real_eigen_system(const SpectralDecomposition& d, double lambda);

/// (1/8)[[lambda^2 + D^-1, lambda^2 - D^-1], [lambda^2 - D^-1, lambda^2 + D^-1]].
ComplexMatrix eta_plus(const SpectralDecomposition& d, double lambda);

/// <Psi1 | sigma3 Psi2>, the Klein-Gordon product.
Complex kg_inner(const TwoComponentState& s1, const TwoComponentState& s2);

/// Klein-Gordon product written through the field data,
/// 2 i lambda (<psi1|psi2_dot> - <psi1_dot|psi2>).
Complex kg_inner(const FieldState& f1, const FieldState& f2, double lambda);

}  // namespace kgip
