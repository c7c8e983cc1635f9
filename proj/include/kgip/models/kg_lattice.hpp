#pragma once

#include <cmath>
#include <vector>

#include "kgip/inner_products.hpp"

namespace kgip {

/// Periodic box of side `box_length` with `sites` points per dimension.
/// D = -laplacian + mu^2 with spectral dispersion omega_k^2 = k^2 + mu^2.
struct KleinGordonLattice {
  Index sites = 64;
  double box_length = 2.0 * 3.14159265358979323846;
  double mu = 1.0;
  int dims = 1;

  Index dim() const;
  void validate() const;
};

/// Fourier modes of the lattice, ascending in omega_k^2. Column n of
/// `spectral.eigenvectors` is the Kronecker-normalized plane wave with
/// integer wave index `wave_index[n]` (one entry per dimension) and
/// wavenumber magnitude `k_norm[n]`.
struct KgSpectrum {
  SpectralDecomposition spectral;
  std::vector<std::vector<int>> wave_index;
  std::vector<double> k_norm;
  double mu = 1.0;

  double omega(Index n) const { return std::sqrt(spectral.eigenvalues(n)); }
};

KgSpectrum kg_build(const KleinGordonLattice& lattice);

/// Per-mode weights alpha_+-(k) = (omega_k / mu) a_+-, giving
/// L+- = (a+ +- a-) D^{1/2} / (2 mu).
InnerProductSpec kg_relativistic_spec(const KgSpectrum& spectrum, double a_plus, double a_minus);

/// a = (a+ - a-) / (a+ + a-), the family label after normalizing a+ + a- = 2.
double kg_family_parameter(double a_plus, double a_minus);
/// True when the normalized label lies in the open unit interval.
bool kg_in_normalized_family(double a_plus, double a_minus);

/// (1/2mu)[<psi1|D^1/2|psi2> + <psi1'|D^-1/2|psi2'> + i a (<psi1|psi2'> - <psi1'|psi2>)], |a| < 1.
Complex kg_inner_ri(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum, double a);

/// i/mu (<psi1+|psi2+'> - <psi1-|psi2-'>) with the +-energy parts taken by
/// spectral projection in the two-component eigenbasis.
Complex woodard_inner(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum);

/// (1/2mu)[<psi1|D^1/2|psi2> + <psi1'|D^-1/2|psi2'>].
Complex woodard_inner_closed(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum);

struct EnergySplit {
  FieldState positive;
  FieldState negative;
};

EnergySplit kg_energy_split(const FieldState& f, const KgSpectrum& spectrum);

/// psi = N exp(-i eps omega_n t) phi_n.
FieldState kg_basic_mode(const KgSpectrum& spectrum, int eps, Index mode, double t, Complex norm = 1.0);

/// Superposition sum_n c_n exp(-i omega_n t) phi_n of positive-energy modes.
FieldState kg_positive_energy_solution(const KgSpectrum& spectrum, const ComplexVector& coefficients, double t);

struct NonRelReport {
  Complex lhs;  // relativistic-family product
  Complex rhs;  // a+ <psi1|psi2>
  double relative_gap = 0.0;
  double k_max = 0.0;  // largest |k| carried by either field
};

/// Compares the relativistic-family product with a+ times the L2 product.
NonRelReport kg_nonrel_limit_check(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum,
                                   double a_plus, double a_minus);
NonRelReport kg_nonrel_limit_check(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum,
                                   double a_plus);

}  // namespace kgip
