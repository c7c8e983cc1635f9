#pragma once

#include <string>
#include <vector>

#include "kgip/evolution.hpp"

namespace kgip {

/// FRW minisuperspace with a massive scalar, alpha = ln(scale factor) as time.
/// D(alpha) = -d^2/dphi^2 + m^2 e^{6 alpha} phi^2 - kappa e^{4 alpha}.
struct WdwFrwModel {
  double mass = 1.0;
  int kappa = 0;  // -1 open, 0 flat, +1 closed
  double alpha0 = 0.0;
  Index modes = 8;
  Index grid = 256;
  double box = 10.0;  // grid cross-check covers |phi| <= box

  void validate() const;
  /// Oscillator frequency m e^{3 alpha} of the Hermite basis at alpha.
  double frequency(double alpha) const;
};

/// omega_n^2 = m e^{3 alpha} (2n + 1) - kappa e^{4 alpha}, n = 0..modes-1.
RealVector wdw_eigenvalues(const WdwFrwModel& model, double alpha);

/// D(alpha) in its own instantaneous Hermite basis: analytic eigenvalues,
/// identity eigenvectors. Nonpositive eigenvalues are returned, not rejected.
SpectralDecomposition wdw_operator(const WdwFrwModel& model, double alpha);

enum class WdwPositivity { AllPositive, HasZeroMode, HasNegative };

std::string to_string(WdwPositivity p);

/// Classifies the spectrum through its lowest eigenvalue (n = 0).
WdwPositivity wdw_positivity(const WdwFrwModel& model, double alpha);

/// (1/2)(<psi1|psi2> + <psi1'|D^-1|psi2'>) at alpha0 with D(alpha0); fields are
/// expressed in the Hermite basis anchored at alpha0.
Complex wdw_invariant_inner(const FieldState& f1, const FieldState& f2, const WdwFrwModel& model);

struct WdwCrossCheck {
  RealVector analytic;
  RealVector numeric;
  RealVector relative_error;
  double max_relative_error = 0.0;
};

/// Lowest `modes` eigenvalues of the central-difference discretization on
/// `grid` interior points of [-box, box] with Dirichlet ends, against the
/// analytic spectrum. Throws UnresolvedBasis when mode modes-1 is off by >5%.
WdwCrossCheck wdw_numeric_crosscheck(const WdwFrwModel& model, double alpha, Index grid);

/// Gauss-Hermite rule for weight exp(-x^2).
struct GaussHermiteRule {
  RealVector nodes;
  RealVector weights;
};

GaussHermiteRule gauss_hermite(Index nodes);

/// Normalized Hermite function h_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}.
double hermite_function(Index n, double x);

/// O_{mn} = <m; alpha_from | n; alpha_to> between truncated Hermite bases,
/// by Gauss-Hermite quadrature (exact while m + n < 2 * nodes).
ComplexMatrix wdw_basis_overlap(const WdwFrwModel& model, double alpha_from, double alpha_to, Index nodes = 64);

/// Matrix of D(alpha) in the truncated Hermite basis anchored at alpha_ref.
/// Pentadiagonal; diagonal at alpha = alpha_ref.
ComplexMatrix wdw_operator_in_basis(const WdwFrwModel& model, double alpha, double alpha_ref);

/// alpha -> D(alpha) in the basis anchored at model.alpha0.
OperatorSource wdw_source(const WdwFrwModel& model);

}  // namespace kgip
