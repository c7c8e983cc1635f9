#include "kgip/models/wdw.hpp"

#include <cmath>
#include <numbers>

namespace kgip {

void WdwFrwModel::validate() const {
  if (!(mass > 0.0)) throw Error(ErrorKind::InvalidArgument, "mass must be positive");
  if (kappa < -1 || kappa > 1) throw Error(ErrorKind::InvalidArgument, "kappa must be -1, 0 or 1");
  if (modes < 1) throw Error(ErrorKind::InvalidArgument, "at least one mode is required");
  if (!(box > 0.0)) throw Error(ErrorKind::InvalidArgument, "box half-width must be positive");
}

double WdwFrwModel::frequency(double alpha) const { return mass * std::exp(3.0 * alpha); }

RealVector wdw_eigenvalues(const WdwFrwModel& model, double alpha) {
  model.validate();
  RealVector w(model.modes);
  const double shift = model.kappa * std::exp(4.0 * alpha);
  for (Index n = 0; n < model.modes; ++n) w(n) = model.frequency(alpha) * double(2 * n + 1) - shift;
  return w;
}

SpectralDecomposition wdw_operator(const WdwFrwModel& model, double alpha) {
  SpectralDecomposition s;
  s.eigenvalues = wdw_eigenvalues(model, alpha);
  s.eigenvectors = ComplexMatrix::Identity(model.modes, model.modes);
  return s;
}

std::string to_string(WdwPositivity p) {
  switch (p) {
    case WdwPositivity::AllPositive: return "all_positive";
    case WdwPositivity::HasZeroMode: return "has_zero_mode";
    case WdwPositivity::HasNegative: return "has_negative";
  }
  return "unknown";
}

WdwPositivity wdw_positivity(const WdwFrwModel& model, double alpha) {
  model.validate();
  const double oscillator = model.frequency(alpha);
  const double curvature = model.kappa * std::exp(4.0 * alpha);
  const double lowest = oscillator - curvature;
  const double scale = std::max(oscillator, std::abs(curvature));
  if (std::abs(lowest) <= 1e-12 * scale) return WdwPositivity::HasZeroMode;
  return lowest > 0.0 ? WdwPositivity::AllPositive : WdwPositivity::HasNegative;
}

Complex wdw_invariant_inner(const FieldState& f1, const FieldState& f2, const WdwFrwModel& model) {
  if (wdw_positivity(model, model.alpha0) != WdwPositivity::AllPositive) {
    throw Error(ErrorKind::NonPositiveSpectrum, "D(alpha0) is not positive");
  }
  const RealVector w = wdw_eigenvalues(model, model.alpha0);
  for (const FieldState* f : {&f1, &f2}) {
    if (f->psi.size() != model.modes || f->psi_dot.size() != model.modes) {
      throw Error(ErrorKind::DimensionMismatch, "fields must carry one coefficient per mode");
    }
  }
  Complex sum = f1.psi.dot(f2.psi);
  for (Index n = 0; n < model.modes; ++n) sum += std::conj(f1.psi_dot(n)) * f2.psi_dot(n) / w(n);
  return 0.5 * sum;
}

WdwCrossCheck wdw_numeric_crosscheck(const WdwFrwModel& model, double alpha, Index grid) {
  model.validate();
  if (grid < model.modes) throw Error(ErrorKind::InvalidArgument, "grid smaller than the mode count");
  const double h = 2.0 * model.box / static_cast<double>(grid + 1);
  const double omega = model.frequency(alpha);
  const double shift = model.kappa * std::exp(4.0 * alpha);

  Eigen::VectorXd diag(grid);
  Eigen::VectorXd sub = Eigen::VectorXd::Constant(grid - 1, -1.0 / (h * h));
  for (Index i = 0; i < grid; ++i) {
    const double phi = -model.box + static_cast<double>(i + 1) * h;
    diag(i) = 2.0 / (h * h) + omega * omega * phi * phi - shift;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  WdwCrossCheck out;
  out.analytic = wdw_eigenvalues(model, alpha);
  out.numeric = solver.eigenvalues().head(model.modes);
  out.relative_error.resize(model.modes);
  for (Index n = 0; n < model.modes; ++n) {
    const double diff = std::abs(out.numeric(n) - out.analytic(n));
    const double ref = std::abs(out.analytic(n));
    out.relative_error(n) = ref > 0.0 ? diff / ref : diff;
  }
  out.max_relative_error = out.relative_error.maxCoeff();
  if (out.relative_error(model.modes - 1) > 0.05) {
    throw Error(ErrorKind::UnresolvedBasis, "grid does not resolve mode " + std::to_string(model.modes - 1));
  }
  return out;
}

namespace {

// Orthonormal Hermite polynomials p_k (weight exp(-x^2)) for k = 0..n.
RealVector hermite_polynomials(Index n, double x) {
  RealVector p(n + 1);
  p(0) = std::pow(std::numbers::pi, -0.25);
  if (n >= 1) p(1) = std::sqrt(2.0) * x * p(0);
  for (Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    p(k + 1) = std::sqrt(2.0 / (kk + 1.0)) * x * p(k) - std::sqrt(kk / (kk + 1.0)) * p(k - 1);
  }
  return p;
}

RealVector hermite_functions(Index n, double x) {
  RealVector h(n + 1);
  h(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) h(1) = std::sqrt(2.0) * x * h(0);
  for (Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    h(k + 1) = std::sqrt(2.0 / (kk + 1.0)) * x * h(k) - std::sqrt(kk / (kk + 1.0)) * h(k - 1);
  }
  return h;
}

}  // namespace

double hermite_function(Index n, double x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Hermite index must be nonnegative");
  return hermite_functions(n, x)(n);
}

GaussHermiteRule gauss_hermite(Index nodes) {
  if (nodes < 1) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
  // Golub-Welsch start, then Newton on p_n and Christoffel weights.
  ComplexMatrix jacobi = ComplexMatrix::Zero(nodes, nodes);
  for (Index k = 1; k < nodes; ++k) {
    const double b = std::sqrt(static_cast<double>(k) / 2.0);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  GaussHermiteRule rule;
  rule.nodes = hermitian_eigendecompose(jacobi, 1e-14).eigenvalues;
  rule.weights.resize(nodes);
  for (Index i = 0; i < nodes; ++i) {
    double x = rule.nodes(i);
    for (int it = 0; it < 8; ++it) {
      const RealVector p = hermite_polynomials(nodes, x);
      const double deriv = std::sqrt(2.0 * static_cast<double>(nodes)) * p(nodes - 1);
      const double step = p(nodes) / deriv;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes(i) = x;
    const RealVector p = hermite_polynomials(nodes - 1, x);
    rule.weights(i) = 1.0 / p.squaredNorm();
  }
  return rule;
}

ComplexMatrix wdw_basis_overlap(const WdwFrwModel& model, double alpha_from, double alpha_to, Index nodes) {
  model.validate();
  if (2 * nodes <= 2 * (model.modes - 1)) {
    throw Error(ErrorKind::InvalidArgument, "too few quadrature nodes for exact overlaps");
  }
  const double w1 = model.frequency(alpha_from);
  const double w2 = model.frequency(alpha_to);
  const double s = std::sqrt(0.5 * (w1 + w2));
  const double prefactor = std::pow(w1 * w2, 0.25) / s;
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const Index n = model.modes;

  Eigen::MatrixXd overlap = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < nodes; ++i) {
    const double x = rule.nodes(i);
    // The Gaussian factors of both Hermite functions combine to exp(-x^2).
    const double weight = rule.weights(i) * std::exp(x * x);
    const RealVector h1 = hermite_functions(n - 1, std::sqrt(w1) * x / s);
    const RealVector h2 = hermite_functions(n - 1, std::sqrt(w2) * x / s);
    overlap += weight * h1 * h2.transpose();
  }
  return (prefactor * overlap).cast<Complex>();
}

ComplexMatrix wdw_operator_in_basis(const WdwFrwModel& model, double alpha, double alpha_ref) {
  model.validate();
  const double w0 = model.frequency(alpha_ref);
  const double w = model.frequency(alpha);
  const double shift = model.kappa * std::exp(4.0 * alpha);
  const double diag_coeff = 0.5 * (w0 + w * w / w0);
  const double off_coeff = 0.5 * (w * w / w0 - w0);
  const Index n = model.modes;
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    d(k, k) = double(2 * k + 1) * diag_coeff - shift;
    if (k + 2 < n) {
      const double v = off_coeff * std::sqrt(double(k + 1) * double(k + 2));
      d(k, k + 2) = v;
      d(k + 2, k) = v;
    }
  }
  return d;
}

OperatorSource wdw_source(const WdwFrwModel& model) {
  model.validate();
  return OperatorSource::time_dependent(
      [model](double alpha) { return wdw_operator_in_basis(model, alpha, model.alpha0); });
}

}  // namespace kgip
