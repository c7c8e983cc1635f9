#include "kgip/inner_products.hpp"

#include <cmath>

namespace kgip {

namespace {

ComplexMatrix blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d) {
  const Index n = a.rows();
  ComplexMatrix out(2 * n, 2 * n);
  out << a, b, c, d;
  return out;
}

void require_positive(const SpectralDecomposition& d) {
  if (!d.positive()) throw Error(ErrorKind::NonPositiveSpectrum, "D must have a strictly positive spectrum");
}

}  // namespace

InnerProductSpec InnerProductSpec::uniform(std::size_t modes) {
  return {std::vector<double>(modes, 1.0), std::vector<double>(modes, 1.0)};
}

InnerProductSpec InnerProductSpec::from_scalars(std::size_t modes, double l_plus, double l_minus) {
  return {std::vector<double>(modes, l_plus + l_minus), std::vector<double>(modes, l_plus - l_minus)};
}

void InnerProductSpec::validate(std::size_t modes) const {
  if (a_plus_sq.size() != modes || a_minus_sq.size() != modes) {
    throw Error(ErrorKind::LengthMismatch, "spec has " + std::to_string(a_plus_sq.size()) + "/" +
                                               std::to_string(a_minus_sq.size()) + " weights for " +
                                               std::to_string(modes) + " modes");
  }
  for (std::size_t n = 0; n < modes; ++n) {
    const bool ok = a_plus_sq[n] > 0.0 && a_minus_sq[n] > 0.0 && std::isfinite(a_plus_sq[n]) &&
                    std::isfinite(a_minus_sq[n]);
    if (!ok) throw Error(ErrorKind::NonPositiveCoefficient, "weights of mode " + std::to_string(n) + " must be positive");
  }
}

LPair build_L(const InnerProductSpec& spec, const SpectralDecomposition& d) {
  spec.validate(static_cast<std::size_t>(d.size()));
  RealVector plus(d.size());
  RealVector minus(d.size());
  for (Index n = 0; n < d.size(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    plus(n) = 0.5 * (spec.a_plus_sq[i] + spec.a_minus_sq[i]);
    minus(n) = 0.5 * (spec.a_plus_sq[i] - spec.a_minus_sq[i]);
  }
  const ComplexMatrix& v = d.eigenvectors;
  return {v * plus.cast<Complex>().asDiagonal() * v.adjoint(), v * minus.cast<Complex>().asDiagonal() * v.adjoint()};
}

EtaOperator eta_tilde_plus(const SpectralDecomposition& d, double lambda, const InnerProductSpec& spec) {
  require_positive(d);
  if (lambda == 0.0) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  const auto [l_plus, l_minus] = build_L(spec, d);
  const ComplexMatrix d_inv = operator_power(d, -1.0);
  const ComplexMatrix d_inv_half = operator_power(d, -0.5);
  const Index n = d.eigenvectors.rows();
  const ComplexMatrix l2 = lambda * lambda * ComplexMatrix::Identity(n, n);

  const ComplexMatrix diag = l_plus * (l2 + d_inv);
  const ComplexMatrix off = l_plus * (l2 - d_inv);
  const ComplexMatrix twist = 2.0 * lambda * l_minus * d_inv_half;
  ComplexMatrix eta = blocks(diag + twist, off, off, diag - twist) / 8.0;
  return {0.5 * (eta + eta.adjoint()), true, lambda};
}

ComplexMatrix symmetry_generator(const HamiltonianEigensystem& sys, const InnerProductSpec& spec) {
  const auto& v = sys.vectors;
  std::size_t modes = 0;
  for (const auto& label : v.labels) modes = std::max(modes, static_cast<std::size_t>(label.mode) + 1);
  spec.validate(modes);
  const Index dim = v.right_vectors.front().size();
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto mode = static_cast<std::size_t>(v.labels[i].mode);
    const double weight = std::sqrt(v.labels[i].sign > 0 ? spec.a_plus_sq[mode] : spec.a_minus_sq[mode]);
    a += weight * v.right_vectors[i] * v.left_vectors[i].adjoint();
  }
  return a;
}

EtaOperator eta_general(const HamiltonianEigensystem& sys, const SignAssignment& signs, double pair_tol) {
  const auto& v = sys.vectors;
  const std::size_t count = v.size();
  if (count == 0 || sys.energies.size() != count) {
    throw Error(ErrorKind::DimensionMismatch, "eigensystem and energy list disagree");
  }
  double scale = 1.0;
  for (const auto& e : sys.energies) scale = std::max(scale, std::abs(e));
  const double cut = pair_tol * scale;

  const Index dim = v.left_vectors.front().size();
  ComplexMatrix eta = ComplexMatrix::Zero(dim, dim);
  std::vector<bool> used(count, false);
  std::size_t next_sign = 0;
  bool positive = true;

  for (std::size_t i = 0; i < count; ++i) {
    const Complex e = sys.energies[i];
    if (std::abs(e.imag()) <= cut) {
      if (next_sign >= signs.sigma.size()) {
        throw Error(ErrorKind::MissingSign, "no sign supplied for real eigenvalue label " + std::to_string(i));
      }
      const int s = signs.sigma[next_sign++];
      if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +1 or -1");
      positive = positive && s > 0;
      eta += double(s) * v.left_vectors[i] * v.left_vectors[i].adjoint();
      continue;
    }
    positive = false;
    if (used[i]) continue;
    if (e.imag() < 0.0) continue;  // paired from its positive-imaginary partner
    std::size_t partner = count;
    for (std::size_t j = 0; j < count; ++j) {
      if (!used[j] && j != i && sys.energies[j].imag() < -cut && std::abs(sys.energies[j] - std::conj(e)) <= cut) {
        partner = j;
        break;
      }
    }
    if (partner == count) {
      throw Error(ErrorKind::UnpairedComplexEigenvalue, "eigenvalue label " + std::to_string(i) + " has no conjugate partner");
    }
    used[i] = used[partner] = true;
    eta += v.left_vectors[i] * v.left_vectors[partner].adjoint() + v.left_vectors[partner] * v.left_vectors[i].adjoint();
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(sys.energies[i].imag()) > cut && !used[i]) {
      throw Error(ErrorKind::UnpairedComplexEigenvalue, "eigenvalue label " + std::to_string(i) + " has no conjugate partner");
    }
  }
  if (next_sign != signs.sigma.size()) {
    throw Error(ErrorKind::LengthMismatch, "more signs than real eigenvalue labels");
  }
  return {0.5 * (eta + eta.adjoint()), positive, sys.lambda};
}

Complex solution_inner(const FieldState& f1, const FieldState& f2, const SpectralDecomposition& d,
                       const InnerProductSpec& spec) {
  require_positive(d);
  spec.validate(static_cast<std::size_t>(d.size()));
  const ComplexVector a1 = d.to_modes(f1.psi);
  const ComplexVector b1 = d.to_modes(f1.psi_dot);
  const ComplexVector a2 = d.to_modes(f2.psi);
  const ComplexVector b2 = d.to_modes(f2.psi_dot);
  const Complex i(0.0, 1.0);
  Complex sum = 0.0;
  for (Index n = 0; n < d.size(); ++n) {
    const auto k = static_cast<std::size_t>(n);
    const double w2 = d.eigenvalues(n);
    const double l_plus = 0.5 * (spec.a_plus_sq[k] + spec.a_minus_sq[k]);
    const double l_minus = 0.5 * (spec.a_plus_sq[k] - spec.a_minus_sq[k]);
    sum += l_plus * (std::conj(a1(n)) * a2(n) + std::conj(b1(n)) * b2(n) / w2) +
           i * (l_minus / std::sqrt(w2)) * (std::conj(a1(n)) * b2(n) - std::conj(b1(n)) * a2(n));
  }
  return 0.5 * sum;
}

Complex two_component_inner(const TwoComponentState& s1, const TwoComponentState& s2, const ComplexMatrix& eta) {
  const ComplexVector v1 = s1.stacked();
  const ComplexVector v2 = s2.stacked();
  if (v1.size() != v2.size() || eta.rows() != v1.size() || eta.cols() != v1.size()) {
    throw Error(ErrorKind::DimensionMismatch, "state and metric dimensions differ");
  }
  return v1.dot(eta * v2);
}

Complex two_component_inner(const TwoComponentState& s1, const TwoComponentState& s2, const EtaOperator& eta) {
  return two_component_inner(s1, s2, eta.matrix);
}

namespace {

const FieldState& sample_at(const FieldTrajectory& traj, double t0) {
  if (traj.times.size() != traj.states.size()) throw Error(ErrorKind::LengthMismatch, "trajectory times and states differ");
  const double slack = 1e-12 * std::max(1.0, std::abs(t0));
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (std::abs(traj.times[i] - t0) <= slack) return traj.states[i];
  }
  throw Error(ErrorKind::InvalidArgument, "trajectory carries no sample at t0 = " + std::to_string(t0));
}

}  // namespace

Complex invariant_inner_frozen(const FieldTrajectory& traj1, const FieldTrajectory& traj2, double t0,
                               const SpectralDecomposition& d_at_t0, const InnerProductSpec& spec) {
  return solution_inner(sample_at(traj1, t0), sample_at(traj2, t0), d_at_t0, spec);
}

EtaOperator eta_inv(const ComplexMatrix& u, const EtaOperator& eta0) {
  if (u.rows() != u.cols() || u.rows() != eta0.matrix.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "propagator and metric dimensions differ");
  }
  Eigen::FullPivLU<ComplexMatrix> lu(u);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularPropagator, "propagator is not invertible");
  const ComplexMatrix u_inv = lu.inverse();
  const ComplexMatrix m = u_inv.adjoint() * eta0.matrix * u_inv;
  return {0.5 * (m + m.adjoint()), eta0.positive, eta0.lambda};
}

PseudoUnitaryReport check_pseudo_unitary(const ComplexMatrix& u, const EtaOperator& eta0, double tol) {
  const Index n = u.rows();
  const ComplexMatrix lhs = eta0.matrix.fullPivLu().solve(u.adjoint() * eta0.matrix * u);
  PseudoUnitaryReport r;
  r.defect = max_abs(lhs - ComplexMatrix::Identity(n, n));
  r.pass = r.defect <= tol;
  return r;
}

double pseudo_hermiticity_defect(const ComplexMatrix& eta, const ComplexMatrix& h) {
  return max_abs(eta * h - h.adjoint() * eta);
}

}  // namespace kgip
