#include "kgip/two_component.hpp"

#include <cmath>

namespace kgip {

namespace {

void require_lambda(double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) throw Error(ErrorKind::ZeroLambda, "lambda must be a nonzero finite real");
}

ComplexMatrix blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d) {
  const Index n = a.rows();
  ComplexMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = a;
  out.topRightCorner(n, n) = b;
  out.bottomLeftCorner(n, n) = c;
  out.bottomRightCorner(n, n) = d;
  return out;
}

HamiltonianEigensystem build_eigensystem(const SpectralDecomposition& d, double lambda, bool allow_negative) {
  require_lambda(lambda);
  HamiltonianEigensystem out;
  out.lambda = lambda;
  const Index n = d.size();
  const Index dim = d.eigenvectors.rows();
  for (Index k = 0; k < n; ++k) {
    const double w2 = d.eigenvalues(k);
    if (w2 == 0.0 || (!allow_negative && w2 < 0.0)) {
      throw Error(ErrorKind::NonPositiveSpectrum,
                  "mode " + std::to_string(k) + " has omega^2 = " + std::to_string(w2));
    }
    const Complex omega = std::sqrt(Complex(w2, 0.0));
    const Complex inv_conj = 1.0 / std::conj(omega);
    const ComplexVector phi = d.eigenvectors.col(k);
    for (int sign : {+1, -1}) {
      ComplexVector right(2 * dim);
      right.head(dim) = (1.0 / lambda + double(sign) * omega) * phi;
      right.tail(dim) = (1.0 / lambda - double(sign) * omega) * phi;
      ComplexVector left(2 * dim);
      left.head(dim) = 0.25 * (lambda + double(sign) * inv_conj) * phi;
      left.tail(dim) = 0.25 * (lambda - double(sign) * inv_conj) * phi;
      out.vectors.right_vectors.push_back(std::move(right));
      out.vectors.left_vectors.push_back(std::move(left));
      out.vectors.labels.push_back({sign, k});
      out.energies.push_back(double(sign) * omega);
    }
  }
  return out;
}

}  // namespace

ComplexVector TwoComponentState::stacked() const {
  ComplexVector v(2 * upper.size());
  v << upper, lower;
  return v;
}

TwoComponentState TwoComponentState::from_stacked(const ComplexVector& v, double lambda) {
  if (v.size() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "stacked state must have even length");
  const Index n = v.size() / 2;
  return {v.head(n), v.tail(n), lambda};
}

TwoComponentState pack(const FieldState& f, double lambda) {
  require_lambda(lambda);
  if (f.psi.size() != f.psi_dot.size()) throw Error(ErrorKind::DimensionMismatch, "psi and psi_dot differ in length");
  const Complex il(0.0, lambda);
  return {f.psi + il * f.psi_dot, f.psi - il * f.psi_dot, lambda};
}

FieldState unpack(const TwoComponentState& s) {
  require_lambda(s.lambda);
  if (s.upper.size() != s.lower.size()) throw Error(ErrorKind::DimensionMismatch, "components differ in length");
  const Complex two_il(0.0, 2.0 * s.lambda);
  return {0.5 * (s.upper + s.lower), (s.upper - s.lower) / two_il};
}

TwoComponentHamiltonian build_hamiltonian(const ComplexMatrix& d, double lambda, double tol) {
  require_lambda(lambda);
  if (d.rows() != d.cols()) throw Error(ErrorKind::DimensionMismatch, "D must be square");
  if (hermiticity_defect(d) > tol) throw Error(ErrorKind::NotHermitian, "D is not Hermitian");
  const Index n = d.rows();
  const ComplexMatrix ld = lambda * d;
  const ComplexMatrix inv = ComplexMatrix::Identity(n, n) / lambda;
  TwoComponentHamiltonian h;
  h.lambda = lambda;
  h.matrix = 0.5 * h.hbar * blocks(ld + inv, ld - inv, -ld + inv, -ld - inv);
  return h;
}

ComplexMatrix sigma3(Index field_dim) {
  ComplexMatrix s = ComplexMatrix::Identity(2 * field_dim, 2 * field_dim);
  s.bottomRightCorner(field_dim, field_dim) *= -1.0;
  return s;
}

ComplexMatrix gauge_transform(const TwoComponentHamiltonian& h, const Eigen::Matrix2cd& g,
                              const Eigen::Matrix2cd& g_dot) {
  const Complex det = g.determinant();
  if (std::abs(det) <= 1e-14 * std::max(1.0, g.cwiseAbs().maxCoeff() * g.cwiseAbs().maxCoeff())) {
    throw Error(ErrorKind::SingularGauge, "gauge matrix is singular");
  }
  const Eigen::Matrix2cd g_inv = g.inverse();
  const Index n = h.field_dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  auto lift = [&](const Eigen::Matrix2cd& m) { return blocks(m(0, 0) * id, m(0, 1) * id, m(1, 0) * id, m(1, 1) * id); };
  const Complex i_hbar(0.0, h.hbar);
  return lift(g) * h.matrix * lift(g_inv) + i_hbar * lift(g_dot * g_inv);
}

HamiltonianEigensystem eigen_system(const SpectralDecomposition& d, double lambda) {
  return build_eigensystem(d, lambda, false);
}

HamiltonianEigensystem pseudo_real_eigen_system(const SpectralDecomposition& d, double lambda) {
  return build_eigensystem(d, lambda, true);
}

ComplexMatrix eta_plus(const SpectralDecomposition& d, double lambda) {
  require_lambda(lambda);
  const ComplexMatrix d_inv = operator_power(d, -1.0);
  const Index n = d_inv.rows();
  const ComplexMatrix l2 = lambda * lambda * ComplexMatrix::Identity(n, n);
  return blocks(l2 + d_inv, l2 - d_inv, l2 - d_inv, l2 + d_inv) / 8.0;
}

Complex kg_inner(const TwoComponentState& s1, const TwoComponentState& s2) {
  if (s1.lambda != s2.lambda) throw Error(ErrorKind::LambdaMismatch, "states packed with different lambda");
  if (s1.field_dim() != s2.field_dim() || s1.lower.size() != s2.lower.size()) {
    throw Error(ErrorKind::DimensionMismatch, "states differ in dimension");
  }
  return s1.upper.dot(s2.upper) - s1.lower.dot(s2.lower);
}

Complex kg_inner(const FieldState& f1, const FieldState& f2, double lambda) {
  if (f1.size() != f2.size()) throw Error(ErrorKind::DimensionMismatch, "fields differ in dimension");
  return Complex(0.0, 2.0 * lambda) * (f1.psi.dot(f2.psi_dot) - f1.psi_dot.dot(f2.psi));
}

}  // namespace kgip
