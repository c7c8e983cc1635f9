#include "kgip/random.hpp"

namespace kgip {

ComplexVector random_vector(SplitMix64& rng, Index n) {
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return v;
}

ComplexMatrix random_hermitian(SplitMix64& rng, Index n) {
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return 0.5 * (m + m.adjoint());
}

ComplexMatrix random_unitary(SplitMix64& rng, Index n) {
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexMatrix random_positive_hermitian(SplitMix64& rng, Index n, double w_min, double w_max) {
  const ComplexMatrix q = random_unitary(rng, n);
  RealVector w(n);
  for (Index i = 0; i < n; ++i) w(i) = rng.uniform(w_min, w_max);
  const ComplexMatrix d = q * w.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (d + d.adjoint());
}

FieldState random_field(SplitMix64& rng, Index n) {
  FieldState f;
  f.psi = random_vector(rng, n);
  f.psi_dot = random_vector(rng, n);
  return f;
}

InnerProductSpec random_spec(SplitMix64& rng, std::size_t modes, double lo, double hi) {
  InnerProductSpec spec;
  for (std::size_t i = 0; i < modes; ++i) {
    spec.a_plus_sq.push_back(rng.uniform(lo, hi));
    spec.a_minus_sq.push_back(rng.uniform(lo, hi));
  }
  return spec;
}

}  // namespace kgip
