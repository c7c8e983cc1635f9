#include "kgip/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kgip {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonPositiveSpectrum: return "NonPositiveSpectrum";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::SingularGauge: return "SingularGauge";
    case ErrorKind::LambdaMismatch: return "LambdaMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::UnpairedComplexEigenvalue: return "UnpairedComplexEigenvalue";
    case ErrorKind::MissingSign: return "MissingSign";
    case ErrorKind::SingularPropagator: return "SingularPropagator";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::ZeroSteps: return "ZeroSteps";
    case ErrorKind::NonPositiveA: return "NonPositiveA";
    case ErrorKind::OutOfFamily: return "OutOfFamily";
    case ErrorKind::UnresolvedBasis: return "UnresolvedBasis";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hermiticity check needs a square matrix");
  }
  return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

ComplexVector SpectralDecomposition::to_modes(const ComplexVector& v) const {
  if (v.size() != eigenvectors.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match operator dimension");
  }
  return eigenvectors.adjoint() * v;
}

ComplexVector SpectralDecomposition::from_modes(const ComplexVector& c) const {
  if (c.size() != eigenvectors.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "mode vector length does not match operator dimension");
  }
  return eigenvectors * c;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing a(p, q). J = diag(1, e^{-i phi}) * R(c, s), so
// that J^dagger A J reduces to the real symmetric 2x2 case.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Index p, Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

void sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const Index n = a.rows();
  for (Index p = 0; p + 1 < n; ++p) {
    for (Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
}

void normalize_phase(Eigen::Ref<ComplexVector> col) {
  const double top = col.cwiseAbs().maxCoeff();
  if (top == 0.0) return;
  for (Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) >= (1.0 - 1e-12) * top) {
      const Complex phase = std::conj(col(i)) / std::abs(col(i));
      col *= phase;
      col(i) = std::abs(col(i));
      return;
    }
  }
}

void gram_schmidt(ComplexMatrix& v, Index begin, Index end) {
  for (Index j = begin; j < end; ++j) {
    for (Index k = begin; k < j; ++k) {
      const Complex proj = v.col(k).dot(v.col(j));
      v.col(j) -= proj * v.col(k);
    }
    v.col(j).normalize();
  }
}

// Sort ascending (stable on column index), re-orthonormalize degenerate
// clusters, fix phases.
SpectralDecomposition finalize(RealVector values, ComplexMatrix vectors) {
  const Index n = values.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values(a) < values(b); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(vectors.rows(), n);
  for (Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = values(order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }

  const double scale = n > 0 ? out.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  const double gap = 1e-8 * scale;
  Index begin = 0;
  for (Index k = 1; k <= n; ++k) {
    const bool split = k == n || (out.eigenvalues(k) - out.eigenvalues(k - 1)) > gap;
    if (split) {
      if (k - begin > 1) gram_schmidt(out.eigenvectors, begin, k);
      begin = k;
    }
  }
  for (Index k = 0; k < n; ++k) normalize_phase(out.eigenvectors.col(k));
  return out;
}

}  // namespace

SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition needs a non-empty square matrix");
  }
  if (!all_finite(m)) throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
  const double asym = hermiticity_defect(m);
  if (asym > tol) {
    throw Error(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(asym));
  }

  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(m.rows(), m.cols());
  const double scale = a.norm();

  constexpr int kMaxSweeps = 100;
  bool converged = off_diagonal_norm(a) <= tol * scale;
  for (int it = 0; it < kMaxSweeps && !converged; ++it) {
    sweep(a, v);
    converged = off_diagonal_norm(a) <= tol * scale;
    if (converged) sweep(a, v);
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence, "Jacobi iteration hit the sweep cap");
  }
  return finalize(a.diagonal().real(), std::move(v));
}

SpectralDecomposition spectral_from_pairs(RealVector eigenvalues, ComplexMatrix vectors) {
  if (vectors.cols() != eigenvalues.size()) {
    throw Error(ErrorKind::DimensionMismatch, "eigenvalue count does not match eigenvector count");
  }
  const Index n = eigenvalues.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return eigenvalues(a) < eigenvalues(b); });
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(vectors.rows(), n);
  for (Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = eigenvalues(order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

ComplexMatrix operator_power(const SpectralDecomposition& s, double gamma) {
  const bool integral = std::floor(gamma) == gamma;
  if (gamma < 0.0 || !integral) {
    for (Index n = 0; n < s.size(); ++n) {
      if (!(s.eigenvalues(n) > 0.0)) {
        throw Error(ErrorKind::NonPositiveSpectrum,
                    "power " + std::to_string(gamma) + " needs a strictly positive spectrum");
      }
    }
  }
  if (gamma == 0.0) return ComplexMatrix::Identity(s.eigenvectors.rows(), s.eigenvectors.rows());
  return spectral_function(s, [gamma](double w) { return std::pow(w, gamma); });
}

BiorthonormalReport check_biorthonormal(const BiorthonormalSystem& sys, double tol) {
  if (sys.right_vectors.size() != sys.left_vectors.size() || sys.right_vectors.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "left and right families differ in length");
  }
  const Index dim = sys.right_vectors.front().size();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.right_vectors[i].size() != dim || sys.left_vectors[i].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
    }
  }

  const auto count = static_cast<Index>(sys.size());
  ComplexMatrix right(dim, count);
  ComplexMatrix left(dim, count);
  for (Index i = 0; i < count; ++i) {
    right.col(i) = sys.right_vectors[static_cast<std::size_t>(i)];
    left.col(i) = sys.left_vectors[static_cast<std::size_t>(i)];
  }

  BiorthonormalReport report;
  report.max_orthonormality_defect = max_abs(left.adjoint() * right - ComplexMatrix::Identity(count, count));
  report.max_completeness_defect = max_abs(right * left.adjoint() - ComplexMatrix::Identity(dim, dim));
  report.pass = report.max_orthonormality_defect <= tol && report.max_completeness_defect <= tol;
  return report;
}

}  // namespace kgip
