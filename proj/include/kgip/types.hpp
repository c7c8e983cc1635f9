#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace kgip {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kDefaultTol = 1e-10;

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NonPositiveSpectrum,
  DimensionMismatch,
  ZeroLambda,
  SingularGauge,
  LambdaMismatch,
  LengthMismatch,
  NonPositiveCoefficient,
  UnpairedComplexEigenvalue,
  MissingSign,
  SingularPropagator,
  NonFiniteState,
  ZeroSteps,
  NonPositiveA,
  OutOfFamily,
  UnresolvedBasis,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to a stable exit path.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Largest entry modulus; the max-norm used for every residual in the project.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// max |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

}  // namespace kgip
