#include "kgip/models/sho.hpp"

#include <cmath>

namespace kgip {

ShoModel ShoModel::fixed(double omega) {
  if (!(omega > 0.0)) throw Error(ErrorKind::InvalidArgument, "omega must be positive");
  return {[omega](double) { return omega; }, true};
}

ShoModel ShoModel::varying(std::function<double(double)> omega) { return {std::move(omega), false}; }

double ShoModel::omega_at(double t) const {
  const double w = omega(t);
  if (!(w > 0.0)) throw Error(ErrorKind::InvalidArgument, "omega(t) must stay positive");
  return w;
}

OperatorSource ShoModel::source() const {
  auto d_of_t = [model = *this](double t) {
    const double w = model.omega_at(t);
    return ComplexMatrix::Constant(1, 1, w * w);
  };
  if (constant) return OperatorSource::constant(d_of_t(0.0));
  return OperatorSource::time_dependent(d_of_t);
}

FieldState ShoSample::field() const {
  FieldState f;
  f.psi = ComplexVector::Constant(1, x);
  f.psi_dot = ComplexVector::Constant(1, x_dot);
  return f;
}

ShoSample ShoSample::from_field(const FieldState& f) {
  if (f.psi.size() != 1 || f.psi_dot.size() != 1) throw Error(ErrorKind::DimensionMismatch, "oscillator state is scalar");
  return {f.psi(0), f.psi_dot(0)};
}

ShoSample sho_basic_mode(int eps, double omega, double t) {
  const Complex z = std::exp(Complex(0.0, -eps * omega * t));
  return {z, Complex(0.0, -eps * omega) * z};
}

ShoSample sho_sin(double omega, double t) { return {std::sin(omega * t), omega * std::cos(omega * t)}; }

ShoSample sho_cos(double omega, double t) { return {std::cos(omega * t), -omega * std::sin(omega * t)}; }

Complex sho_inner(const ShoSample& x1, const ShoSample& x2, double omega, double l_plus, double l_minus) {
  if (!(omega > 0.0)) throw Error(ErrorKind::InvalidArgument, "omega must be positive");
  if (!(l_plus + l_minus > 0.0) || !(l_plus - l_minus > 0.0)) {
    throw Error(ErrorKind::NonPositiveA, "L+ +- L- must both be positive");
  }
  const Complex i(0.0, 1.0);
  return 0.5 * (l_plus * (std::conj(x1.x) * x2.x + std::conj(x1.x_dot) * x2.x_dot / (omega * omega)) +
                i * (l_minus / omega) * (std::conj(x1.x) * x2.x_dot - std::conj(x1.x_dot) * x2.x));
}

}  // namespace kgip
