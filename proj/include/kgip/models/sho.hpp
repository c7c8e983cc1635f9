#pragma once

#include <functional>

#include "kgip/evolution.hpp"

namespace kgip {

/// x'' + omega(t)^2 x = 0.
struct ShoModel {
  std::function<double(double)> omega;
  bool constant = true;

  static ShoModel fixed(double omega);
  static ShoModel varying(std::function<double(double)> omega);

  double omega_at(double t) const;
  /// D(t) = omega(t)^2 as a 1x1 operator source.
  OperatorSource source() const;
};

/// A complex solution evaluated at one instant.
struct ShoSample {
  Complex x;
  Complex x_dot;

  FieldState field() const;
  static ShoSample from_field(const FieldState& f);
};

/// zeta_eps(t) = exp(-i eps omega t).
ShoSample sho_basic_mode(int eps, double omega, double t);
ShoSample sho_sin(double omega, double t);
ShoSample sho_cos(double omega, double t);

/// (1/2)[L+ (x1* x2 + x1'* x2' / omega^2) + i L- / omega (x1* x2' - x1'* x2)].
Complex sho_inner(const ShoSample& x1, const ShoSample& x2, double omega, double l_plus, double l_minus);

}  // namespace kgip
