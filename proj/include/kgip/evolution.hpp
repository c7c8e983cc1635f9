#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgip/inner_products.hpp"

namespace kgip {

/// Time-indexed Hermitian D(t). A constant source is diagonalized once.
class OperatorSource {
 public:
  using Fn = std::function<ComplexMatrix(double)>;

  static OperatorSource constant(ComplexMatrix d);
  static OperatorSource constant(SpectralDecomposition d);
  static OperatorSource time_dependent(Fn fn, double tol = kDefaultTol);

  bool is_constant() const { return static_cast<bool>(constant_); }
  ComplexMatrix matrix_at(double t) const;
  SpectralDecomposition spectrum_at(double t) const;
  Index dim() const;

 private:
  Fn fn_;
  std::optional<SpectralDecomposition> constant_;
  std::optional<ComplexMatrix> constant_matrix_;
  double tol_ = kDefaultTol;
};

/// The two-component Hamiltonian H(t) generated by D(t) at fixed lambda.
struct HamiltonianSource {
  OperatorSource d;
  double lambda = 1.0;

  TwoComponentHamiltonian at(double t) const { return build_hamiltonian(d.matrix_at(t), lambda); }
};

/// exp(-i tau H) for the Hamiltonian built from D's spectral data. Each mode
/// block satisfies H_n^2 = omega_n^2 I, so the exponential is
/// cos(omega tau) I - i sin(omega tau)/omega H_n, valid for any sign of omega^2.
ComplexMatrix step_propagator(const SpectralDecomposition& d, double lambda, double tau);

struct EvolutionResult {
  ComplexMatrix propagator;               // U(t1, t0)
  std::vector<double> times;
  std::vector<TwoComponentState> states;  // U(t, t0) Psi0 at each recorded time
  std::vector<double> drift;              // relative drift of the KG norm from t0
};

struct EvolveOptions {
  std::size_t record_stride = 1;
  double blowup = 1e12;
};

/// Ordered product of midpoint step propagators exp(-i dt H(t_mid)).
EvolutionResult evolve_schrodinger(const HamiltonianSource& h, const TwoComponentState& psi0, double t0, double t1,
                                   std::size_t steps, EvolveOptions opts = {});

/// Fixed-step RK4 for psi'' = -D(t) psi written as a first-order system.
FieldTrajectory evolve_field(const OperatorSource& d, const FieldState& f0, double t0, double t1, std::size_t steps,
                             EvolveOptions opts = {});

enum class Monitor { SolutionInner, KgInner, FrozenInner };

std::string to_string(Monitor m);

struct MonitorSeries {
  Monitor monitor;
  std::vector<Complex> values;
  std::vector<double> relative_drift;
  double max_drift = 0.0;
};

struct DriftTable {
  std::vector<double> times;
  std::vector<MonitorSeries> series;

  const MonitorSeries& get(Monitor m) const;
};

/// Per-sample relative deviation of each monitor from its value at the first
/// sample. SolutionInner uses the instantaneous D(t); FrozenInner keeps D(t0)
/// and the t0 data. When the t0 value vanishes the deviation is absolute.
DriftTable drift_report(const FieldTrajectory& traj1, const FieldTrajectory& traj2, const OperatorSource& d,
                        const InnerProductSpec& spec, const std::vector<Monitor>& monitors, double lambda = 1.0);

}  // namespace kgip
