#include "kgip/evolution.hpp"

#include <cmath>

namespace kgip {

OperatorSource OperatorSource::constant(ComplexMatrix d) {
  OperatorSource s;
  s.constant_ = hermitian_eigendecompose(d);
  s.constant_matrix_ = std::move(d);
  return s;
}

OperatorSource OperatorSource::constant(SpectralDecomposition d) {
  OperatorSource s;
  s.constant_matrix_ = d.reconstruct();
  s.constant_ = std::move(d);
  return s;
}

OperatorSource OperatorSource::time_dependent(Fn fn, double tol) {
  OperatorSource s;
  s.fn_ = std::move(fn);
  s.tol_ = tol;
  return s;
}

ComplexMatrix OperatorSource::matrix_at(double t) const {
  if (constant_matrix_) return *constant_matrix_;
  return fn_(t);
}

SpectralDecomposition OperatorSource::spectrum_at(double t) const {
  if (constant_) return *constant_;
  return hermitian_eigendecompose(fn_(t), tol_);
}

Index OperatorSource::dim() const {
  if (constant_matrix_) return constant_matrix_->rows();
  return fn_(0.0).rows();
}

ComplexMatrix step_propagator(const SpectralDecomposition& d, double lambda, double tau) {
  if (lambda == 0.0) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  const Index n = d.size();
  RealVector cos_part(n);
  RealVector sinc_part(n);  // sin(omega tau) / omega
  for (Index k = 0; k < n; ++k) {
    const double w2 = d.eigenvalues(k);
    if (w2 > 0.0) {
      const double w = std::sqrt(w2);
      cos_part(k) = std::cos(w * tau);
      sinc_part(k) = std::sin(w * tau) / w;
    } else if (w2 < 0.0) {
      const double w = std::sqrt(-w2);
      cos_part(k) = std::cosh(w * tau);
      sinc_part(k) = std::sinh(w * tau) / w;
    } else {
      cos_part(k) = 1.0;
      sinc_part(k) = tau;
    }
  }
  const RealVector d_sinc = d.eigenvalues.cwiseProduct(sinc_part);
  const ComplexMatrix& v = d.eigenvectors;
  auto lift = [&](const RealVector& w) -> ComplexMatrix { return v * w.cast<Complex>().asDiagonal() * v.adjoint(); };
  const ComplexMatrix c = lift(cos_part);
  const ComplexMatrix s = lift(sinc_part) / lambda;
  const ComplexMatrix ds = lambda * lift(d_sinc);
  const Complex half_i(0.0, 0.5);

  const Index dim = v.rows();
  ComplexMatrix u(2 * dim, 2 * dim);
  u.topLeftCorner(dim, dim) = c - half_i * (ds + s);
  u.topRightCorner(dim, dim) = -half_i * (ds - s);
  u.bottomLeftCorner(dim, dim) = -half_i * (s - ds);
  u.bottomRightCorner(dim, dim) = c + half_i * (ds + s);
  return u;
}

namespace {

double relative_deviation(Complex value, Complex reference) {
  const double diff = std::abs(value - reference);
  const double scale = std::abs(reference);
  return scale > 0.0 ? diff / scale : diff;
}

void guard(const ComplexVector& v, double limit, double t) {
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (!std::isfinite(a) || a > limit) {
      throw Error(ErrorKind::NonFiniteState, "state blew up at t = " + std::to_string(t));
    }
  }
}

}  // namespace

EvolutionResult evolve_schrodinger(const HamiltonianSource& h, const TwoComponentState& psi0, double t0, double t1,
                                   std::size_t steps, EvolveOptions opts) {
  if (steps == 0) throw Error(ErrorKind::ZeroSteps, "at least one step is required");
  if (!(t1 > t0)) throw Error(ErrorKind::InvalidArgument, "t1 must exceed t0");
  if (psi0.lambda != h.lambda) throw Error(ErrorKind::LambdaMismatch, "initial state packed with a different lambda");
  if (psi0.field_dim() != h.d.dim()) throw Error(ErrorKind::DimensionMismatch, "state and operator dimensions differ");
  const std::size_t stride = std::max<std::size_t>(1, opts.record_stride);

  const double dt = (t1 - t0) / static_cast<double>(steps);
  const Index dim = 2 * psi0.field_dim();
  const Complex kg0 = kg_inner(psi0, psi0);

  EvolutionResult out;
  out.propagator = ComplexMatrix::Identity(dim, dim);
  ComplexVector state = psi0.stacked();
  out.times.push_back(t0);
  out.states.push_back(psi0);
  out.drift.push_back(0.0);

  std::optional<ComplexMatrix> fixed_step;
  if (h.d.is_constant()) fixed_step = step_propagator(h.d.spectrum_at(t0), h.lambda, dt);

  for (std::size_t k = 0; k < steps; ++k) {
    const double t_mid = t0 + (static_cast<double>(k) + 0.5) * dt;
    const ComplexMatrix step = fixed_step ? *fixed_step : step_propagator(h.d.spectrum_at(t_mid), h.lambda, dt);
    out.propagator = step * out.propagator;
    state = step * state;
    const double t = k + 1 == steps ? t1 : t0 + static_cast<double>(k + 1) * dt;
    guard(state, opts.blowup, t);
    if ((k + 1) % stride == 0 || k + 1 == steps) {
      auto s = TwoComponentState::from_stacked(state, h.lambda);
      out.drift.push_back(relative_deviation(kg_inner(s, s), kg0));
      out.times.push_back(t);
      out.states.push_back(std::move(s));
    }
  }
  return out;
}

FieldTrajectory evolve_field(const OperatorSource& d, const FieldState& f0, double t0, double t1, std::size_t steps,
                             EvolveOptions opts) {
  if (steps == 0) throw Error(ErrorKind::ZeroSteps, "at least one step is required");
  if (!(t1 > t0)) throw Error(ErrorKind::InvalidArgument, "t1 must exceed t0");
  if (f0.psi.size() != f0.psi_dot.size() || f0.psi.size() != d.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "field and operator dimensions differ");
  }
  const std::size_t stride = std::max<std::size_t>(1, opts.record_stride);
  const double h = (t1 - t0) / static_cast<double>(steps);

  std::optional<ComplexMatrix> fixed;
  if (d.is_constant()) fixed = d.matrix_at(t0);
  auto op = [&](double t) -> ComplexMatrix { return fixed ? *fixed : d.matrix_at(t); };

  FieldTrajectory traj;
  traj.times.push_back(t0);
  traj.states.push_back(f0);
  ComplexVector x = f0.psi;
  ComplexVector v = f0.psi_dot;

  for (std::size_t k = 0; k < steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    const ComplexMatrix d0 = op(t);
    const ComplexMatrix dm = fixed ? *fixed : op(t + 0.5 * h);
    const ComplexMatrix d1 = fixed ? *fixed : op(t + h);

    const ComplexVector k1x = v;
    const ComplexVector k1v = -(d0 * x);
    const ComplexVector k2x = v + 0.5 * h * k1v;
    const ComplexVector k2v = -(dm * (x + 0.5 * h * k1x));
    const ComplexVector k3x = v + 0.5 * h * k2v;
    const ComplexVector k3v = -(dm * (x + 0.5 * h * k2x));
    const ComplexVector k4x = v + h * k3v;
    const ComplexVector k4v = -(d1 * (x + h * k3x));
    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

    const double t_next = k + 1 == steps ? t1 : t0 + static_cast<double>(k + 1) * h;
    guard(x, opts.blowup, t_next);
    guard(v, opts.blowup, t_next);
    if ((k + 1) % stride == 0 || k + 1 == steps) {
      traj.times.push_back(t_next);
      traj.states.push_back({x, v});
    }
  }
  return traj;
}

std::string to_string(Monitor m) {
  switch (m) {
    case Monitor::SolutionInner: return "solution_inner";
    case Monitor::KgInner: return "kg_inner";
    case Monitor::FrozenInner: return "frozen_inner";
  }
  return "unknown";
}

const MonitorSeries& DriftTable::get(Monitor m) const {
  for (const auto& s : series) {
    if (s.monitor == m) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "monitor " + to_string(m) + " not in table");
}

DriftTable drift_report(const FieldTrajectory& traj1, const FieldTrajectory& traj2, const OperatorSource& d,
                        const InnerProductSpec& spec, const std::vector<Monitor>& monitors, double lambda) {
  if (traj1.size() == 0 || traj1.size() != traj2.size() || traj1.states.size() != traj1.size() ||
      traj2.states.size() != traj2.size()) {
    throw Error(ErrorKind::LengthMismatch, "trajectories must be nonempty and sampled alike");
  }
  DriftTable table;
  table.times = traj1.times;
  const double t0 = traj1.times.front();
  const SpectralDecomposition d0 = d.spectrum_at(t0);

  std::optional<Complex> frozen;
  for (Monitor m : monitors) {
    MonitorSeries series{m, {}, {}, 0.0};
    for (std::size_t i = 0; i < traj1.size(); ++i) {
      Complex value;
      switch (m) {
        case Monitor::SolutionInner:
          value = solution_inner(traj1.states[i], traj2.states[i],
                                 d.is_constant() ? d0 : d.spectrum_at(traj1.times[i]), spec);
          break;
        case Monitor::KgInner:
          value = kg_inner(traj1.states[i], traj2.states[i], lambda);
          break;
        case Monitor::FrozenInner:
          if (!frozen) frozen = invariant_inner_frozen(traj1, traj2, t0, d0, spec);
          value = *frozen;
          break;
      }
      series.values.push_back(value);
      const double dev = relative_deviation(value, series.values.front());
      series.relative_drift.push_back(dev);
      series.max_drift = std::max(series.max_drift, dev);
    }
    table.series.push_back(std::move(series));
  }
  return table;
}

}  // namespace kgip
