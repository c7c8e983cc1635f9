#include "kgip/models/kg_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kgip {

Index KleinGordonLattice::dim() const {
  Index n = 1;
  for (int d = 0; d < dims; ++d) n *= sites;
  return n;
}

void KleinGordonLattice::validate() const {
  if (sites < 1) throw Error(ErrorKind::InvalidArgument, "lattice needs at least one site");
  if (dims < 1 || dims > 3) throw Error(ErrorKind::InvalidArgument, "lattice dimension must be 1, 2 or 3");
  if (!(box_length > 0.0)) throw Error(ErrorKind::InvalidArgument, "box length must be positive");
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mu must be positive");
  if (dim() > 4096) throw Error(ErrorKind::InvalidArgument, "lattice too large for dense operators");
}

namespace {

// Row-major multi-index of a flat index.
std::vector<Index> unflatten(Index flat, Index sites, int dims) {
  std::vector<Index> out(static_cast<std::size_t>(dims));
  for (int d = dims - 1; d >= 0; --d) {
    out[static_cast<std::size_t>(d)] = flat % sites;
    flat /= sites;
  }
  return out;
}

void require_solution_dims(const FieldState& f, const KgSpectrum& s) {
  if (f.psi.size() != s.spectral.eigenvectors.rows() || f.psi_dot.size() != f.psi.size()) {
    throw Error(ErrorKind::DimensionMismatch, "field does not live on this lattice");
  }
}

}  // namespace

KgSpectrum kg_build(const KleinGordonLattice& lattice) {
  lattice.validate();
  const Index n = lattice.dim();
  const Index sites = lattice.sites;
  const Index shift = sites / 2;
  const double two_pi = 2.0 * std::numbers::pi;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  RealVector values(n);
  ComplexMatrix vectors(n, n);
  std::vector<std::vector<int>> index(static_cast<std::size_t>(n));
  std::vector<double> k_norm(static_cast<std::size_t>(n));

  for (Index m = 0; m < n; ++m) {
    const auto slots = unflatten(m, sites, lattice.dims);
    std::vector<int> j(slots.size());
    double k2 = 0.0;
    for (std::size_t d = 0; d < slots.size(); ++d) {
      j[d] = static_cast<int>(slots[d] - shift);
      const double k = two_pi * j[d] / lattice.box_length;
      k2 += k * k;
    }
    values(m) = k2 + lattice.mu * lattice.mu;
    for (Index p = 0; p < n; ++p) {
      const auto pos = unflatten(p, sites, lattice.dims);
      Index phase = 0;
      for (std::size_t d = 0; d < pos.size(); ++d) phase += static_cast<Index>(j[d]) * pos[d];
      phase = ((phase % sites) + sites) % sites;
      const double angle = two_pi * static_cast<double>(phase) / static_cast<double>(sites);
      vectors(p, m) = norm * Complex(std::cos(angle), std::sin(angle));
    }
    index[static_cast<std::size_t>(m)] = std::move(j);
    k_norm[static_cast<std::size_t>(m)] = std::sqrt(k2);
  }

  // Reorder the mode table the same way spectral_from_pairs orders columns.
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index m = 0; m < n; ++m) order[static_cast<std::size_t>(m)] = m;
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values(a) < values(b); });

  KgSpectrum out;
  out.mu = lattice.mu;
  out.spectral = spectral_from_pairs(values, vectors);
  for (Index m : order) {
    out.wave_index.push_back(index[static_cast<std::size_t>(m)]);
    out.k_norm.push_back(k_norm[static_cast<std::size_t>(m)]);
  }
  return out;
}

InnerProductSpec kg_relativistic_spec(const KgSpectrum& spectrum, double a_plus, double a_minus) {
  if (!(a_plus > 0.0) || !(a_minus > 0.0)) throw Error(ErrorKind::NonPositiveA, "a+ and a- must be positive");
  InnerProductSpec spec;
  for (Index n = 0; n < spectrum.spectral.size(); ++n) {
    const double scale = spectrum.omega(n) / spectrum.mu;
    spec.a_plus_sq.push_back(scale * a_plus);
    spec.a_minus_sq.push_back(scale * a_minus);
  }
  return spec;
}

double kg_family_parameter(double a_plus, double a_minus) {
  const double total = a_plus + a_minus;
  if (!(total > 0.0)) throw Error(ErrorKind::NonPositiveA, "a+ + a- must be positive");
  return (a_plus - a_minus) / total;
}

bool kg_in_normalized_family(double a_plus, double a_minus) {
  return std::abs(kg_family_parameter(a_plus, a_minus)) < 1.0;
}

Complex kg_inner_ri(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum, double a) {
  if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::OutOfFamily, "family label must lie in (-1, 1)");
  require_solution_dims(f1, spectrum);
  require_solution_dims(f2, spectrum);
  const ComplexMatrix root = operator_power(spectrum.spectral, 0.5);
  const ComplexMatrix inv_root = operator_power(spectrum.spectral, -0.5);
  const Complex i(0.0, 1.0);
  const Complex value = f1.psi.dot(root * f2.psi) + f1.psi_dot.dot(inv_root * f2.psi_dot) +
                        i * a * (f1.psi.dot(f2.psi_dot) - f1.psi_dot.dot(f2.psi));
  return value / (2.0 * spectrum.mu);
}

EnergySplit kg_energy_split(const FieldState& f, const KgSpectrum& spectrum) {
  require_solution_dims(f, spectrum);
  constexpr double lambda = 1.0;
  const HamiltonianEigensystem sys = eigen_system(spectrum.spectral, lambda);
  const ComplexVector state = pack(f, lambda).stacked();
  ComplexVector plus = ComplexVector::Zero(state.size());
  ComplexVector minus = ComplexVector::Zero(state.size());
  for (std::size_t i = 0; i < sys.vectors.size(); ++i) {
    const Complex c = sys.vectors.left_vectors[i].dot(state);
    (sys.vectors.labels[i].sign > 0 ? plus : minus) += c * sys.vectors.right_vectors[i];
  }
  return {unpack(TwoComponentState::from_stacked(plus, lambda)), unpack(TwoComponentState::from_stacked(minus, lambda))};
}

Complex woodard_inner(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum) {
  if (!spectrum.spectral.positive()) throw Error(ErrorKind::NonPositiveSpectrum, "D must be positive");
  const EnergySplit s1 = kg_energy_split(f1, spectrum);
  const EnergySplit s2 = kg_energy_split(f2, spectrum);
  const Complex i(0.0, 1.0);
  return (i / spectrum.mu) *
         (s1.positive.psi.dot(s2.positive.psi_dot) - s1.negative.psi.dot(s2.negative.psi_dot));
}

Complex woodard_inner_closed(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum) {
  if (!spectrum.spectral.positive()) throw Error(ErrorKind::NonPositiveSpectrum, "D must be positive");
  require_solution_dims(f1, spectrum);
  require_solution_dims(f2, spectrum);
  const ComplexMatrix root = operator_power(spectrum.spectral, 0.5);
  const ComplexMatrix inv_root = operator_power(spectrum.spectral, -0.5);
  return (f1.psi.dot(root * f2.psi) + f1.psi_dot.dot(inv_root * f2.psi_dot)) / (2.0 * spectrum.mu);
}

FieldState kg_basic_mode(const KgSpectrum& spectrum, int eps, Index mode, double t, Complex norm) {
  if (eps != 1 && eps != -1) throw Error(ErrorKind::InvalidArgument, "energy sign must be +1 or -1");
  if (mode < 0 || mode >= spectrum.spectral.size()) throw Error(ErrorKind::InvalidArgument, "mode index out of range");
  const double w = spectrum.omega(mode);
  const Complex amp = norm * std::exp(Complex(0.0, -eps * w * t));
  FieldState f;
  f.psi = amp * spectrum.spectral.eigenvectors.col(mode);
  f.psi_dot = Complex(0.0, -eps * w) * f.psi;
  return f;
}

FieldState kg_positive_energy_solution(const KgSpectrum& spectrum, const ComplexVector& coefficients, double t) {
  const Index n = spectrum.spectral.size();
  if (coefficients.size() != n) throw Error(ErrorKind::DimensionMismatch, "one coefficient per mode expected");
  ComplexVector c(n);
  ComplexVector cdot(n);
  for (Index m = 0; m < n; ++m) {
    const double w = spectrum.omega(m);
    c(m) = coefficients(m) * std::exp(Complex(0.0, -w * t));
    cdot(m) = Complex(0.0, -w) * c(m);
  }
  return {spectrum.spectral.from_modes(c), spectrum.spectral.from_modes(cdot)};
}

NonRelReport kg_nonrel_limit_check(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum,
                                   double a_plus, double a_minus) {
  require_solution_dims(f1, spectrum);
  require_solution_dims(f2, spectrum);
  NonRelReport r;
  r.lhs = solution_inner(f1, f2, spectrum.spectral, kg_relativistic_spec(spectrum, a_plus, a_minus));
  r.rhs = a_plus * f1.psi.dot(f2.psi);
  r.relative_gap = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);

  for (const FieldState* f : {&f1, &f2}) {
    const ComplexVector a = spectrum.spectral.to_modes(f->psi);
    const ComplexVector b = spectrum.spectral.to_modes(f->psi_dot);
    const double top = std::max(max_abs(a), max_abs(b));
    for (Index m = 0; m < a.size(); ++m) {
      if (std::abs(a(m)) > 1e-12 * top || std::abs(b(m)) > 1e-12 * top) {
        r.k_max = std::max(r.k_max, spectrum.k_norm[static_cast<std::size_t>(m)]);
      }
    }
  }
  return r;
}

NonRelReport kg_nonrel_limit_check(const FieldState& f1, const FieldState& f2, const KgSpectrum& spectrum,
                                   double a_plus) {
  return kg_nonrel_limit_check(f1, f2, spectrum, a_plus, a_plus);
}

}  // namespace kgip
