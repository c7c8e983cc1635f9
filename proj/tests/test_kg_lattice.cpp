#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kgip/models/kg_lattice.hpp"
#include "kgip/random.hpp"

using namespace kgip;

namespace {

KgSpectrum lattice(Index sites, double mu, int dims = 1) {
  KleinGordonLattice l;
  l.sites = sites;
  l.mu = mu;
  l.dims = dims;
  return kg_build(l);
}

// Periodic spectral Laplacian applied through an explicit DFT sum.
ComplexVector apply_d(const ComplexVector& f, double mu) {
  const Index n = f.size();
  ComplexVector out = ComplexVector::Zero(n);
  for (Index j = -(n / 2); j < n - n / 2; ++j) {
    Complex c = 0.0;
    for (Index p = 0; p < n; ++p) c += std::exp(Complex(0.0, -2.0 * std::numbers::pi * double(j * p) / double(n))) * f(p);
    c /= double(n);
    for (Index p = 0; p < n; ++p) {
      out(p) += double(j * j + mu * mu) * c * std::exp(Complex(0.0, 2.0 * std::numbers::pi * double(j * p) / double(n)));
    }
  }
  return out;
}

}  // namespace

TEST(KgLattice, SpectrumIsDispersion) {
  const KgSpectrum s = lattice(16, 2.0);
  EXPECT_DOUBLE_EQ(s.spectral.eigenvalues(0), 4.0);
  for (Index m = 0; m < s.spectral.size(); ++m) {
    const double k = s.k_norm[static_cast<std::size_t>(m)];
    EXPECT_NEAR(s.spectral.eigenvalues(m), k * k + 4.0, 1e-12);
    EXPECT_NEAR(k, std::abs(s.wave_index[static_cast<std::size_t>(m)][0]), 1e-12);
  }
  EXPECT_LE(max_abs(s.spectral.eigenvectors.adjoint() * s.spectral.eigenvectors - ComplexMatrix::Identity(16, 16)), 1e-12);
}

TEST(KgLattice, OperatorMatchesDirectFourierSum) {
  const KgSpectrum s = lattice(12, 1.5);
  SplitMix64 rng(1);
  const ComplexVector f = random_vector(rng, 12);
  EXPECT_LE(max_abs(s.spectral.reconstruct() * f - apply_d(f, 1.5)), 1e-11);
}

TEST(KgLattice, TwoDimensionalModes) {
  const KgSpectrum s = lattice(4, 1.0, 2);
  EXPECT_EQ(s.spectral.size(), 16);
  EXPECT_EQ(s.wave_index.front().size(), 2u);
  EXPECT_NEAR(s.spectral.eigenvalues(15), 8.0 + 1.0, 1e-12);  // j = (-2, -2)
}

TEST(KgLattice, Validation) {
  KleinGordonLattice l;
  l.dims = 4;
  EXPECT_THROW(kg_build(l), Error);
  l.dims = 3;
  l.sites = 32;  // 32768 points, beyond the dense cap
  EXPECT_THROW(kg_build(l), Error);
  l.dims = 1;
  l.mu = 0.0;
  EXPECT_THROW(kg_build(l), Error);
}

TEST(KgFamily, ParameterAndBoundary) {
  EXPECT_DOUBLE_EQ(kg_family_parameter(1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(kg_family_parameter(3.0, 1.0), 0.5);
  EXPECT_FALSE(kg_in_normalized_family(2.0, 0.0));
  EXPECT_TRUE(kg_in_normalized_family(1.9, 0.1));
  const KgSpectrum s = lattice(8, 1.0);
  EXPECT_THROW(kg_relativistic_spec(s, 2.0, 0.0), Error);
  SplitMix64 rng(2);
  const FieldState f = random_field(rng, 8);
  try {
    kg_inner_ri(f, f, s, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfFamily);
  }
}

TEST(KgFamily, ZeroMemberIsWoodard) {
  const KgSpectrum s = lattice(32, 5.0);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldState f1 = random_field(rng, 32);
    const FieldState f2 = random_field(rng, 32);
    const Complex ri = kg_inner_ri(f1, f2, s, 0.0);
    EXPECT_LE(std::abs(woodard_inner(f1, f2, s) - ri), 1e-10 * std::abs(ri));
    EXPECT_LE(std::abs(woodard_inner_closed(f1, f2, s) - ri), 1e-10 * std::abs(ri));
  }
}

TEST(KgFamily, MatchesRelativisticSpec) {
  const KgSpectrum s = lattice(16, 2.0);
  SplitMix64 rng(4);
  const FieldState f1 = random_field(rng, 16);
  const FieldState f2 = random_field(rng, 16);
  for (double a : {-0.6, 0.0, 0.3}) {
    const Complex general = solution_inner(f1, f2, s.spectral, kg_relativistic_spec(s, 1.0 + a, 1.0 - a));
    EXPECT_LE(std::abs(kg_inner_ri(f1, f2, s, a) - general), 1e-12 * std::abs(general));
    EXPECT_GT(kg_inner_ri(f1, f1, s, a).real(), 0.0);
  }
}

TEST(KgFamily, BasicModeGram) {
  const KgSpectrum s = lattice(8, 3.0);
  const Complex norm(1.5, -0.5);
  for (double a : {0.0, 0.4}) {
    for (Index m1 = 0; m1 < 8; ++m1) {
      for (int e1 : {+1, -1}) {
        const FieldState b1 = kg_basic_mode(s, e1, m1, 0.25, norm);
        for (Index m2 = 0; m2 < 8; ++m2) {
          for (int e2 : {+1, -1}) {
            const Complex v = kg_inner_ri(b1, kg_basic_mode(s, e2, m2, 0.25, norm), s, a);
            const double expected =
                m1 == m2 && e1 == e2 ? (1.0 + e1 * a) * s.omega(m1) / s.mu * std::norm(norm) : 0.0;
            EXPECT_NEAR(std::abs(v - expected), 0.0, 1e-12);
          }
        }
      }
    }
  }
}

TEST(KgFamily, EnergySplitRecombines) {
  const KgSpectrum s = lattice(8, 1.0);
  SplitMix64 rng(5);
  const FieldState f = random_field(rng, 8);
  const EnergySplit split = kg_energy_split(f, s);
  EXPECT_LE(max_abs(split.positive.psi + split.negative.psi - f.psi), 1e-12);
  EXPECT_LE(max_abs(split.positive.psi_dot + split.negative.psi_dot - f.psi_dot), 1e-12);
  // Positive part evolves as exp(-i omega t): psi_dot = -i D^1/2 psi.
  const ComplexMatrix root = operator_power(s.spectral, 0.5);
  EXPECT_LE(max_abs(split.positive.psi_dot + Complex(0, 1) * (root * split.positive.psi)), 1e-12);
  EXPECT_LE(max_abs(split.negative.psi_dot - Complex(0, 1) * (root * split.negative.psi)), 1e-12);
}

TEST(KgFamily, PositiveEnergySolutionSolvesFieldEquation) {
  const KgSpectrum s = lattice(8, 2.0);
  ComplexVector c = ComplexVector::Zero(8);
  c(0) = 1.0;
  c(3) = Complex(0.2, 0.5);
  const double t = 0.6;
  const double h = 1e-4;
  const FieldState mid = kg_positive_energy_solution(s, c, t);
  const FieldState up = kg_positive_energy_solution(s, c, t + h);
  const FieldState down = kg_positive_energy_solution(s, c, t - h);
  const ComplexVector accel = (up.psi - 2.0 * mid.psi + down.psi) / (h * h);
  EXPECT_LE(max_abs(accel + s.spectral.reconstruct() * mid.psi), 1e-5);
  EXPECT_LE(max_abs((up.psi - down.psi) / (2 * h) - mid.psi_dot), 1e-6);
}

TEST(NonRelLimit, GapShrinksQuadratically) {
  auto gap = [](double mu) {
    const KgSpectrum s = lattice(16, mu);
    ComplexVector c = ComplexVector::Zero(16);
    c(0) = 0.7;
    c(1) = Complex(0.1, 0.4);
    c(2) = -0.3;
    const FieldState f = kg_positive_energy_solution(s, c, 0.0);
    const NonRelReport r = kg_nonrel_limit_check(f, f, s, 1.0);
    EXPECT_DOUBLE_EQ(r.k_max, 1.0);
    return r.relative_gap;
  };
  const double g10 = gap(10.0);
  EXPECT_LT(g10, 0.02);
  EXPECT_NEAR(g10 / gap(100.0), 100.0, 2.0);
}
