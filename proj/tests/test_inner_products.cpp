#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "kgip/inner_products.hpp"
#include "kgip/random.hpp"

using namespace kgip;

namespace {

template <typename Fn>
void expect_kind(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

double min_eigenvalue(const ComplexMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m).eigenvalues().minCoeff();
}

struct Fixture {
  ComplexMatrix d;
  SpectralDecomposition s;
  InnerProductSpec spec;
  FieldState f1;
  FieldState f2;
};

Fixture make_setup(std::uint64_t seed, Index n = 6) {
  SplitMix64 rng(seed);
  Fixture out;
  out.d = random_positive_hermitian(rng, n);
  out.s = hermitian_eigendecompose(out.d);
  out.spec = random_spec(rng, static_cast<std::size_t>(n));
  out.f1 = random_field(rng, n);
  out.f2 = random_field(rng, n);
  return out;
}

// Direct operator form of the invariant product, independent of the mode loop.
Complex solution_inner_operator_form(const Fixture& x) {
  const LPair l = build_L(x.spec, x.s);
  const ComplexMatrix d_inv = x.d.inverse();
  const ComplexMatrix d_inv_half = d_inv.sqrt();
  const Complex i(0.0, 1.0);
  return 0.5 * (x.f1.psi.dot(l.plus * x.f2.psi) + x.f1.psi_dot.dot(l.plus * d_inv * x.f2.psi_dot) +
                i * (x.f1.psi.dot(l.minus * d_inv_half * x.f2.psi_dot) -
                     x.f1.psi_dot.dot(l.minus * d_inv_half * x.f2.psi)));
}

}  // namespace

TEST(Spec, UniformGivesIdentityL) {
  const Fixture x = make_setup(1);
  const LPair l = build_L(InnerProductSpec::uniform(6), x.s);
  EXPECT_LE(max_abs(l.plus - ComplexMatrix::Identity(6, 6)), 1e-13);
  EXPECT_LE(max_abs(l.minus), 1e-15);
}

TEST(Spec, ScalarArithmetic) {
  const SpectralDecomposition s = hermitian_eigendecompose(ComplexMatrix::Constant(1, 1, 2.0));
  const LPair l = build_L({{3.0}, {1.0}}, s);
  EXPECT_NEAR(l.plus(0, 0).real(), 2.0, 1e-15);
  EXPECT_NEAR(l.minus(0, 0).real(), 1.0, 1e-15);
}

TEST(Spec, Validation) {
  const Fixture x = make_setup(2);
  expect_kind(ErrorKind::LengthMismatch, [&] { build_L(InnerProductSpec::uniform(5), x.s); });
  InnerProductSpec bad = InnerProductSpec::uniform(6);
  bad.a_minus_sq[3] = 0.0;
  expect_kind(ErrorKind::NonPositiveCoefficient, [&] { build_L(bad, x.s); });
  bad.a_minus_sq[3] = -1.0;
  expect_kind(ErrorKind::NonPositiveCoefficient, [&] { eta_tilde_plus(x.s, 1.0, bad); });
}

TEST(EtaTilde, UniformSpecReducesToEtaPlus) {
  const Fixture x = make_setup(3);
  const EtaOperator eta = eta_tilde_plus(x.s, 0.9, InnerProductSpec::uniform(6));
  EXPECT_LE(max_abs(eta.matrix - eta_plus(x.s, 0.9)), 1e-13);
}

TEST(EtaTilde, EqualsTransportedEtaPlus) {
  for (std::uint64_t seed = 10; seed < 15; ++seed) {
    const Fixture x = make_setup(seed);
    const double lambda = 0.5 + 0.3 * double(seed - 10);
    const HamiltonianEigensystem sys = eigen_system(x.s, lambda);
    const ComplexMatrix a = symmetry_generator(sys, x.spec);
    const ComplexMatrix transported = a.adjoint() * eta_plus(x.s, lambda) * a;
    EXPECT_LE(max_abs(eta_tilde_plus(x.s, lambda, x.spec).matrix - transported), 1e-12);
  }
}

TEST(EtaTilde, PositiveAndPseudoHermitian) {
  const Fixture x = make_setup(4);
  const EtaOperator eta = eta_tilde_plus(x.s, 1.7, x.spec);
  EXPECT_TRUE(eta.positive);
  EXPECT_GT(min_eigenvalue(eta.matrix), 0.0);
  EXPECT_LE(pseudo_hermiticity_defect(eta.matrix, build_hamiltonian(x.d, 1.7).matrix), 1e-12);
  EXPECT_LE(hermiticity_defect(eta.matrix), 1e-15);
}

TEST(EtaTilde, RejectsNonPositiveAndZeroLambda) {
  const SpectralDecomposition neg = hermitian_eigendecompose(ComplexMatrix::Constant(1, 1, -1.0));
  expect_kind(ErrorKind::NonPositiveSpectrum, [&] { eta_tilde_plus(neg, 1.0, InnerProductSpec::uniform(1)); });
  const Fixture x = make_setup(5);
  expect_kind(ErrorKind::ZeroLambda, [&] { eta_tilde_plus(x.s, 0.0, x.spec); });
}

TEST(SymmetryGenerator, CommutesWithHamiltonian) {
  const Fixture x = make_setup(6);
  const HamiltonianEigensystem sys = eigen_system(x.s, 1.1);
  const ComplexMatrix a = symmetry_generator(sys, x.spec);
  const ComplexMatrix h = build_hamiltonian(x.d, 1.1).matrix;
  EXPECT_LE(max_abs(a * h - h * a), 1e-12);
}

TEST(EtaGeneral, AllPlusIsEtaPlus) {
  const Fixture x = make_setup(7);
  const HamiltonianEigensystem sys = eigen_system(x.s, 1.3);
  const EtaOperator eta = eta_general(sys, {std::vector<int>(12, +1)});
  EXPECT_TRUE(eta.positive);
  EXPECT_LE(max_abs(eta.matrix - eta_plus(x.s, 1.3)), 1e-12);
}

TEST(EtaGeneral, FlippedSignFlipsPseudoNorm) {
  const Fixture x = make_setup(8, 3);
  const HamiltonianEigensystem sys = eigen_system(x.s, 1.0);
  std::vector<int> sigma(6, +1);
  sigma[0] = -1;
  const EtaOperator eta = eta_general(sys, {sigma});
  EXPECT_FALSE(eta.positive);
  const auto& psi0 = sys.vectors.right_vectors[0];
  EXPECT_NEAR(std::abs(psi0.dot(eta.matrix * psi0) + 1.0), 0.0, 1e-12);
  EXPECT_LE(pseudo_hermiticity_defect(eta.matrix, build_hamiltonian(x.d, 1.0).matrix), 1e-12);
}

TEST(EtaGeneral, SignCountErrors) {
  const Fixture x = make_setup(9, 2);
  const HamiltonianEigensystem sys = eigen_system(x.s, 1.0);
  expect_kind(ErrorKind::MissingSign, [&] { eta_general(sys, {{1, 1, 1}}); });
  expect_kind(ErrorKind::LengthMismatch, [&] { eta_general(sys, {{1, 1, 1, 1, 1}}); });
}

TEST(EtaGeneral, ComplexPairsArePairedAndNull) {
  RealVector w(3);
  w << -3.0, 1.0, 2.0;
  SplitMix64 rng(20);
  const ComplexMatrix q = random_unitary(rng, 3);
  const ComplexMatrix d = q * w.cast<Complex>().asDiagonal() * q.adjoint();
  const HamiltonianEigensystem sys = pseudo_real_eigen_system(hermitian_eigendecompose(d), 1.0);
  const EtaOperator eta = eta_general(sys, {{1, 1, 1, 1}});
  EXPECT_FALSE(eta.positive);
  EXPECT_LE(pseudo_hermiticity_defect(eta.matrix, build_hamiltonian(d, 1.0).matrix), 1e-12);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& psi = sys.vectors.right_vectors[k];
    EXPECT_LE(std::abs(psi.dot(eta.matrix * psi)), 1e-12);
  }
}

TEST(EtaGeneral, UnpairedComplexRejected) {
  HamiltonianEigensystem sys = pseudo_real_eigen_system(
      hermitian_eigendecompose(ComplexMatrix::Constant(1, 1, -1.0)), 1.0);
  sys.energies[1] = Complex(0.0, -5.0);
  expect_kind(ErrorKind::UnpairedComplexEigenvalue, [&] { eta_general(sys, {{}}); });
}

TEST(SolutionInner, CosineTrajectoryIsHalf) {
  const SpectralDecomposition s = hermitian_eigendecompose(ComplexMatrix::Constant(1, 1, 4.0));
  for (double t : {0.0, 0.3, 1.7, 9.2}) {
    const FieldState x{ComplexVector::Constant(1, std::cos(2 * t)), ComplexVector::Constant(1, -2 * std::sin(2 * t))};
    EXPECT_NEAR(std::abs(solution_inner(x, x, s, InnerProductSpec::uniform(1)) - 0.5), 0.0, 1e-15);
  }
}

TEST(SolutionInner, MatchesOperatorForm) {
  for (std::uint64_t seed = 30; seed < 35; ++seed) {
    const Fixture x = make_setup(seed);
    const Complex ref = solution_inner_operator_form(x);
    EXPECT_LE(std::abs(solution_inner(x.f1, x.f2, x.s, x.spec) - ref), 1e-11 * std::max(1.0, std::abs(ref)));
  }
}

TEST(SolutionInner, EqualsScaledTwoComponentProduct) {
  const Fixture x = make_setup(40);
  for (double lambda : {0.5, 1.0, 2.0, -1.5}) {
    const Complex two = two_component_inner(pack(x.f1, lambda), pack(x.f2, lambda), eta_tilde_plus(x.s, lambda, x.spec));
    EXPECT_LE(std::abs(two / (lambda * lambda) - solution_inner(x.f1, x.f2, x.s, x.spec)), 1e-12);
  }
}

TEST(SolutionInner, HermitianAndPositive) {
  const Fixture x = make_setup(41);
  const Complex a = solution_inner(x.f1, x.f2, x.s, x.spec);
  const Complex b = solution_inner(x.f2, x.f1, x.s, x.spec);
  EXPECT_LE(std::abs(a - std::conj(b)), 1e-13);
  EXPECT_GT(solution_inner(x.f1, x.f1, x.s, x.spec).real(), 0.0);
}

TEST(TwoComponentInner, IdentityAndSigmaThree) {
  const Fixture x = make_setup(42);
  const TwoComponentState a = pack(x.f1, 1.0);
  const TwoComponentState b = pack(x.f2, 1.0);
  EXPECT_LE(std::abs(two_component_inner(a, b, ComplexMatrix::Identity(12, 12)) - a.stacked().dot(b.stacked())), 1e-14);
  EXPECT_LE(std::abs(two_component_inner(a, b, sigma3(6)) - kg_inner(a, b)), 1e-14);
  expect_kind(ErrorKind::DimensionMismatch, [&] { two_component_inner(a, b, ComplexMatrix::Identity(4, 4)); });
}

TEST(EtaInv, UnitaryPreservesIdentity) {
  SplitMix64 rng(43);
  const ComplexMatrix u = random_unitary(rng, 4);
  const EtaOperator eta0{ComplexMatrix::Identity(4, 4), true, 1.0};
  EXPECT_LE(max_abs(eta_inv(u, eta0).matrix - ComplexMatrix::Identity(4, 4)), 1e-14);
  expect_kind(ErrorKind::SingularPropagator, [&] { eta_inv(ComplexMatrix::Zero(4, 4), eta0); });
}

TEST(PseudoUnitary, ExactCases) {
  SplitMix64 rng(44);
  const EtaOperator id{ComplexMatrix::Identity(3, 3), true, 1.0};
  const PseudoUnitaryReport unitary = check_pseudo_unitary(random_unitary(rng, 3), id);
  EXPECT_LE(unitary.defect, 1e-14);
  EXPECT_TRUE(unitary.pass);
  const PseudoUnitaryReport scaled = check_pseudo_unitary(2.0 * ComplexMatrix::Identity(3, 3), id);
  EXPECT_NEAR(scaled.defect, 3.0, 1e-15);
  EXPECT_FALSE(scaled.pass);
}

TEST(PseudoUnitary, MatrixExponentialOfPseudoHermitianH) {
  const Fixture x = make_setup(45);
  const ComplexMatrix h = build_hamiltonian(x.d, 0.7).matrix;
  const ComplexMatrix u = (Complex(0.0, -3.0) * h).exp();
  const EtaOperator eta = eta_tilde_plus(x.s, 0.7, x.spec);
  EXPECT_TRUE(check_pseudo_unitary(u, eta, 1e-9).pass);
  // The transported metric stays the same for constant H.
  EXPECT_LE(max_abs(eta_inv(u, eta).matrix - eta.matrix), 1e-9);
}

TEST(Frozen, UsesSampleAtT0) {
  const Fixture x = make_setup(46);
  FieldTrajectory t1{{0.0, 1.0}, {x.f2, x.f1}};
  FieldTrajectory t2{{0.0, 1.0}, {x.f1, x.f2}};
  EXPECT_EQ(invariant_inner_frozen(t1, t2, 1.0, x.s, x.spec), solution_inner(x.f1, x.f2, x.s, x.spec));
  EXPECT_THROW(invariant_inner_frozen(t1, t2, 0.5, x.s, x.spec), Error);
}
