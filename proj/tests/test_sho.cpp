#include <gtest/gtest.h>

#include <cmath>

#include "kgip/models/sho.hpp"

using namespace kgip;

TEST(Sho, BasicModesAreOrthogonalWithWeights) {
  for (auto [a_plus, a_minus] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 3.0}}) {
    const double l_plus = 0.5 * (a_plus + a_minus);
    const double l_minus = 0.5 * (a_plus - a_minus);
    for (double t : {0.0, 0.4, 7.0}) {
      const ShoSample p = sho_basic_mode(+1, 1.5, t);
      const ShoSample m = sho_basic_mode(-1, 1.5, t);
      EXPECT_NEAR(std::abs(sho_inner(p, p, 1.5, l_plus, l_minus) - a_plus), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(sho_inner(m, m, 1.5, l_plus, l_minus) - a_minus), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(sho_inner(p, m, 1.5, l_plus, l_minus)), 0.0, 1e-12);
    }
  }
}

TEST(Sho, CosineHasNormHalf) {
  for (double t : {0.0, 1.1, 3.3}) {
    EXPECT_NEAR(std::abs(sho_inner(sho_cos(2.0, t), sho_cos(2.0, t), 2.0, 1.0, 0.0) - 0.5), 0.0, 1e-15);
  }
}

TEST(Sho, KgValuesOfBasicModes) {
  for (double lambda : {0.5, 2.0}) {
    for (double omega : {1.0, 3.0}) {
      const Complex pp = kg_inner(sho_basic_mode(+1, omega, 0.2).field(), sho_basic_mode(+1, omega, 0.2).field(), lambda);
      const Complex mm = kg_inner(sho_basic_mode(-1, omega, 0.2).field(), sho_basic_mode(-1, omega, 0.2).field(), lambda);
      EXPECT_NEAR(std::abs(pp - 4.0 * lambda * omega), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(mm + 4.0 * lambda * omega), 0.0, 1e-12);
    }
  }
}

TEST(Sho, RealSolutionsAreKgNullButPositive) {
  for (const ShoSample& x : {sho_sin(1.7, 0.9), sho_cos(1.7, 0.9)}) {
    EXPECT_NEAR(std::abs(kg_inner(x.field(), x.field(), 1.0)), 0.0, 1e-14);
    EXPECT_GT(sho_inner(x, x, 1.7, 2.0, -1.0).real(), 0.0);
  }
}

TEST(Sho, AgreesWithGeneralProduct) {
  const SpectralDecomposition s = hermitian_eigendecompose(ComplexMatrix::Constant(1, 1, 2.25));
  const ShoSample a{Complex(0.3, -1.2), Complex(0.8, 0.1)};
  const ShoSample b{Complex(-0.5, 0.4), Complex(1.1, -0.6)};
  const Complex general = solution_inner(a.field(), b.field(), s, InnerProductSpec::from_scalars(1, 1.4, 0.6));
  EXPECT_NEAR(std::abs(sho_inner(a, b, 1.5, 1.4, 0.6) - general), 0.0, 1e-14);
}

TEST(Sho, Rejections) {
  const ShoSample x = sho_cos(1.0, 0.0);
  EXPECT_THROW(sho_inner(x, x, 1.0, 1.0, 1.0), Error);
  EXPECT_THROW(sho_inner(x, x, 1.0, 1.0, -2.0), Error);
  EXPECT_THROW(sho_inner(x, x, 0.0, 1.0, 0.0), Error);
  EXPECT_THROW(ShoModel::fixed(-1.0), Error);
}

TEST(Sho, VaryingModelSource) {
  const ShoModel model = ShoModel::varying([](double t) { return 2.0 + std::sin(t); });
  const OperatorSource source = model.source();
  EXPECT_FALSE(source.is_constant());
  EXPECT_NEAR(source.matrix_at(std::acos(-1.0) / 2).real()(0, 0), 9.0, 1e-14);
  EXPECT_TRUE(ShoModel::fixed(2.0).source().is_constant());
}
