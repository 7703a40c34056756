#include <gtest/gtest.h>

#include "dqf/realfactor.hpp"
#include "generators.hpp"

using namespace dqf;

namespace {

RealPoly quad(double re, double im) { return RealPoly{re * re + im * im, -2.0 * re, 1.0}; }
RealPoly lin(double root) { return RealPoly{-root, 1.0}; }

}  // namespace

TEST(FactorReal, DoubleQuadraticRoot) {
  auto rf = factor_real(pow(quad(0.0, 1.0), 2));
  ASSERT_EQ(rf.factors.size(), 1u);
  EXPECT_EQ(rf.factors[0].multiplicity, 2);
  EXPECT_LE(distance(rf.factors[0].poly, RealPoly{1.0, 0.0, 1.0}), 1e-9);
}

TEST(FactorReal, MixedMultiplicities) {
  RealPoly f = pow(quad(0.5, 1.5), 3) * pow(lin(-1.0), 2) * lin(2.0) * quad(-1.0, 0.25);
  auto rf = factor_real(f);
  ASSERT_EQ(rf.factors.size(), 4u);
  // canonical order: linear first by constant term, then quadratics
  EXPECT_LE(distance(rf.factors[0].poly, lin(2.0)), 1e-8);
  EXPECT_EQ(rf.factors[0].multiplicity, 1);
  EXPECT_LE(distance(rf.factors[1].poly, lin(-1.0)), 1e-8);
  EXPECT_EQ(rf.factors[1].multiplicity, 2);
  EXPECT_EQ(rf.factors[2].poly.degree(), 2);
  EXPECT_EQ(rf.factors[3].poly.degree(), 2);
  EXPECT_LE(distance(expand(rf), f), 1e-7 * (1.0 + f.scale()));
}

TEST(FactorReal, RandomProductsRoundTrip) {
  gen::Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    RealPoly f{1.0};
    int expected_degree = 0;
    std::vector<std::pair<RealPoly, int>> planted;
    int count = rng.integer(1, 3);
    for (int c = 0; c < count; ++c) {
      int mult = rng.integer(1, 2);
      RealPoly g = rng.integer(0, 1) ? quad(rng.real(), rng.real(0.3, 2.0)) : lin(rng.real());
      f = f * pow(g, static_cast<unsigned>(mult));
      expected_degree += g.degree() * mult;
      planted.emplace_back(g, mult);
    }
    RealFactorization rf;
    try {
      rf = factor_real(f);
    } catch (const Error& e) {
      // two planted roots may be closer than the cluster radius
      EXPECT_EQ(e.code(), Errc::IllConditioned);
      continue;
    }
    int degree = 0;
    for (const auto& factor : rf.factors) degree += factor.poly.degree() * factor.multiplicity;
    EXPECT_EQ(degree, expected_degree);
    EXPECT_LE(distance(expand(rf), f), 1e-7 * (1.0 + f.scale()));
  }
}

TEST(FactorReal, NormalizesNonMonic) {
  auto rf = factor_real(3.0 * quad(1.0, 2.0));
  ASSERT_EQ(rf.factors.size(), 1u);
  EXPECT_LE(distance(rf.factors[0].poly, quad(1.0, 2.0)), 1e-12);
}

TEST(FactorReal, ConstantRejected) { EXPECT_THROW((void)factor_real(RealPoly{2.0}), std::invalid_argument); }

TEST(FactorReal, SquarefreeAndExcess) {
  RealPoly n = quad(0.0, 1.0);
  auto rf = factor_real(pow(n, 3) * lin(1.0));
  EXPECT_LE(distance(squarefree_part(rf), n * lin(1.0)), 1e-8);
  EXPECT_LE(distance(multiplicity_excess(rf), n * n), 1e-8);
}
