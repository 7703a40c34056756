#include <gtest/gtest.h>

#include "dqf/poly.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace dqf;

TEST(Polynomial, DegreeAndStrip) {
  EXPECT_EQ(DQPoly{}.degree(), -1);
  EXPECT_EQ((DQPoly{DualQuaternion(1.0), DualQuaternion()}).degree(), 0);
  EXPECT_EQ(DQPoly::t().degree(), 1);
  RealPoly p{1.0, 1e-15};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.trimmed(Tolerance{}).degree(), 0);
}

TEST(Polynomial, ProductMatchesOracle) {
  gen::Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    auto a = rng.poly(rng.integer(0, 4));
    auto b = rng.poly(rng.integer(0, 4));
    EXPECT_LE(gen::max_diff(gen::raw(a * b), oracle::polymul(gen::raw(a), gen::raw(b))), 1e-12);
  }
}

TEST(Polynomial, NormMatchesOracleAndMultiplies) {
  gen::Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    auto a = rng.poly(rng.integer(1, 3));
    auto b = rng.poly(rng.integer(1, 3));
    DualPoly na = norm(a);
    oracle::Poly want = oracle::norm_poly(gen::raw(a));
    for (std::size_t d = 0; d < want.size(); ++d) {
      EXPECT_NEAR(na[d].re, want[d][0], 1e-11);
      EXPECT_NEAR(na[d].du, want[d][4], 1e-11);
    }
    EXPECT_LE(distance(norm(a * b), na * norm(b)), 1e-9 * (1.0 + na.scale() * norm(b).scale()));
  }
}

TEST(Polynomial, RightDivisionRoundTrip) {
  gen::Rng rng(23);
  for (int n = 0; n < 300; ++n) {
    auto a = rng.poly(rng.integer(0, 6));
    auto b = rng.poly(rng.integer(1, 3));
    auto [q, r] = right_divide(a, b);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_LE(distance(q * b + r, a), 1e-9 * (1.0 + a.scale()));
  }
}

TEST(Polynomial, DivisionNeedsInvertibleLead) {
  DQPoly b{DualQuaternion(1.0), DualQuaternion::eps()};
  try {
    (void)right_divide(DQPoly::t() * DQPoly::t(), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisorNotInvertible);
  }
}

TEST(Polynomial, RightZeroGivesRightFactor) {
  gen::Rng rng(24);
  for (int n = 0; n < 100; ++n) {
    auto h = rng.dq();
    auto m = rng.poly(2) * linear(h);
    EXPECT_LE(magnitude(right_eval(m, h)), 1e-9 * (1.0 + m.scale() * 100));
    auto q = zero_to_factor(m, h);
    EXPECT_LE(distance(q * linear(h), m), 1e-9 * (1.0 + m.scale()));
  }
  auto m = DQPoly::t() * DQPoly::t() + DQPoly{DualQuaternion(1.0)};
  EXPECT_THROW((void)zero_to_factor(m, DualQuaternion(2.0)), Error);
}

TEST(Polynomial, LeftAndRightEvaluationDiffer) {
  // k t at h = i: right evaluation gives k i, left evaluation i k
  DQPoly m = DQPoly{DualQuaternion::k()} * DQPoly::t();  // k t
  auto h = DualQuaternion::i();
  EXPECT_TRUE(approx_equal(right_eval(m, h), DualQuaternion::k() * h));
  EXPECT_TRUE(approx_equal(left_eval(m, h), h * DualQuaternion::k()));
  EXPECT_FALSE(approx_equal(right_eval(m, h), left_eval(m, h)));
}

TEST(Polynomial, EvalAtRealParameterIsSideIndependent) {
  gen::Rng rng(25);
  auto m = rng.poly(3);
  double t = 0.7;
  EXPECT_TRUE(approx_equal(eval(m, t), right_eval(m, DualQuaternion(t))));
  EXPECT_TRUE(approx_equal(eval(m, t), left_eval(m, DualQuaternion(t))));
}

TEST(Mrpf, FindsPlantedRealFactor) {
  gen::Rng rng(26);
  for (int n = 0; n < 100; ++n) {
    RealPoly g{rng.real(0.5, 2.0), rng.real(), 1.0};  // t^2 + b t + c
    auto m = to_dq(g) * rng.poly(2);
    RealPoly found = mrpf(m);
    ASSERT_EQ(found.degree(), 2);
    EXPECT_LE(distance(found, g), 1e-7);
    EXPECT_EQ(mrpf(rng.poly(3)).degree(), 0);
  }
}

TEST(Mrpf, MonicAndTrivialCases) {
  EXPECT_EQ(mrpf(DQPoly{DualQuaternion::i()}), RealPoly{1.0});
  auto m = to_dq(RealPoly{-2.0, 2.0});  // 2t - 2
  EXPECT_LE(distance(mrpf(m), RealPoly{-1.0, 1.0}), 1e-12);
}

TEST(RealGcd, Euclid) {
  RealPoly a = RealPoly{-1.0, 1.0} * RealPoly{1.0, 0.0, 1.0};
  RealPoly b = RealPoly{-1.0, 1.0} * RealPoly{3.0, 1.0};
  EXPECT_LE(distance(gcd(a, b), RealPoly{-1.0, 1.0}), 1e-12);
  EXPECT_EQ(gcd(RealPoly{1.0, 1.0}, RealPoly{2.0, 1.0}), RealPoly{1.0});
}

TEST(Polynomial, NormRequiresScalarResult) {
  // a DualPoly-valued norm always exists for genuine DQ polynomials
  gen::Rng rng(27);
  auto m = rng.poly(2);
  EXPECT_NO_THROW((void)norm(m));
  EXPECT_LE(study_defect(m).degree(), 4);
}
