#include <gtest/gtest.h>

#include "dqf/algebra.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace dqf;

namespace {

void expect_components(const DualQuaternion& got, const oracle::DQ& want, double eps) {
  auto c = got.components();
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(c[n], want[n], eps) << "component " << n;
}

}  // namespace

TEST(Quaternion, UnitProducts) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, Quaternion(-1.0));
  EXPECT_EQ(i * j * k, Quaternion(-1.0));
}

TEST(DualQuaternion, EpsIsNilpotentAndCentral) {
  const auto e = DualQuaternion::eps();
  EXPECT_EQ(e * e, DualQuaternion());
  EXPECT_EQ(e * DualQuaternion::i(), DualQuaternion::i() * e);
}

TEST(DualQuaternion, ProductMatchesOracle) {
  gen::Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    auto a = rng.dq(), b = rng.dq();
    expect_components(a * b, oracle::dqmul(a.components(), b.components()), 1e-12);
  }
}

TEST(DualQuaternion, NormIsMultiplicative) {
  gen::Rng rng(12);
  for (int n = 0; n < 300; ++n) {
    auto a = rng.dq(), b = rng.dq();
    EXPECT_TRUE(approx_equal(norm(a * b), norm(a) * norm(b)));
  }
}

TEST(DualQuaternion, ConjugationReversesProducts) {
  gen::Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    auto a = rng.dq(), b = rng.dq();
    EXPECT_TRUE(approx_equal(conj(a * b), conj(b) * conj(a)));
    EXPECT_EQ(conj(conj(a)), a);
  }
}

TEST(DualQuaternion, NormIsTwoSidedDualNumber) {
  gen::Rng rng(14);
  for (int n = 0; n < 300; ++n) {
    auto q = rng.dq();
    auto left = q * conj(q);
    auto right = conj(q) * q;
    EXPECT_TRUE(approx_equal(left, right, Tolerance(1e-12, 1e-6)));
    // only the scalar components survive
    auto c = left.components();
    for (int m : {1, 2, 3, 5, 6, 7}) EXPECT_NEAR(c[m], 0.0, 1e-12);
    EXPECT_NEAR(c[0], norm(q).re, 1e-12);
    EXPECT_NEAR(c[4], norm(q).du, 1e-12);
  }
}

TEST(DualQuaternion, InverseIsTwoSided) {
  gen::Rng rng(15);
  for (int n = 0; n < 300; ++n) {
    auto q = rng.dq();
    auto inv = inverse(q);
    EXPECT_TRUE(approx_equal(q * inv, DualQuaternion(1.0)));
    EXPECT_TRUE(approx_equal(inv * q, DualQuaternion(1.0)));
  }
}

TEST(DualQuaternion, PureDualIsNotInvertible) {
  DualQuaternion q(Quaternion(), Quaternion(1, 2, 3, 4));
  EXPECT_FALSE(is_invertible(q, Tolerance{}));
  try {
    (void)inverse(q);
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertible);
  }
}

TEST(DualQuaternion, StudyDefect) {
  gen::Rng rng(16);
  DualQuaternion q(Quaternion(1, 0, 0, 0), Quaternion(3, 0, 0, 0));
  EXPECT_DOUBLE_EQ(study_defect(q), 6.0);
  for (int n = 0; n < 50; ++n) EXPECT_NEAR(study_defect(rng.motion()), 0.0, 1e-12);
}

TEST(DualNumber, InverseAndProduct) {
  DualNumber a(2.0, 3.0);
  auto inv = inverse(a);
  EXPECT_TRUE(approx_equal(a * inv, DualNumber(1.0)));
  EXPECT_DOUBLE_EQ(inv.re, 0.5);
  EXPECT_DOUBLE_EQ(inv.du, -0.75);
  EXPECT_THROW((void)inverse(DualNumber(0.0, 1.0)), Error);
}

TEST(Tolerance, RejectsNonPositive) {
  EXPECT_THROW(Tolerance(0.0, 1e-6), std::invalid_argument);
  EXPECT_THROW(Tolerance(1e-9, -1.0), std::invalid_argument);
}
