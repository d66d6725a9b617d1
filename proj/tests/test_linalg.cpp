// Copyright 2026 The cvgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "cvgauss/linalg.hpp"

namespace cvgauss {
namespace {

Mat2 random_mat2(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Mat2 m;
  m << u(rng), u(rng), u(rng), u(rng);
  return m;
}

double direct_det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

TEST(Rotation, ZeroIsIdentity) { EXPECT_TRUE(rotation(0.0).isApprox(Mat2::Identity())); }

TEST(Rotation, QuarterTurnMatrix) {
  Mat2 expected;
  expected << 0, 1, -1, 0;
  EXPECT_LT(max_abs(rotation(M_PI / 2) - expected), 1e-15);
}

TEST(Rotation, AnglesAdd) {
  EXPECT_LT(max_abs(rotation(0.3) * rotation(1.1) - rotation(1.4)), 1e-15);
}

TEST(Rotation, ReflectionHasDeterminantMinusOne) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double th = angle(rng);
    const Mat2 r = reflection_rotation(th);
    EXPECT_NEAR(r.determinant(), -1.0, 1e-14);
    EXPECT_LT(max_abs(r * r.transpose() - Mat2::Identity()), 1e-14);
    EXPECT_NEAR(rotation(th).determinant(), 1.0, 1e-14);
  }
}

TEST(Rotation, TemplatedOnScalar) {
  const Mat2T<float> f = rotation(0.5f);
  const Mat2T<long double> l = rotation(0.5L);
  EXPECT_NEAR(f.determinant(), 1.0f, 1e-6f);
  EXPECT_NEAR(static_cast<double>(l.determinant()), 1.0, 1e-15);
  EXPECT_EQ((symplectic_form<float>()(0, 1)), 1.0f);
}

TEST(Adjugate, Matches2x2Formula) {
  Mat2 m;
  m << 1, 2, 3, 4;
  Mat2 expected;
  expected << 4, -2, -3, 1;
  EXPECT_EQ(adjugate2(m), expected);
  EXPECT_LT(max_abs(m * adjugate2(m) - m.determinant() * Mat2::Identity()), 1e-14);
}

TEST(DetSumIdentity, Examples) {
  EXPECT_DOUBLE_EQ(det_sum_identity(Mat2::Identity(), Mat2::Identity()), 4.0);
  Mat2 a;
  a << 1, 2, 3, 4;
  EXPECT_DOUBLE_EQ(det_sum_identity(a, Mat2::Zero()), -2.0);
}

TEST(DetSumIdentity, EqualsDeterminantOfSum) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 a = random_mat2(rng);
    const Mat2 b = random_mat2(rng);
    ASSERT_NEAR(det_sum_identity(a, b), direct_det(a + b), 1e-12);
  }
}

TEST(Diagonalize, Identity) {
  const auto r = diagonalize_det1(Mat2::Identity());
  EXPECT_TRUE(r.u.isApprox(Mat2::Identity()));
  EXPECT_DOUBLE_EQ(r.lambda1, 1.0);
  EXPECT_DOUBLE_EQ(r.lambda2, 1.0);
}

TEST(Diagonalize, SymmetricCoupledPair) {
  Mat2 v;
  v << 2, 1, 1, 2;
  const auto r = diagonalize_det1(v);
  EXPECT_NEAR(r.lambda1, 3.0, 1e-14);
  EXPECT_NEAR(r.lambda2, 1.0, 1e-14);
  const Mat2 d = r.u * v * r.u.transpose();
  EXPECT_LT(max_abs(d - Vec2(3.0, 1.0).asDiagonal().toDenseMatrix()), 1e-14);
}

TEST(Diagonalize, AlreadyDiagonal) {
  const auto r = diagonalize_det1(Mat2(Vec2(5.0, 2.0).asDiagonal()));
  EXPECT_TRUE(r.u.isApprox(Mat2::Identity()));
  EXPECT_DOUBLE_EQ(r.lambda1, 5.0);
  EXPECT_DOUBLE_EQ(r.lambda2, 2.0);
}

TEST(Diagonalize, SwapsWhenSecondEntryIsLarger) {
  const auto r = diagonalize_det1(Mat2(Vec2(2.0, 5.0).asDiagonal()));
  EXPECT_DOUBLE_EQ(r.lambda1, 5.0);
  EXPECT_NEAR(r.lambda2, 2.0, 1e-15);
  EXPECT_NEAR(r.u.determinant(), 1.0, 1e-15);
}

TEST(Diagonalize, RandomSymmetricProperty) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    Mat2 v = random_mat2(rng, -5.0, 5.0);
    v = (v + v.transpose()).eval() / 2.0;
    const auto r = diagonalize_det1(v);
    ASSERT_GE(r.lambda1, r.lambda2);
    Mat2 expected = Mat2::Zero();
    expected(0, 0) = r.lambda1;
    expected(1, 1) = r.lambda2;
    ASSERT_LT(max_abs(r.u * v * r.u.transpose() - expected), 1e-9);
    ASSERT_LT(max_abs(r.u * r.u.transpose() - Mat2::Identity()), 1e-9);
    ASSERT_NEAR(r.u.determinant(), 1.0, 1e-9);
  }
}

TEST(Angles, WrapIntoHalfOpenRange) {
  EXPECT_NEAR(wrap_two_pi(-M_PI / 2), 3 * M_PI / 2, 1e-15);
  EXPECT_NEAR(wrap_two_pi(5 * M_PI), M_PI, 1e-14);
  EXPECT_GE(wrap_two_pi(-1e-300), 0.0);
  EXPECT_LT(wrap_two_pi(-1e-300), 2 * M_PI);
}

TEST(Angles, RotationBetweenAlignsDirections) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 a(u(rng), u(rng));
    const Vec2 b(u(rng), u(rng));
    const Vec2 turned = rotation(rotation_angle_between(a, b)) * a;
    ASSERT_LT((turned.normalized() - b.normalized()).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace cvgauss
