// Copyright 2026 The sicfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sic/bignum.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace sic {
namespace {

BigReal tol(int digits, int slack = 10) { return BigReal::pow10(-(digits - slack), digits); }

TEST(BigReal, ParsesAndRejects) {
  BigReal x("0.4330127018922193", 30);
  EXPECT_NEAR(x.to_double(), 0.4330127018922193, 1e-16);
  EXPECT_THROW(BigReal("0.4x", 30), std::invalid_argument);
}

TEST(BigReal, Truncate) {
  BigReal x = BigReal::pi(50);
  EXPECT_EQ(truncate(x, 5), BigReal("3.1416", 50));
  EXPECT_EQ(truncate(BigReal("-0.000123456", 50), 3), BigReal("-0.000123", 50));
}

TEST(RootOfUnity, ExactSpecialValues) {
  EXPECT_TRUE(root_of_unity(1, 0, 40).im.is_zero());
  EXPECT_EQ(root_of_unity(1, 0, 40).re, BigReal(1L, 40));
  EXPECT_EQ(root_of_unity(7, 14, 40).re, BigReal(1L, 40));
  EXPECT_EQ(root_of_unity(4, 1, 40).im, BigReal(1L, 40));
  EXPECT_TRUE(root_of_unity(4, 1, 40).re.is_zero());
  EXPECT_THROW(root_of_unity(0, 0, 40), std::invalid_argument);
}

TEST(RootOfUnity, CubeRoot) {
  const int p = 60;
  BigComplex w = root_of_unity(3, 1, p);
  EXPECT_LT(abs(w.re + BigReal("0.5", p)), tol(p));
  EXPECT_LT(abs(w.im - sqrt(BigReal(3L, p)) / 2L), tol(p));
}

TEST(RootOfUnity, GaussSumIsSqrtFive) {
  for (int p : {50, 200}) {
    BigComplex s = root_of_unity(5, 1, p) + root_of_unity(5, 4, p) - root_of_unity(5, 2, p) - root_of_unity(5, 3, p);
    EXPECT_LT(abs(s.re - sqrt(BigReal(5L, p))), BigReal::pow10(-(p - 5), p));
    EXPECT_LT(abs(s.im), BigReal::pow10(-(p - 5), p));
  }
}

TEST(Vector, InnerProducts) {
  const int p = 30;
  auto e1 = BigComplexVector::basis(4, 1, p), e2 = BigComplexVector::basis(4, 2, p);
  EXPECT_EQ(inner(e1, e1).re, BigReal(1L, p));
  EXPECT_TRUE(inner(e1, e2).re.is_zero());
  EXPECT_THROW(inner(e1, BigComplexVector::basis(3, 0, p)), std::invalid_argument);
}

TEST(Vector, InnerIsConjugateLinearInFirstSlot) {
  const int p = 30;
  BigComplexVector u = BigComplexVector::basis(2, 0, p) * BigComplex(0, 1, p);
  BigComplexVector v = BigComplexVector::basis(2, 0, p);
  BigComplex z = inner(u, v);
  EXPECT_EQ(z.im, BigReal(-1L, p));
}

TEST(Vector, KronIndexConvention) {
  const int p = 30;
  BigComplexVector k = kron(BigComplexVector::basis(3, 1, p), BigComplexVector::basis(5, 2, p));
  ASSERT_EQ(k.dim(), 15u);
  EXPECT_EQ(k[7].re, BigReal(1L, p));
  EXPECT_EQ(kron(BigComplexVector::basis(3, 0, p), BigComplexVector::basis(5, 0, p))[0].re, BigReal(1L, p));
}

TEST(Vector, KronInnerFactorizes) {
  const int p = 50;
  auto mk = [&](long a, long b, long c) {
    return BigComplexVector({BigComplex(a, 1, p), BigComplex(b, -2, p), BigComplex(c, 3, p)}).normalized();
  };
  BigComplexVector a = mk(1, 2, 3), b = mk(-1, 0, 2), c = mk(4, 1, 1), d = mk(0, 2, -3);
  BigComplex lhs = inner(kron(a, b), kron(c, d));
  BigComplex rhs = inner(a, c) * inner(b, d);
  EXPECT_LT((lhs - rhs).abs(), tol(p));
  EXPECT_LT(abs(kron(a, b).norm() - BigReal(1L, p)), tol(p));
  EXPECT_LT(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))), tol(p));
}

TEST(Matrix, UnitaryPredicateAndProduct) {
  const int p = 40;
  BigComplexMatrix u(2, 2, p);
  BigReal h = BigReal(1L, p) / sqrt(BigReal(2L, p));
  u(0, 0) = BigComplex(h, BigReal(p));
  u(0, 1) = BigComplex(h, BigReal(p));
  u(1, 0) = BigComplex(h, BigReal(p));
  u(1, 1) = BigComplex(-h, BigReal(p));
  EXPECT_TRUE(u.is_unitary());
  EXPECT_LT((u * u).max_abs_diff(BigComplexMatrix::identity(2, p)), tol(p));
  u(1, 1) = BigComplex(h, BigReal(p));
  EXPECT_FALSE(u.is_unitary());
}

TEST(Serialize, RoundTrip) {
  const int p = 40;
  BigComplex z(BigReal::pi(p), -sqrt(BigReal(2L, p)));
  BigComplex back = parse_complex(serialize(z, p), p);
  EXPECT_LT((back - z).abs(), tol(p, 3));
  EXPECT_THROW(parse_complex("1.0", p), std::invalid_argument);
}

TEST(Precision, ResidualShrinksWithPrecision) {
  // (sqrt2)^2 - 2 falls with the working precision
  double prev = 0;
  for (int p : {50, 100, 200}) {
    BigReal s = sqrt(BigReal(2L, p));
    BigReal r = abs(s * s - BigReal(2L, p));
    double e = r.is_zero() ? -p : r.log10_abs();
    EXPECT_LT(e, -(p - 5));
    if (p > 50) EXPECT_LT(e, prev - 20);
    prev = e;
  }
}

}  // namespace
}  // namespace sic
