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

#include "sic/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "sic/fiducials.hpp"

namespace sic {
namespace {

BigComplexVector random_unit(std::size_t d, int digits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  BigComplexVector v(d, digits);
  for (std::size_t r = 0; r < d; ++r) v[r] = BigComplex(BigReal(g(rng), digits), BigReal(g(rng), digits));
  return v.normalized();
}

TEST(Overlap, MatchesDenseDisplacement) {
  const int p = 40;
  BigComplexVector v = random_unit(7, p, 3);
  RootTable roots(14, p);
  for (std::int64_t i = 0; i < 7; ++i) {
    for (std::int64_t j = 0; j < 7; ++j) {
      DisplacementIndex q(i, j, 7);
      BigComplex want = inner(v, displacement(q, p) * v);
      EXPECT_LT((overlap(v, q, roots) - want).abs(), BigReal::pow10(-(p - 10), p));
    }
  }
}

TEST(SicCheck, FiveAPasses) {
  const int p = 100;
  OverlapReport r = sic_check(build_fiducial(embedded_spec("5a"), p), p);
  EXPECT_EQ(r.dim, 5);
  EXPECT_EQ(r.checked_count, 24);
  EXPECT_LT(r.max_violation, BigReal::pow10(-80, p));
  EXPECT_TRUE(r.passed());
  std::string text = r.to_string();
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
  EXPECT_NE(text.find("checked: 24"), std::string::npos);
}

TEST(SicCheck, BasisVectorFails) {
  const int p = 30;
  OverlapReport r = sic_check(BigComplexVector::basis(5, 0, p), p);
  // |<e0|Z^j e0>|^2 = 1, so the violation is d
  EXPECT_LT(abs(r.max_violation - BigReal(5L, p)), BigReal::pow10(-(p - 5), p));
  EXPECT_EQ(r.worst_index.i.value(), 0);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.to_string().find("result: FAIL"), std::string::npos);
}

TEST(SicCheck, RandomVectorFails) {
  OverlapReport r = sic_check(random_unit(15, 40, 11), 40);
  EXPECT_GT(r.max_violation, BigReal("0.01", 40));
  EXPECT_FALSE(r.passed());
}

TEST(SicCheck, Errors) {
  BigComplexVector v = BigComplexVector::basis(5, 0, 30) * BigComplex(2, 0, 30);
  EXPECT_THROW(sic_check(v, 30), std::invalid_argument);
  EXPECT_THROW(sic_check(BigComplexVector::basis(5, 0, 30), 8), std::invalid_argument);
}

TEST(SicCheck, WorkerCountDoesNotMatter) {
  const int p = 50;
  BigComplexVector v = random_unit(13, p, 5);
  OverlapReport a = sic_check(v, p, false, {}, 1);
  OverlapReport b = sic_check(v, p, false, {}, 4);
  EXPECT_EQ(a.max_violation, b.max_violation);
  EXPECT_EQ(a.checked_count, 168);
}

TEST(Orbits, CoverEveryNonzeroIndex) {
  auto reps = orbit_representatives(5, {zauner_rep(5)});
  EXPECT_EQ(reps.size(), 4u);
  auto reps15 = orbit_representatives(15, {zauner_rep(15)});
  // orbits of <F_Z, -I> on 224 points; none has a fixed point except 0
  EXPECT_GE(reps15.size(), 224u / 6);
  EXPECT_LT(reps15.size(), 224u);
  for (const auto& q : reps15) EXPECT_FALSE(q.is_zero());
}

TEST(SicCheck, ReducedAgreesWithFullOnSymmetricVector) {
  const int p = 40;
  // a Zauner and parity eigenvector that is not a SIC
  BigComplexVector v = assemble_basis("dim15-zauner6", p)[0].vector;
  OverlapReport full = sic_check(v, p);
  OverlapReport red = sic_check(v, p, true, {zauner_rep(15)});
  EXPECT_LT(red.checked_count, full.checked_count);
  EXPECT_LT(abs(full.max_violation - red.max_violation), BigReal::pow10(-(p - 10), p));

  BigComplexVector f = build_fiducial(embedded_spec("15d"), 60);
  OverlapReport rf = sic_check(f, 60, true, {zauner_rep(15)});
  EXPECT_TRUE(rf.passed());
  EXPECT_LT(rf.max_violation, BigReal::pow10(-40, 60));
}

TEST(Certificate, ZaunerEigenvalue) {
  const int p = 60;
  BigComplexVector v = build_fiducial(embedded_spec("5a"), p);
  auto certs = symmetry_certificate(v, {zauner_rep(5)}, p);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_LT(certs[0].residual, BigReal::pow10(-(p - 10), p));
  BigComplex l = certs[0].eigenvalue;
  EXPECT_LT((l * l * l - BigComplex(1, 0, p)).abs(), BigReal::pow10(-(p - 10), p));

  auto bad = symmetry_certificate(random_unit(5, p, 2), {zauner_rep(5)}, p);
  EXPECT_GT(bad[0].residual, BigReal("0.01", p));
}

TEST(Certificate, OneNinetyFiveSymmetries) {
  const int p = 25;
  BigComplexVector v = build_fiducial(embedded_spec("195d"), p);
  auto certs = symmetry_certificate(v, {zauner_rep(195), symmetry_s(195)}, p);
  ASSERT_EQ(certs.size(), 2u);
  for (const auto& c : certs) EXPECT_LT(c.residual, BigReal::pow10(-(p - 10), p));
  // the (w3^2, +) sector
  EXPECT_LT((certs[0].eigenvalue - root_of_unity(3, 2, p)).abs(), BigReal::pow10(-(p - 10), p));
  EXPECT_LT((certs[1].eigenvalue - BigComplex(1, 0, p)).abs(), BigReal::pow10(-(p - 10), p));
}

}  // namespace
}  // namespace sic
