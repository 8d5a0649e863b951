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

#include "sic/fiducials.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace sic {
namespace {

constexpr int kP = 40;

BigReal tol(int digits = kP) { return BigReal::pow10(-(digits - 10), digits); }

BigComplex label_value(const RootOfUnity& r, int digits) { return root_of_unity(r.n, r.k, digits); }

void expect_orthonormal(const std::vector<AdaptedBasisVector>& b) {
  for (std::size_t r = 0; r < b.size(); ++r) {
    for (std::size_t s = r; s < b.size(); ++s) {
      BigComplex g = inner(b[r].vector, b[s].vector);
      BigReal want(r == s ? 1L : 0L, kP);
      EXPECT_LT((g - BigComplex(want, BigReal(kP))).abs(), tol()) << b[r].name << " / " << b[s].name;
    }
  }
}

// u e = lambda e for every basis vector
void expect_eigen(const std::vector<AdaptedBasisVector>& b, const BigComplexMatrix& uz, const BigComplexMatrix& us) {
  for (const auto& e : b) {
    BigComplexVector z = uz * e.vector;
    EXPECT_LT(z.max_abs_diff(e.vector * label_value(e.label.zauner, kP)), tol()) << e.name << " " << e.label.to_string();
    BigComplexVector s = us * e.vector;
    EXPECT_LT(s.max_abs_diff(e.vector * BigComplex(e.label.secondary, 0, kP)), tol()) << e.name;
  }
}

TEST(AdaptedBasis, FactorBasesAreOrthonormalEigenbases) {
  auto b5 = adapted_basis_5(kP);
  auto b3 = adapted_basis_3(kP);
  auto b13 = adapted_basis_13(kP);
  EXPECT_EQ(b5.size(), 5u);
  EXPECT_EQ(b3.size(), 3u);
  EXPECT_EQ(b13.size(), 7u);
  expect_orthonormal(b5);
  expect_orthonormal(b3);
  expect_orthonormal(b13);
  expect_eigen(b5, metaplectic(zauner_rep(5), kP).matrix, metaplectic(SymplecticMatrix::parity(5), kP).matrix);
  expect_eigen(b3, metaplectic(zauner_rep(3), kP).matrix, metaplectic(SymplecticMatrix::parity(3), kP).matrix);
  expect_eigen(b13, metaplectic(zauner_rep(13), kP).matrix, metaplectic(symmetry_s(13), kP).matrix);
}

TEST(AdaptedBasis, KnownVectors) {
  auto b5 = adapted_basis_5(kP);
  EXPECT_TRUE(b5[1].vector[0].abs().is_zero());
  EXPECT_TRUE(b5[1].raw[0].is_zero());
  auto b3 = adapted_basis_3(kP);
  EXPECT_LT(b3[2].vector.max_abs_diff(BigComplexVector::basis(3, 0, kP)), tol());
  auto b13 = adapted_basis_13(kP);
  EXPECT_LT(b13[0].vector.max_abs_diff(BigComplexVector::basis(13, 0, kP)), tol());
  EXPECT_EQ(b13[0].label.disambiguator, 'a');
  EXPECT_EQ(b13[1].label.disambiguator, 'b');
  EXPECT_EQ(b5[0].label.to_string(), "|w3,+>");
  EXPECT_EQ(b5[4].label.to_string(), "|1,+>");
}

TEST(AdaptedBasis, NormFactorsAreReal) {
  for (const auto& e : adapted_basis_5(kP)) EXPECT_TRUE(e.norm_factor_sq.is_real()) << e.name;
}

TEST(AdaptedBasis, ProductBases) {
  auto b15 = assemble_basis("dim15-zauner6", kP);
  ASSERT_EQ(b15.size(), basis_size("dim15-zauner6"));
  expect_orthonormal(b15);
  expect_eigen(b15, metaplectic(zauner_rep(15), kP).matrix, metaplectic(SymplecticMatrix::parity(15), kP).matrix);
  for (const auto& e : b15) EXPECT_EQ(e.label.zauner.k * 3, e.label.zauner.n * 2) << e.name;  // all w3^2

  const int p = 25;
  auto b195 = assemble_basis("dim195-36", p);
  ASSERT_EQ(b195.size(), 36u);
  BigComplexMatrix uz = metaplectic(zauner_rep(195), p).matrix;
  BigComplexMatrix us = metaplectic(symmetry_s(195), p).matrix;
  const BigReal t = tol(p);
  for (std::size_t r = 0; r < b195.size(); ++r) {
    const auto& e = b195[r];
    EXPECT_LT((uz * e.vector).max_abs_diff(e.vector * label_value(e.label.zauner, p)), t) << e.name;
    EXPECT_LT((us * e.vector).max_abs_diff(e.vector * BigComplex(e.label.secondary, 0, p)), t) << e.name;
    for (std::size_t s = 0; s < r; ++s) EXPECT_LT(inner(b195[s].vector, e.vector).abs(), t);
    // the first 19 span the (w3^2, +) sector
    if (r < 19) {
      EXPECT_EQ(e.label.secondary, 1) << e.name;
      EXPECT_EQ(e.label.zauner.k * 3, e.label.zauner.n * 2) << e.name;
    }
  }
}

TEST(AdaptedBasis, Ids) {
  EXPECT_EQ(basis_ids().size(), 4u);
  EXPECT_EQ(basis_dimension("dim195-19"), 195);
  EXPECT_EQ(basis_size("dim5-zauner2"), 2u);
  EXPECT_THROW(assemble_basis("dim7", kP), std::invalid_argument);
  EXPECT_THROW(basis_size("dim7"), std::invalid_argument);
}

TEST(Spec, EmbeddedSumsAreExactlyOne) {
  for (const auto& name : embedded_names()) {
    FiducialSpec s = embedded_spec(name);
    EXPECT_EQ(s.total(), QuadraticElement(1, 0)) << name;
    EXPECT_NO_THROW(s.validate()) << name;
    EXPECT_TRUE(s.same_as(s));
  }
  EXPECT_EQ(embedded_names().size(), 5u);
  EXPECT_THROW(embedded_spec("7a"), std::invalid_argument);
}

TEST(Spec, KnownEntries) {
  FiducialSpec a = embedded_spec("5a");
  ASSERT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.entries[0].modulus_sq, QuadraticElement(mpq_class(3, 4), mpq_class(-1, 4)));
  EXPECT_TRUE(phase_equal(*a.entries[1].phase, parse_phase("P5^(1/4)")));
  FiducialSpec b = embedded_spec("195b");
  ASSERT_EQ(b.entries.size(), 36u);
  EXPECT_TRUE(b.entries[26].modulus_sq.is_zero());
  EXPECT_FALSE(b.entries[26].phase.has_value());
  EXPECT_EQ(embedded_spec("195d").entries[0].modulus_sq, QuadraticElement(mpq_class(-9, 182), mpq_class(6, 91)));
}

TEST(Spec, ValidateCatchesProblems) {
  FiducialSpec s = embedded_spec("5a");
  FiducialSpec bad = s;
  bad.entries[0].modulus_sq = QuadraticElement(1, 0);
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.entries[0].phase = parse_phase("w3");
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.entries[1].phase.reset();
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.entries.push_back(FiducialEntry{});
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.entries[0].modulus_sq = QuadraticElement(mpq_class(3, 2), mpq_class(-1, 4));
  bad.entries[1].modulus_sq = QuadraticElement(mpq_class(-1, 2), mpq_class(1, 4));
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Spec, SameAsPadsWithZeros) {
  FiducialSpec s = embedded_spec("15d");
  FiducialSpec padded = s;
  padded.entries.resize(6);
  EXPECT_TRUE(s.same_as(padded));
  EXPECT_TRUE(padded.same_as(s));
  FiducialSpec other = s;
  other.entries[1].phase = parse_phase("w3");
  EXPECT_FALSE(s.same_as(other));
}

TEST(Build, UnitNormAndRoundTrip) {
  for (const auto& name : {"5a", "15d", "15b"}) {
    FiducialSpec s = embedded_spec(name);
    const int p = 60;
    BigComplexVector v = build_fiducial(s, p);
    EXPECT_LT(abs(v.norm() - BigReal(1L, p)), tol(p)) << name;
    AdaptedCoordinates c = to_adapted(v, s.basis_id, p);
    EXPECT_LT(c.residual, tol(p));
    for (std::size_t r = 0; r < s.entries.size(); ++r) {
      EXPECT_LT(abs(c.entries[r].modulus_sq - eval_quadratic(s.entries[r].modulus_sq, p)), BigReal::pow10(-(p - 15), p));
      if (s.entries[r].modulus_sq.is_zero()) continue;
      BigComplex want = eval_phase(*s.entries[r].phase, p);
      BigComplex got(cos(c.entries[r].phase_angle), sin(c.entries[r].phase_angle));
      EXPECT_LT((want - got).abs(), BigReal::pow10(-(p - 15), p)) << name << " entry " << r;
    }
  }
}

TEST(Build, OneNinetyFiveRoundTrip) {
  const int p = 30;
  FiducialSpec s = embedded_spec("195b");
  BigComplexVector v = build_fiducial(s, p);
  AdaptedCoordinates c = to_adapted(v, s.basis_id, p);
  EXPECT_LT(c.residual, tol(p));
  EXPECT_LT(c.entries[26].modulus_sq, tol(p));
}

TEST(Adapt, GaugeUndefined) {
  auto b = assemble_basis("dim5-zauner2", kP);
  try {
    to_adapted(b[1].vector, b, kP);
    FAIL() << "expected an exception";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "phase gauge undefined");
  }
}

TEST(Adapt, ChangeRepresentative) {
  BigComplexVector v = build_fiducial(embedded_spec("5a"), kP);
  EXPECT_LT(change_representative(v, SymplecticMatrix::identity(5), kP).max_abs_diff(v), tol());
  // the fiducial is fixed by its Zauner unitary up to w3
  BigComplexVector w = change_representative(v, zauner_rep(5), kP);
  EXPECT_LT(abs(inner(v, w).abs() - BigReal(1L, kP)), tol());
  EXPECT_THROW(change_representative(v, SymplecticMatrix::identity(7), kP), std::invalid_argument);
}

TEST(Files, SpecRoundTrip) {
  for (const auto& name : embedded_names()) {
    FiducialSpec s = embedded_spec(name);
    FiducialSpec back = parse_spec(format_spec(s));
    EXPECT_TRUE(s.same_as(back)) << name;
    EXPECT_EQ(back.name, name);
  }
  EXPECT_THROW(parse_spec(""), std::invalid_argument);
  EXPECT_THROW(parse_spec("fiducial x dim 5 basis dim5-zauner2\np = 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_spec("fiducial x dim 5\n"), std::invalid_argument);
  FiducialSpec c = parse_spec("# comment\nfiducial y dim 5 basis dim5-zauner2\np = 1 ; phase = 1  # tail\n");
  EXPECT_EQ(c.entries.size(), 1u);
}

TEST(Files, VectorRoundTrip) {
  BigComplexVector v = build_fiducial(embedded_spec("5a"), kP);
  VectorFile f = parse_vector(format_vector(v, kP, {"note"}));
  EXPECT_EQ(f.precision, kP);
  EXPECT_LT(f.vector.max_abs_diff(v), BigReal::pow10(-(kP - 2), kP));
  ASSERT_FALSE(f.comments.empty());

  auto path = (std::filesystem::temp_directory_path() / "sicfid_test_vec.txt").string();
  write_vector_file(path, v, kP);
  EXPECT_LT(read_vector_file(path).vector.max_abs_diff(v), BigReal::pow10(-(kP - 2), kP));
  std::remove(path.c_str());
  EXPECT_THROW(read_vector_file(path), std::runtime_error);
}

}  // namespace
}  // namespace sic
