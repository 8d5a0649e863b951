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

#include "sic/modarith.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace sic {
namespace {

SymplecticMatrix random_symplectic(std::int64_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> u(0, d - 1);
  for (;;) {
    std::int64_t a = u(rng), b = u(rng), c = u(rng);
    ModInt am(a, d);
    if (!am.invertible()) continue;
    // delta = (1 + b c) / a
    ModInt dl = (ModInt(1, d) + ModInt(b, d) * ModInt(c, d)) * am.inverse();
    return SymplecticMatrix(a, b, c, dl.value(), d);
  }
}

TEST(ModInt, ReducesNegativeInput) {
  ModInt x(-5, 15);
  EXPECT_EQ(x.value(), 10);
  EXPECT_EQ(x.signed_value(), -5);
  EXPECT_EQ((x * ModInt(2, 15)).value(), 5);
}

TEST(ModInt, InverseRequiresUnit) {
  EXPECT_EQ(ModInt(7, 15).inverse().value(), 13);
  EXPECT_FALSE(ModInt(6, 15).invertible());
  EXPECT_THROW(ModInt(6, 15).inverse(), std::domain_error);
}

TEST(Legendre, SmallCases) {
  EXPECT_EQ(legendre(ModInt(1, 5)), 1);
  EXPECT_EQ(legendre(ModInt(2, 5)), -1);
  EXPECT_EQ(legendre(ModInt(-1, 13)), 1);
  EXPECT_EQ(legendre(ModInt(0, 7)), 0);
}

TEST(Legendre, RejectsCompositeModulus) {
  try {
    legendre(ModInt(2, 15));
    FAIL() << "expected an exception";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "modulus must be an odd prime");
  }
}

TEST(Legendre, IsMultiplicative) {
  for (std::int64_t p : {3, 5, 7, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        EXPECT_EQ(legendre(ModInt(a, p)) * legendre(ModInt(b, p)), legendre(ModInt(a * b, p)));
      }
    }
  }
}

TEST(Symplectic, ConstructorChecksDeterminantAndModulus) {
  EXPECT_THROW(SymplecticMatrix(1, 1, 1, 1, 5), std::invalid_argument);
  EXPECT_THROW(SymplecticMatrix(1, 0, 0, 1, 4), std::invalid_argument);
  EXPECT_THROW(SymplecticMatrix(1, 0, 0, 1, 9), std::invalid_argument);
  EXPECT_NO_THROW(SymplecticMatrix(-5, 3, -2, 4, 15));
}

TEST(Symplectic, ZaunerCubeIsIdentity) {
  SymplecticMatrix fz(0, -1, 1, -1, 5);
  EXPECT_TRUE((fz * fz * fz).is_identity());
  EXPECT_EQ(fz * fz, SymplecticMatrix(-1, 1, -1, 0, 5));
  EXPECT_EQ(fz.order(), 3);
  EXPECT_TRUE((fz * fz.inverse()).is_identity());
}

TEST(Symplectic, TraceMinusOneMeansOrderThree) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t c = 0; c < p; ++c) {
          std::int64_t dl = ((-1 - a) % p + p) % p;
          if (((a * dl - b * c) % p + p) % p != 1) continue;
          EXPECT_TRUE(SymplecticMatrix(a, b, c, dl, p).pow(3).is_identity());
        }
      }
    }
  }
}

TEST(Symplectic, MismatchedModuliThrow) {
  EXPECT_THROW(SymplecticMatrix::identity(5) * SymplecticMatrix::identity(7), std::invalid_argument);
}

TEST(TensorFactors, LadderOrder) {
  EXPECT_EQ(tensor_factors(195), (std::vector<std::int64_t>{13, 3, 5}));
  EXPECT_EQ(tensor_factors(15), (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(tensor_factors(35), (std::vector<std::int64_t>{5, 7}));
  EXPECT_EQ(tensor_factors(13), (std::vector<std::int64_t>{13}));
}

TEST(CrtSplit, ZaunerFifteen) {
  CrtSplit s = crt_split(SymplecticMatrix(-5, 3, -2, 4, 15), 5);
  EXPECT_EQ(s.left, SymplecticMatrix(1, 0, -1, 1, 3));
  EXPECT_EQ(s.right, SymplecticMatrix(0, -1, 1, -1, 5));
  EXPECT_EQ(crt_join(s), SymplecticMatrix(-5, 3, -2, 4, 15));
}

TEST(CrtSplit, ZaunerOneNinetyFive) {
  CrtSplit outer = crt_split(SymplecticMatrix(55, 156, 169, 139, 195), 15);
  EXPECT_EQ(outer.left, SymplecticMatrix(3, 0, 0, -4, 13));
  CrtSplit inner = crt_split(outer.right, 5);
  EXPECT_EQ(inner.left, SymplecticMatrix(1, 0, -1, 1, 3));
  EXPECT_EQ(inner.right, SymplecticMatrix(0, -1, 1, -1, 5));
}

TEST(CrtSplit, SymmetryOneNinetyFive) {
  SymplecticMatrix fs(161, 0, 0, 86, 195);
  CrtSplit outer = crt_split(fs, 15);
  EXPECT_EQ(outer.left, SymplecticMatrix(5, 0, 0, -5, 13));
  CrtSplit inner = crt_split(outer.right, 5);
  EXPECT_EQ(inner.left, SymplecticMatrix::parity(3));
  EXPECT_TRUE(inner.right.is_identity());
  EXPECT_EQ(crt_join(outer), fs);
}

TEST(CrtSplit, IdentityAndErrors) {
  CrtSplit s = crt_split(SymplecticMatrix::identity(15), 5);
  EXPECT_TRUE(s.left.is_identity());
  EXPECT_TRUE(s.right.is_identity());
  EXPECT_THROW(crt_split(SymplecticMatrix::identity(15), 4), std::invalid_argument);
  EXPECT_THROW(crt_split(SymplecticMatrix::identity(15), 7), std::invalid_argument);
}

TEST(CrtSplit, RoundTripAndHomomorphism) {
  std::mt19937_64 rng(7);
  for (auto [m, d] : {std::pair<std::int64_t, std::int64_t>{15, 5}, {195, 15}}) {
    for (int t = 0; t < 1000; ++t) {
      SymplecticMatrix f = random_symplectic(m, rng);
      SymplecticMatrix g = random_symplectic(m, rng);
      EXPECT_EQ(crt_join(crt_split(f, d)), f);
      CrtSplit sf = crt_split(f, d), sg = crt_split(g, d), sfg = crt_split(f * g, d);
      EXPECT_EQ(sfg.left, sf.left * sg.left);
      EXPECT_EQ(sfg.right, sf.right * sg.right);
    }
  }
}

TEST(CrtFactorize, ThreeFactorsRoundTrip) {
  std::mt19937_64 rng(11);
  const std::vector<std::int64_t> mods = {13, 3, 5};
  for (int t = 0; t < 200; ++t) {
    SymplecticMatrix f = random_symplectic(195, rng);
    auto parts = crt_factorize(f, mods);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(crt_combine(parts), f);
  }
}

TEST(Conjugator, PrintedFifteenExample) {
  SymplecticMatrix src(0, -1, 1, -1, 15), dst(-5, 3, -2, 4, 15);
  SymplecticMatrix g(-7, -1, -7, 1, 15);
  EXPECT_EQ(g * src * g.inverse(), dst);
  SymplecticMatrix found = find_conjugator(src, dst);
  EXPECT_EQ(found * src * found.inverse(), dst);
}

TEST(Conjugator, SameMatrixAndNotConjugate) {
  SymplecticMatrix fz(0, -1, 1, -1, 5);
  SymplecticMatrix g = find_conjugator(fz, fz);
  EXPECT_EQ(g * fz * g.inverse(), fz);
  try {
    find_conjugator(SymplecticMatrix(1, 0, 1, 1, 3), SymplecticMatrix(1, 0, -1, 1, 3));
    FAIL() << "expected an exception";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "not conjugate");
  }
}

}  // namespace
}  // namespace sic
