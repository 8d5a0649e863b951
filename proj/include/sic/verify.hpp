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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sic/bignum.hpp"
#include "sic/heisenberg.hpp"
#include "sic/modarith.hpp"

namespace sic {

struct OverlapReport {
  std::int64_t dim = 0;
  BigReal max_violation;  // max over p != 0 of |(d+1)|<v|D_p v>|^2 - 1|
  DisplacementIndex worst_index{0, 0, 1};
  std::int64_t checked_count = 0;
  int precision = 0;

  /// max_violation < 10^{-P/2}.
  bool passed() const;
  std::string to_string() const;
};

/// <v|D_p v>.
BigComplex overlap(const BigComplexVector& v, const DisplacementIndex& p, const RootTable& roots2d);

/// Throws std::invalid_argument on non-unit input. With reduce_by_symmetry
/// one index per orbit of <generators, -I> is evaluated.
OverlapReport sic_check(const BigComplexVector& v, int precision, bool reduce_by_symmetry = false,
                        const std::vector<SymplecticMatrix>& generators = {}, unsigned workers = 0);

/// Orbit representatives of the nonzero indices under <generators, -I>.
std::vector<DisplacementIndex> orbit_representatives(std::int64_t d,
                                                     const std::vector<SymplecticMatrix>& generators);

struct SymmetryCertificate {
  SymplecticMatrix matrix;
  BigComplex eigenvalue;  // a root of unity of order dividing ord(matrix)
  BigReal residual;       // ||U_g v - eigenvalue v||
};

std::vector<SymmetryCertificate> symmetry_certificate(const BigComplexVector& v,
                                                      const std::vector<SymplecticMatrix>& generators,
                                                      int precision);

}  // namespace sic
