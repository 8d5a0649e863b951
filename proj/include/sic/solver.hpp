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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sic/bignum.hpp"
#include "sic/modarith.hpp"
#include "sic/phases.hpp"

namespace sic {

/// Restricts the search to the lambda-eigenspace of U_F.
struct SectorGenerator {
  SymplecticMatrix matrix;
  RootOfUnity eigenvalue;
};

/// "full", or ';'-separated items "a,b,c,d:k/n" (eigenvalue e^{2 pi i k/n})
/// or "zauner:k/3" for the stored Zauner representative.
std::vector<SectorGenerator> parse_sector(const std::string& text, std::int64_t d);

struct SolverConfig {
  std::int64_t dim = 0;
  std::vector<SectorGenerator> sector;            // empty: all of C^d
  std::vector<BigComplexVector> explicit_basis;   // overrides `sector` when set
  std::uint64_t seed = 1;
  int restarts = 1;
  int max_iters = 400;
  double target_residual = 1e-30;
  int refine_digits = 60;
  int refine_iters = 40;
};

/// Orthonormal basis of the joint eigenspace (columns of the product of the
/// projectors, Gram-Schmidt at `digits`).
std::vector<BigComplexVector> sector_basis(const SolverConfig& config, int digits);

/// sum_{p != 0} (|<v|D_p v>|^2 - 1/(d+1))^2 for unit v.
double frame_residual(const std::vector<std::complex<double>>& v);
BigReal frame_residual(const BigComplexVector& v);

struct SearchResult {
  BigComplexVector vector;
  BigReal residual;
  bool converged = false;
  std::uint64_t seed = 0;      // seed of the run that produced `vector`
  double coarse_residual = 0;  // after the double stage
};

/// Seeded restarts of a double-precision Levenberg-Marquardt descent on the
/// sector coefficients, then a high-precision polish of the best start.
/// Deterministic for a fixed config.
SearchResult search(const SolverConfig& config);

}  // namespace sic
