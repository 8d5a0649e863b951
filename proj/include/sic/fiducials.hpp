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

#include <optional>
#include <string>
#include <vector>

#include "sic/bignum.hpp"
#include "sic/heisenberg.hpp"
#include "sic/modarith.hpp"
#include "sic/phases.hpp"

namespace sic {

/// Eigenvalue labels of an adapted basis vector. `secondary` is the parity
/// eigenvalue in dimensions 3 and 5 and the U_S eigenvalue in dimension 13
/// and in the products.
struct EigenLabel {
  RootOfUnity zauner;
  int secondary = 1;
  char disambiguator = 0;  // 'a' / 'b' for the doubled (1,-) label in dim 13

  std::string to_string() const;
};

struct AdaptedBasisVector {
  EigenLabel label;
  std::string name;          // e.g. "e2(13) e1(3) e2(5)"
  BigComplexVector vector;   // unit norm, standard basis
  /// Exact squared norm of the unnormalized vector; rational except in
  /// dimension 5, where it lies in Q(cos(2 pi/15)).
  CyclotomicNumber norm_factor_sq;
  /// Exact unnormalized components (factor bases only; empty for products).
  std::vector<CyclotomicNumber> raw;
};

/// Representatives used for the adapted bases.
SymplecticMatrix zauner_rep(std::int64_t d);  // 3, 5, 13, 15, 195
SymplecticMatrix symmetry_s(std::int64_t d);  // the order-4 element for 13 and 195

std::vector<AdaptedBasisVector> adapted_basis_5(int digits);
std::vector<AdaptedBasisVector> adapted_basis_3(int digits);
std::vector<AdaptedBasisVector> adapted_basis_13(int digits);

/// dim5-zauner2, dim15-zauner6, dim195-19, dim195-36.
std::vector<AdaptedBasisVector> assemble_basis(const std::string& basis_id, int digits);
std::vector<std::string> basis_ids();
std::int64_t basis_dimension(const std::string& basis_id);
std::size_t basis_size(const std::string& basis_id);

struct FiducialEntry {
  QuadraticElement modulus_sq;
  std::optional<PhaseExpression> phase;  // absent iff modulus_sq = 0
};

struct FiducialSpec {
  std::string name;
  std::int64_t dim = 0;
  std::string basis_id;
  std::vector<FiducialEntry> entries;

  QuadraticElement total() const;
  /// Exact checks: sum = 1, first phase = 1, sizes, no negative moduli.
  /// Throws std::invalid_argument with the first problem found.
  void validate() const;
  /// Exact equality: moduli componentwise, phases by canonical form.
  bool same_as(const FiducialSpec& other) const;
};

std::vector<std::string> embedded_names();  // 5a, 15d, 15b, 195d, 195b
FiducialSpec embedded_spec(const std::string& name);

BigComplexVector build_fiducial(const FiducialSpec& spec, int digits);

struct AdaptedEntry {
  BigComplex coefficient;
  BigReal modulus_sq;
  BigReal phase_angle;  // arg c_r - arg c_0 in (-pi, pi]
};

struct AdaptedCoordinates {
  std::vector<AdaptedEntry> entries;
  BigReal residual;  // norm of the part of v outside the span
};

/// c_r = <e_r|v> without gauge fixing.
std::vector<BigComplex> adapted_coefficients(const BigComplexVector& v,
                                             const std::vector<AdaptedBasisVector>& basis);
/// Throws std::domain_error("phase gauge undefined") when c_0 vanishes.
AdaptedCoordinates to_adapted(const BigComplexVector& v, const std::string& basis_id, int digits);
AdaptedCoordinates to_adapted(const BigComplexVector& v, const std::vector<AdaptedBasisVector>& basis,
                              int digits);

/// U_g v.
BigComplexVector change_representative(const BigComplexVector& v, const SymplecticMatrix& g, int digits);

// Text formats.
std::string format_spec(const FiducialSpec& spec);
FiducialSpec parse_spec(const std::string& text);
FiducialSpec read_spec_file(const std::string& path);
void write_spec_file(const std::string& path, const FiducialSpec& spec);

struct VectorFile {
  BigComplexVector vector;
  int precision = 0;
  std::vector<std::string> comments;  // extra header lines without '#'
};

std::string format_vector(const BigComplexVector& v, int precision,
                          const std::vector<std::string>& comments = {});
VectorFile parse_vector(const std::string& text);
VectorFile read_vector_file(const std::string& path);
void write_vector_file(const std::string& path, const BigComplexVector& v, int precision,
                       const std::vector<std::string>& comments = {});

}  // namespace sic
