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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sic {

bool is_prime(std::int64_t n);
bool is_odd_square_free(std::int64_t n);

/// Prime factors of a square-free modulus, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Tensor factor order used for composite dimensions. Ladder dimensions
/// d(d-2) split as (d-2) then d, recursively, so 195 -> {13, 3, 5} and
/// 15 -> {3, 5}. Anything else falls back to ascending primes.
std::vector<std::int64_t> tensor_factors(std::int64_t n);

/// Integer modulo d, always stored in [0, d).
class ModInt {
 public:
  ModInt(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  /// Representative in (-d/2, d/2], for printing.
  std::int64_t signed_value() const;

  bool invertible() const;
  ModInt inverse() const;
  ModInt pow(std::int64_t exponent) const;

  ModInt operator+(const ModInt& other) const;
  ModInt operator-(const ModInt& other) const;
  ModInt operator*(const ModInt& other) const;
  ModInt operator-() const;
  bool operator==(const ModInt& other) const = default;

 private:
  void check_same(const ModInt& other) const;

  std::int64_t value_;
  std::int64_t modulus_;
};

/// Legendre symbol (a|p); throws unless the modulus is an odd prime.
int legendre(const ModInt& a);

/// 2x2 matrix over Z/dZ with unit determinant, d odd and square-free.
class SymplecticMatrix {
 public:
  SymplecticMatrix(std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                   std::int64_t delta, std::int64_t modulus);

  static SymplecticMatrix identity(std::int64_t modulus);
  /// -1 in SL(2); represented by the parity operator.
  static SymplecticMatrix parity(std::int64_t modulus);

  const ModInt& alpha() const { return alpha_; }
  const ModInt& beta() const { return beta_; }
  const ModInt& gamma() const { return gamma_; }
  const ModInt& delta() const { return delta_; }
  std::int64_t modulus() const { return alpha_.modulus(); }

  ModInt trace() const { return alpha_ + delta_; }
  SymplecticMatrix inverse() const;
  SymplecticMatrix pow(std::int64_t exponent) const;
  bool is_identity() const;
  /// Multiplicative order; the group is finite so this always terminates.
  std::int64_t order() const;

  /// Applies the matrix to a column vector (i, j).
  std::array<std::int64_t, 2> apply(std::int64_t i, std::int64_t j) const;

  bool operator==(const SymplecticMatrix& other) const = default;
  std::string to_string() const;

 private:
  ModInt alpha_, beta_, gamma_, delta_;
};

SymplecticMatrix sympl_mul(const SymplecticMatrix& f1, const SymplecticMatrix& f2);
SymplecticMatrix operator*(const SymplecticMatrix& f1, const SymplecticMatrix& f2);

/// Result of splitting a matrix mod d(d-2) into its mod (d-2) and mod d parts.
struct CrtSplit {
  SymplecticMatrix left;   // modulus d - 2
  SymplecticMatrix right;  // modulus d
  ModInt kappa;            // (d - 1)/2, stored modulo d(d - 2)
};

CrtSplit crt_split(const SymplecticMatrix& f, std::int64_t d);
SymplecticMatrix crt_join(const CrtSplit& split);

/// General Chinese-remainder split over pairwise coprime factors. Factor k
/// receives (alpha, u^-1 beta; u gamma, delta) mod d_k with
/// u = (d / d_k)^-1 mod d_k; for the two-factor ladder case u = kappa.
std::vector<SymplecticMatrix> crt_factorize(const SymplecticMatrix& f,
                                            std::span<const std::int64_t> moduli);
SymplecticMatrix crt_combine(std::span<const SymplecticMatrix> parts);

/// Per-factor scale u_k = (d / d_k)^-1 mod d_k.
std::int64_t crt_scale(std::int64_t modulus, std::int64_t factor);

/// Returns G with G * source * G^-1 == target. Both must have order 3 and
/// trace -1. Prime moduli are searched exhaustively, composite moduli per
/// prime factor. Throws std::domain_error("not conjugate") otherwise.
SymplecticMatrix find_conjugator(const SymplecticMatrix& source,
                                 const SymplecticMatrix& target);

}  // namespace sic
