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
#include <utility>
#include <vector>

#include "sic/bignum.hpp"
#include "sic/modarith.hpp"

namespace sic {

/// Label p = (i, j) of the displacement operator D_p = tau^{ij} X^i Z^j.
struct DisplacementIndex {
  DisplacementIndex(std::int64_t i_, std::int64_t j_, std::int64_t d) : i(i_, d), j(j_, d) {}
  ModInt i;
  ModInt j;
  std::int64_t dim() const { return i.modulus(); }
  bool is_zero() const { return i.value() == 0 && j.value() == 0; }
};

DisplacementIndex operator*(const SymplecticMatrix& f, const DisplacementIndex& p);

/// Powers of e^{2 pi i / n}, cached at one precision.
class RootTable {
 public:
  RootTable(long n, int digits);
  long order() const { return n_; }
  const BigComplex& operator[](long k) const { return roots_[((k % n_) + n_) % n_]; }

 private:
  long n_;
  std::vector<BigComplex> roots_;
};

struct MetaplecticUnitary {
  SymplecticMatrix source;
  BigComplexMatrix matrix;
  /// e^{i theta}; for composite d the product of the per-factor phases.
  BigComplex phase_theta;
};

/// Z = diag(w^r), X|r> = |r+1>.
std::pair<BigComplexMatrix, BigComplexMatrix> clock_shift(std::int64_t d, int digits);

/// Dense D_p, tau = -e^{i pi/d}.
BigComplexMatrix displacement(const DisplacementIndex& p, int digits);

/// D_p v in O(d), reusing a table of 2d-th roots of unity.
BigComplexVector apply_displacement(const DisplacementIndex& p, const BigComplexVector& v,
                                    const RootTable& roots2d);

/// Weil representation with the Legendre-symbol phase convention. Composite
/// moduli are handled by splitting over tensor_factors(d) and mapping the
/// tensor basis back to the standard basis.
MetaplecticUnitary metaplectic(const SymplecticMatrix& f, int digits);

/// Index of the standard basis vector |r> inside the tensor basis of `factors`.
std::size_t tensor_index(std::int64_t r, const std::vector<std::int64_t>& factors);
/// Reorders a tensor-basis vector (left factor most significant) into
/// standard-basis order, and back.
BigComplexVector tensor_to_standard(const BigComplexVector& v, const std::vector<std::int64_t>& factors);
BigComplexVector standard_to_tensor(const BigComplexVector& v, const std::vector<std::int64_t>& factors);

/// ||U_F D_p U_F^dagger - D_{Fp}||_max.
BigReal covariance_check(const SymplecticMatrix& f, const DisplacementIndex& p, int digits);

/// Unitary of an order-3 representative; throws if rep^3 != 1.
MetaplecticUnitary zauner_unitary(std::int64_t d, const SymplecticMatrix& rep, int digits);

/// Smallest n <= 24 with u^n = I (within tolerance); throws if none.
int unitary_order(const BigComplexMatrix& u);

/// (1/n) sum_k conj(lambda)^k u^k.
BigComplexMatrix subspace_projector(const BigComplexMatrix& u, const BigComplex& eigenvalue, int digits);
/// Same, using U_{F^k} = (U_F)^k so no matrix powers are formed.
BigComplexMatrix subspace_projector(const SymplecticMatrix& f, const BigComplex& eigenvalue, int digits);

/// Entrywise complex conjugate (the anti-unitary utility).
BigComplexVector conjugate(const BigComplexVector& v);

}  // namespace sic
