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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sic/bignum.hpp"
#include "sic/fiducials.hpp"
#include "sic/phases.hpp"

namespace sic {

struct IntegerRelation {
  std::vector<mpz_class> coefficients;
  BigReal residual;  // |sum c_k x_k|
  int input_precision = 0;

  mpz_class max_abs() const;
};

/// Accepted integer relations among the values, smallest coefficients first.
/// A reduced lattice row is accepted when its residual is below 10^{-0.6 Q},
/// its coefficients are bounded by coeff_bound and Q >= n log10(max|c|) + 5,
/// i.e. the input carries enough digits to pin down n integers of that size.
/// Throws std::invalid_argument for Q < 10.
std::vector<IntegerRelation> find_relations(const std::vector<BigReal>& values, long coeff_bound, int precision);
std::optional<IntegerRelation> find_relation(const std::vector<BigReal>& values, long coeff_bound, int precision);

inline constexpr long kDefaultMaxDen = 1200;
inline constexpr long kDefaultMaxExpDen = 144;

/// q1 + q2 sqrt(D) with denominators <= max_den matching x within 10^{-(Q-4)}.
std::optional<QuadraticElement> recognize_quadratic(const BigReal& x, long D, long max_den, int precision);

struct RecognizedPhase {
  PhaseExpression expression;
  BigReal residual;
};

/// Generators used for phase recognition in dimension d (Q2 is a root of
/// unity and enters through the 2 pi column).
std::vector<PythagoreanKind> default_dictionary(std::int64_t d);
std::vector<PythagoreanKind> parse_dictionary(const std::string& text);  // "P5,P13,Q13"

/// angle = -(sum n_k Arg g_k + 2 pi m) / c0 with 0 < c0 <= max_exp_den.
/// Throws std::domain_error on a NaN angle.
std::optional<RecognizedPhase> recognize_phase(const BigReal& angle, const std::vector<PythagoreanKind>& dictionary,
                                               long max_exp_den, int precision);

struct EntryReport {
  std::size_t index = 0;
  bool modulus_ok = false;
  bool phase_ok = false;
  std::optional<QuadraticElement> modulus;
  std::optional<PhaseExpression> phase;  // empty for a zero modulus
  BigReal modulus_residual;
  BigReal phase_residual;
  std::string message;

  bool ok() const { return modulus_ok && phase_ok; }
};

struct ConvertOptions {
  long D = 3;
  std::vector<PythagoreanKind> dictionary;  // empty: default_dictionary(dim)
  long max_den = kDefaultMaxDen;
  long max_exp_den = kDefaultMaxExpDen;
  bool moduli = true;
  bool phases = true;
  std::string name = "converted";
};

struct ConvertReport {
  std::vector<EntryReport> entries;
  BigReal span_residual;  // part of v outside the adapted span
  /// Present only when every entry was recognized and the moduli sum to 1
  /// exactly.
  std::optional<FiducialSpec> spec;
  std::string message;

  bool success() const { return spec.has_value(); }
  /// JSON text with one object per entry.
  std::string to_json() const;
};

ConvertReport convert(const BigComplexVector& v, const std::string& basis_id, int precision,
                      const ConvertOptions& options = {});

struct SweepResult {
  int min_moduli_digits = 0;  // 0 when even the start precision failed
  int min_phase_digits = 0;
};

/// Lowers the precision in steps from start until convert stops
/// reproducing the embedded spec; moduli and phases are scanned separately.
SweepResult precision_sweep(const std::string& name, int step = 5, int start = 100);
/// True iff the truncated fiducial converts back to the embedded spec's
/// moduli (phases) at Q digits.
bool sweep_point(const FiducialSpec& spec, const BigComplexVector& exact, int digits, bool phases);

}  // namespace sic
