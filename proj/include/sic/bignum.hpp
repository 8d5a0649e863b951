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

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sic {

/// Decimal digits -> MPFR bits, with a small guard.
mpfr_prec_t digits_to_bits(int digits);
int bits_to_digits(mpfr_prec_t bits);

/// Arbitrary precision real. Precision is carried per value and given in
/// decimal digits; binary operations use the larger of the two.
class BigReal {
 public:
  explicit BigReal(int digits = 30);
  BigReal(long value, int digits);
  BigReal(double value, int digits);
  /// Parses a decimal string; throws on malformed input.
  BigReal(const std::string& text, int digits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(int digits);
  /// 10^e at the given precision.
  static BigReal pow10(long e, int digits);

  int digits() const;
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  /// Same value, rounded to a new precision.
  BigReal with_digits(int digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  std::string to_string() const { return to_string(digits()); }
  /// Like "1.2e-104"; used in reports.
  std::string sci(int digits = 3) const;
  /// log10 |x|, -inf for zero.
  double log10_abs() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
/// Rounds to the nearest integer, ties away from zero.
BigReal round(const BigReal& x);
/// Rounds to `digits` significant decimal digits (round to nearest).
BigReal truncate(const BigReal& x, int digits);
std::ostream& operator<<(std::ostream& os, const BigReal& x);

class BigComplex {
 public:
  explicit BigComplex(int digits = 30) : re(digits), im(digits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(long r, long i, int digits) : re(r, digits), im(i, digits) {}

  int digits() const { return re.digits(); }

  BigReal norm_sq() const { return re * re + im * im; }
  BigReal abs() const;
  /// Argument in (-pi, pi].
  BigReal arg() const;
  BigComplex conj() const { return BigComplex(re, -im); }

  BigComplex operator-() const { return BigComplex(-re, -im); }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigReal& b);

  BigReal re;
  BigReal im;
};

/// e^{i theta}.
BigComplex expi(const BigReal& theta);
/// e^{2 pi i k/n}; exactly 1 when n divides k.
BigComplex root_of_unity(long n, long k, int digits);

class BigComplexVector {
 public:
  BigComplexVector() = default;
  BigComplexVector(std::size_t dim, int digits);
  explicit BigComplexVector(std::vector<BigComplex> entries) : entries_(std::move(entries)) {}

  static BigComplexVector basis(std::size_t dim, std::size_t k, int digits);

  std::size_t dim() const { return entries_.size(); }
  int digits() const { return entries_.empty() ? 0 : entries_[0].digits(); }
  BigComplex& operator[](std::size_t i) { return entries_[i]; }
  const BigComplex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BigComplex>& entries() const { return entries_; }

  BigReal norm() const;
  BigComplexVector normalized() const;
  BigComplexVector with_digits(int digits) const;

  BigComplexVector& operator+=(const BigComplexVector& o);
  BigComplexVector& operator-=(const BigComplexVector& o);
  BigComplexVector operator*(const BigComplex& s) const;
  BigComplexVector operator*(const BigReal& s) const;
  friend BigComplexVector operator+(BigComplexVector a, const BigComplexVector& b) { return a += b; }
  friend BigComplexVector operator-(BigComplexVector a, const BigComplexVector& b) { return a -= b; }

  /// Max |a_i - b_i|.
  BigReal max_abs_diff(const BigComplexVector& o) const;

 private:
  std::vector<BigComplex> entries_;
};

/// <u|v>, conjugate-linear in u.
BigComplex inner(const BigComplexVector& u, const BigComplexVector& v);
/// Tensor product, index i * dim(b) + j.
BigComplexVector kron(const BigComplexVector& a, const BigComplexVector& b);
/// Every component rounded to `digits` significant digits.
BigComplexVector truncate(const BigComplexVector& v, int digits);

class BigComplexMatrix {
 public:
  BigComplexMatrix() = default;
  BigComplexMatrix(std::size_t rows, std::size_t cols, int digits);

  static BigComplexMatrix identity(std::size_t n, int digits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int digits() const { return entries_.empty() ? 0 : entries_[0].digits(); }
  BigComplex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigComplex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  BigComplexMatrix adjoint() const;
  BigComplexMatrix operator*(const BigComplexMatrix& o) const;
  BigComplexVector operator*(const BigComplexVector& v) const;
  BigComplexMatrix operator*(const BigComplex& s) const;
  BigComplexMatrix& operator+=(const BigComplexMatrix& o);
  BigComplexMatrix operator-(const BigComplexMatrix& o) const;

  BigComplex trace() const;
  BigReal max_abs() const;
  BigReal max_abs_diff(const BigComplexMatrix& o) const;
  BigComplexVector column(std::size_t c) const;
  /// ||U^dagger U - I||_max < 10^-(P-10) with P the working precision.
  bool is_unitary() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigComplex> entries_;
};

BigComplexMatrix kron(const BigComplexMatrix& a, const BigComplexMatrix& b);

/// "re im" with a fixed number of significant digits.
std::string serialize(const BigComplex& z, int digits);
BigComplex parse_complex(const std::string& line, int digits);

}  // namespace sic
