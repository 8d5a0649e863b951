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

#include "sic/bignum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sic {

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

int bits_to_digits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor((bits - 16) / 3.321928094887362 + 1e-9));
}

namespace {

mpfr_prec_t max_prec(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

BigReal::BigReal(int digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, int digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, int digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const std::string& text, int digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  if (text.empty() || mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("malformed number '" + text + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // steal the limbs, leave other as a valid tiny number
  *v_ = *other.v_;
  mpfr_init2(other.v_, MPFR_PREC_MIN);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(int digits) {
  BigReal r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long e, int digits) {
  BigReal r(digits);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

int BigReal::digits() const { return bits_to_digits(mpfr_get_prec(v_)); }

BigReal BigReal::with_digits(int digits) const {
  BigReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BigReal::sci(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  BigReal t(digits());
  mpfr_abs(t.v_, v_, MPFR_RNDN);
  mpfr_log10(t.v_, t.v_, MPFR_RNDN);
  return t.to_double();
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

#define SIC_BINOP(OP, FN)                                  \
  BigReal operator OP(const BigReal& a, const BigReal& b) { \
    BigReal r(1);                                           \
    mpfr_set_prec(r.v_, max_prec(a.v_, b.v_));              \
    FN(r.v_, a.v_, b.v_, MPFR_RNDN);                        \
    return r;                                               \
  }
SIC_BINOP(+, mpfr_add)
SIC_BINOP(-, mpfr_sub)
SIC_BINOP(*, mpfr_mul)
SIC_BINOP(/, mpfr_div)
#undef SIC_BINOP

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a);
  mpfr_mul_si(r.v_, r.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a);
  mpfr_div_si(r.v_, r.v_, b, MPFR_RNDN);
  return r;
}

#define SIC_UNARY(NAME, FN)            \
  BigReal NAME(const BigReal& x) {     \
    BigReal r(x);                      \
    FN(r.raw(), x.raw(), MPFR_RNDN);   \
    return r;                          \
  }
SIC_UNARY(abs, mpfr_abs)
SIC_UNARY(sqrt, mpfr_sqrt)
SIC_UNARY(exp, mpfr_exp)
SIC_UNARY(log, mpfr_log)
SIC_UNARY(sin, mpfr_sin)
SIC_UNARY(cos, mpfr_cos)
#undef SIC_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(1);
  mpfr_set_prec(r.raw(), max_prec(y.raw(), x.raw()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal round(const BigReal& x) {
  BigReal r(x);
  mpfr_round(r.raw(), x.raw());
  return r;
}

BigReal truncate(const BigReal& x, int digits) {
  if (digits < 1) throw std::invalid_argument("truncation needs at least one digit");
  if (x.is_zero()) return x;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x.raw(), MPFR_RNDN);
  std::string text(s);
  mpfr_free_str(s);
  bool neg = !text.empty() && text[0] == '-';
  std::string mant = neg ? text.substr(1) : text;
  std::ostringstream os;
  os << (neg ? "-" : "") << "0." << mant << "e" << e;
  return BigReal(os.str(), x.digits());
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

BigReal BigComplex::abs() const {
  BigReal r(re);
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

BigReal BigComplex::arg() const { return atan2(im, re); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return BigComplex(a.re * b, a.im * b); }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal n = b.norm_sq();
  return BigComplex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

BigComplex operator/(const BigComplex& a, const BigReal& b) { return BigComplex(a.re / b, a.im / b); }

BigComplex expi(const BigReal& theta) {
  BigReal s(theta), c(theta);
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex root_of_unity(long n, long k, int digits) {
  if (n <= 0) throw std::invalid_argument("root of unity order must be positive");
  long r = ((k % n) + n) % n;
  if (r == 0) return BigComplex(1, 0, digits);
  // exact values on the axes
  if (2 * r == n) return BigComplex(-1, 0, digits);
  if (4 * r == n) return BigComplex(0, 1, digits);
  if (4 * r == 3 * n) return BigComplex(0, -1, digits);
  BigReal theta = BigReal::pi(digits) * (2 * r);
  theta = theta / n;
  return expi(theta);
}

BigComplexVector::BigComplexVector(std::size_t dim, int digits)
    : entries_(dim, BigComplex(digits)) {}

BigComplexVector BigComplexVector::basis(std::size_t dim, std::size_t k, int digits) {
  if (k >= dim) throw std::out_of_range("basis index out of range");
  BigComplexVector v(dim, digits);
  v[k] = BigComplex(1, 0, digits);
  return v;
}

BigReal BigComplexVector::norm() const {
  if (entries_.empty()) return BigReal(0L, 30);
  BigReal acc(digits());
  BigReal t(digits());
  for (const auto& z : entries_) {
    mpfr_sqr(t.raw(), z.re.raw(), MPFR_RNDN);
    acc += t;
    mpfr_sqr(t.raw(), z.im.raw(), MPFR_RNDN);
    acc += t;
  }
  return sqrt(acc);
}

BigComplexVector BigComplexVector::normalized() const {
  BigReal n = norm();
  if (n.is_zero()) throw std::domain_error("cannot normalize the zero vector");
  BigReal inv = BigReal(1L, n.digits()) / n;
  return *this * inv;
}

BigComplexVector BigComplexVector::with_digits(int digits) const {
  std::vector<BigComplex> out;
  out.reserve(entries_.size());
  for (const auto& z : entries_) out.emplace_back(z.re.with_digits(digits), z.im.with_digits(digits));
  return BigComplexVector(std::move(out));
}

BigComplexVector& BigComplexVector::operator+=(const BigComplexVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

BigComplexVector& BigComplexVector::operator-=(const BigComplexVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

BigComplexVector BigComplexVector::operator*(const BigComplex& s) const {
  std::vector<BigComplex> out;
  out.reserve(dim());
  for (const auto& z : entries_) out.push_back(z * s);
  return BigComplexVector(std::move(out));
}

BigComplexVector BigComplexVector::operator*(const BigReal& s) const {
  std::vector<BigComplex> out;
  out.reserve(dim());
  for (const auto& z : entries_) out.push_back(z * s);
  return BigComplexVector(std::move(out));
}

BigReal BigComplexVector::max_abs_diff(const BigComplexVector& o) const {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  BigReal best(0L, std::max(digits(), 10));
  for (std::size_t i = 0; i < dim(); ++i) {
    BigReal a = (entries_[i] - o.entries_[i]).abs();
    if (a > best) best = a;
  }
  return best;
}

BigComplex inner(const BigComplexVector& u, const BigComplexVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in inner product");
  int digits = std::max(u.digits(), v.digits());
  BigComplex acc(digits);
  BigReal t(digits);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    // conj(a) b = (ar br + ai bi) + i (ar bi - ai br)
    mpfr_mul(t.raw(), u[i].re.raw(), v[i].re.raw(), MPFR_RNDN);
    mpfr_add(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
    mpfr_mul(t.raw(), u[i].im.raw(), v[i].im.raw(), MPFR_RNDN);
    mpfr_add(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
    mpfr_mul(t.raw(), u[i].re.raw(), v[i].im.raw(), MPFR_RNDN);
    mpfr_add(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
    mpfr_mul(t.raw(), u[i].im.raw(), v[i].re.raw(), MPFR_RNDN);
    mpfr_sub(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
  }
  return acc;
}

BigComplexVector kron(const BigComplexVector& a, const BigComplexVector& b) {
  std::vector<BigComplex> out;
  out.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(a[i] * b[j]);
  }
  return BigComplexVector(std::move(out));
}

BigComplexVector truncate(const BigComplexVector& v, int digits) {
  std::vector<BigComplex> out;
  out.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.emplace_back(truncate(v[i].re, digits), truncate(v[i].im, digits));
  }
  return BigComplexVector(std::move(out));
}

BigComplexMatrix::BigComplexMatrix(std::size_t rows, std::size_t cols, int digits)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigComplex(digits)) {}

BigComplexMatrix BigComplexMatrix::identity(std::size_t n, int digits) {
  BigComplexMatrix m(n, n, digits);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = BigComplex(1, 0, digits);
  return m;
}

BigComplexMatrix BigComplexMatrix::adjoint() const {
  BigComplexMatrix m(cols_, rows_, digits());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  }
  return m;
}

BigComplexMatrix BigComplexMatrix::operator*(const BigComplexMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  int digits = std::max(this->digits(), o.digits());
  BigComplexMatrix m(rows_, o.cols_, digits);
  BigReal t(digits);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigComplex& a = (*this)(r, k);
      if (a.re.is_zero() && a.im.is_zero()) continue;  // monomial matrices are common
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const BigComplex& b = o(k, c);
        BigComplex& acc = m(r, c);
        mpfr_mul(t.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul(t.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_sub(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul(t.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_add(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul(t.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
      }
    }
  }
  return m;
}

BigComplexVector BigComplexMatrix::operator*(const BigComplexVector& v) const {
  if (cols_ != v.dim()) throw std::invalid_argument("matrix-vector shape mismatch");
  int digits = std::max(this->digits(), v.digits());
  BigComplexVector out(rows_, digits);
  BigReal t(digits);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigComplex& acc = out[r];
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigComplex& a = (*this)(r, k);
      const BigComplex& b = v[k];
      mpfr_mul(t.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
      mpfr_add(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
      mpfr_sub(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
      mpfr_add(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
      mpfr_add(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
    }
  }
  return out;
}

BigComplexMatrix BigComplexMatrix::operator*(const BigComplex& s) const {
  BigComplexMatrix m(*this);
  for (auto& z : m.entries_) z = z * s;
  return m;
}

BigComplexMatrix& BigComplexMatrix::operator+=(const BigComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

BigComplexMatrix BigComplexMatrix::operator-(const BigComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  BigComplexMatrix m(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] -= o.entries_[i];
  return m;
}

BigComplex BigComplexMatrix::trace() const {
  BigComplex acc(digits());
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

BigReal BigComplexMatrix::max_abs() const {
  BigReal best(0L, std::max(digits(), 10));
  for (const auto& z : entries_) {
    BigReal a = z.abs();
    if (a > best) best = a;
  }
  return best;
}

BigReal BigComplexMatrix::max_abs_diff(const BigComplexMatrix& o) const { return (*this - o).max_abs(); }

BigComplexVector BigComplexMatrix::column(std::size_t c) const {
  std::vector<BigComplex> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return BigComplexVector(std::move(out));
}

bool BigComplexMatrix::is_unitary() const {
  if (rows_ != cols_) return false;
  BigReal err = (adjoint() * *this).max_abs_diff(identity(rows_, digits()));
  return err < BigReal::pow10(-(digits() - 10), digits());
}

BigComplexMatrix kron(const BigComplexMatrix& a, const BigComplexMatrix& b) {
  BigComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), std::max(a.digits(), b.digits()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigComplex& x = a(i, j);
      if (x.re.is_zero() && x.im.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
      }
    }
  }
  return m;
}

std::string serialize(const BigComplex& z, int digits) {
  return z.re.to_string(digits) + " " + z.im.to_string(digits);
}

BigComplex parse_complex(const std::string& line, int digits) {
  std::istringstream is(line);
  std::string a, b, extra;
  if (!(is >> a >> b) || (is >> extra)) throw std::invalid_argument("expected 're im', got '" + line + "'");
  return BigComplex(BigReal(a, digits), BigReal(b, digits));
}

}  // namespace sic
