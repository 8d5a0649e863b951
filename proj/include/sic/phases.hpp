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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sic/bignum.hpp"

namespace sic {

/// q1 + q2 sqrt(D) with exact rationals.
class QuadraticElement {
 public:
  QuadraticElement() : q1_(0), q2_(0), d_(3) {}
  QuadraticElement(mpq_class q1, mpq_class q2, long D = 3);

  const mpq_class& q1() const { return q1_; }
  const mpq_class& q2() const { return q2_; }
  long D() const { return d_; }
  bool is_zero() const { return q1_ == 0 && q2_ == 0; }
  bool is_rational() const { return q2_ == 0; }

  QuadraticElement operator+(const QuadraticElement& o) const;
  QuadraticElement operator-(const QuadraticElement& o) const;
  QuadraticElement operator*(const QuadraticElement& o) const;
  QuadraticElement operator-() const { return {-q1_, -q2_, d_}; }
  bool operator==(const QuadraticElement& o) const;
  bool operator!=(const QuadraticElement& o) const { return !(*this == o); }

  /// Exact sign of q1 + q2 sqrt(D).
  int sign() const;

  /// "q1 + q2*sqrt3"; the sqrt term is dropped when q2 = 0.
  std::string to_string() const;
  static QuadraticElement parse(const std::string& text, long D = 3);

 private:
  void check(const QuadraticElement& o) const;
  mpq_class q1_, q2_;
  long d_;
};

BigReal eval_quadratic(const QuadraticElement& x, int digits);

enum class PythagoreanKind { P5, Q2, P13, Q13, P37, Q37, P241, Q241 };

inline constexpr std::array<PythagoreanKind, 8> kAllPythagorean = {
    PythagoreanKind::P5,  PythagoreanKind::Q2,  PythagoreanKind::P13,  PythagoreanKind::Q13,
    PythagoreanKind::P37, PythagoreanKind::Q37, PythagoreanKind::P241, PythagoreanKind::Q241};

std::string to_string(PythagoreanKind kind);
PythagoreanKind parse_pythagorean(const std::string& name);

/// re + i * im_coeff, both in Q(sqrt3).
struct PythagoreanFactor {
  PythagoreanKind kind;
  QuadraticElement re;
  QuadraticElement im_coeff;
  bool is_unit() const;
};

PythagoreanFactor pythagorean(PythagoreanKind kind);
/// Principal argument of the factor.
BigReal pythagorean_arg(PythagoreanKind kind, int digits);
BigComplex pythagorean_value(PythagoreanKind kind, int digits);

/// exp(2 pi i k/n), kept reduced with 0 <= k < n.
struct RootOfUnity {
  RootOfUnity(long k_ = 0, long n_ = 1);
  long k;
  long n;
  mpq_class turn() const { return mpq_class(k, n); }
};

/// One multiplicand inside a base: a root of unity or a generator, with an
/// integer exponent.
struct PhaseAtom {
  bool is_root = true;
  RootOfUnity root;                               // when is_root
  PythagoreanKind kind = PythagoreanKind::P5;     // otherwise
  bool imag_unit = false;                         // print the root as "i"
  long exponent = 1;
};

struct PhaseBase {
  int sign = 1;
  std::vector<PhaseAtom> atoms;
  bool has_generator() const;
};

/// base^exponent with the principal branch of the whole base.
struct PhaseTerm {
  PhaseBase base;
  mpq_class exponent = 1;
  bool grouped = false;  // printed with parentheses
};

/// sign * prod_t term_t. Empty means 1.
struct PhaseExpression {
  int sign = 1;
  std::vector<PhaseTerm> terms;

  bool is_one_literal() const { return sign == 1 && terms.empty(); }
};

/// Exact normal form: exp(2 pi i turn) * prod_g exp(i e_g Arg g), with Q2
/// folded into the turn. Two expressions are equal iff their forms agree.
struct CanonicalPhase {
  mpq_class turn;                               // in [0, 1)
  std::map<PythagoreanKind, mpq_class> exponents;  // nonzero only, Q2 never present
  bool operator==(const CanonicalPhase& o) const { return turn == o.turn && exponents == o.exponents; }
};

PhaseExpression parse_phase(const std::string& text);
std::string to_string(const PhaseExpression& expr);

/// Angle of the expression (not reduced); exp(i angle) = eval_phase.
BigReal phase_angle(const PhaseExpression& expr, int digits);
BigComplex eval_phase(const PhaseExpression& expr, int digits);

CanonicalPhase canonicalize(const PhaseExpression& expr);
PhaseExpression from_canonical(const CanonicalPhase& c);
bool phase_equal(const PhaseExpression& a, const PhaseExpression& b);

/// Element of Q(w_n): sum_k c_k w_n^k. Coefficients are not unique, so
/// comparisons go through the reduction modulo the cyclotomic polynomial.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(long conductor = 1);
  static CyclotomicNumber rational(const mpq_class& q);
  /// w_n^k.
  static CyclotomicNumber root(long n, long k);

  long conductor() const { return n_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  /// Same number expressed over w_m, m a multiple of the conductor.
  CyclotomicNumber lift(long m) const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const mpq_class& q) const;
  CyclotomicNumber operator-() const { return *this * mpq_class(-1); }
  CyclotomicNumber conj() const;
  /// Coefficients modulo the n-th cyclotomic polynomial, length phi(n).
  std::vector<mpq_class> reduced() const;
  bool operator==(const CyclotomicNumber& o) const;
  bool is_zero() const;
  bool is_real() const { return *this == conj(); }

  BigComplex eval(int digits) const;

 private:
  long n_;
  std::vector<mpq_class> c_;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<mpz_class> cyclotomic_polynomial(long n);

/// Least common multiple of the exponent denominators.
long exponent_lcm(const PhaseExpression& expr);
/// prod_t base_t^(L e_t) by exact integer powers (no branch choice), L = exponent_lcm.
BigComplex debranched_power(const PhaseExpression& expr, int digits);

}  // namespace sic
