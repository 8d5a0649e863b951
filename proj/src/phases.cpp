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

#include "sic/phases.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace sic {

// ---------------------------------------------------------------- quadratic

QuadraticElement::QuadraticElement(mpq_class q1, mpq_class q2, long D)
    : q1_(std::move(q1)), q2_(std::move(q2)), d_(D) {
  if (D <= 0) throw std::invalid_argument("D must be positive");
  q1_.canonicalize();
  q2_.canonicalize();
}

void QuadraticElement::check(const QuadraticElement& o) const {
  if (o.d_ != d_) throw std::invalid_argument("quadratic fields differ");
}

QuadraticElement QuadraticElement::operator+(const QuadraticElement& o) const {
  check(o);
  return {q1_ + o.q1_, q2_ + o.q2_, d_};
}

QuadraticElement QuadraticElement::operator-(const QuadraticElement& o) const {
  check(o);
  return {q1_ - o.q1_, q2_ - o.q2_, d_};
}

QuadraticElement QuadraticElement::operator*(const QuadraticElement& o) const {
  check(o);
  return {q1_ * o.q1_ + q2_ * o.q2_ * d_, q1_ * o.q2_ + q2_ * o.q1_, d_};
}

bool QuadraticElement::operator==(const QuadraticElement& o) const {
  return d_ == o.d_ && q1_ == o.q1_ && q2_ == o.q2_;
}

int QuadraticElement::sign() const {
  int s1 = sgn(q1_), s2 = sgn(q2_);
  if (s1 >= 0 && s2 >= 0) return (s1 || s2) ? 1 : 0;
  if (s1 <= 0 && s2 <= 0) return -1;
  // opposite signs: compare q1^2 with D q2^2
  mpq_class a = q1_ * q1_, b = q2_ * q2_ * d_;
  if (a == b) return 0;
  return (a > b) ? s1 : s2;
}

std::string QuadraticElement::to_string() const {
  std::string s = q1_.get_str();
  if (q2_ == 0) return s;
  mpq_class a = abs(q2_);
  s += (q2_ < 0 ? " - " : " + ") + a.get_str() + "*sqrt" + std::to_string(d_);
  return s;
}

QuadraticElement QuadraticElement::parse(const std::string& text, long D) {
  static const std::regex full(
      R"(^\s*([+-]?\s*\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\s*(\d+))?\s*$)");
  static const std::regex only_sqrt(R"(^\s*([+-]?)\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\s*(\d+)\s*$)");
  std::smatch m;
  auto clean = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  if (std::regex_match(text, m, full)) {
    mpq_class q1(clean(m[1].str()));
    mpq_class q2(0);
    if (m[2].matched) {
      if (std::stol(m[4].str()) != D) throw std::invalid_argument("unexpected square root in '" + text + "'");
      q2 = mpq_class(m[3].str());
      if (m[2].str() == "-") q2 = -q2;
    }
    q1.canonicalize();
    q2.canonicalize();
    return {q1, q2, D};
  }
  if (std::regex_match(text, m, only_sqrt)) {
    if (std::stol(m[3].str()) != D) throw std::invalid_argument("unexpected square root in '" + text + "'");
    mpq_class q2(m[2].str());
    q2.canonicalize();
    if (m[1].str() == "-") q2 = -q2;
    return {mpq_class(0), q2, D};
  }
  throw std::invalid_argument("cannot parse quadratic element '" + text + "'");
}

namespace {

BigReal to_big(const mpq_class& q, int digits) {
  BigReal r(digits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal eval_quadratic(const QuadraticElement& x, int digits) {
  BigReal r = to_big(x.q1(), digits);
  if (x.q2() != 0) r += to_big(x.q2(), digits) * sqrt(BigReal(x.D(), digits));
  return r;
}

// ---------------------------------------------------------------- generators

std::string to_string(PythagoreanKind kind) {
  switch (kind) {
    case PythagoreanKind::P5: return "P5";
    case PythagoreanKind::Q2: return "Q2";
    case PythagoreanKind::P13: return "P13";
    case PythagoreanKind::Q13: return "Q13";
    case PythagoreanKind::P37: return "P37";
    case PythagoreanKind::Q37: return "Q37";
    case PythagoreanKind::P241: return "P241";
    case PythagoreanKind::Q241: return "Q241";
  }
  throw std::invalid_argument("unknown generator");
}

PythagoreanKind parse_pythagorean(const std::string& name) {
  for (auto k : kAllPythagorean) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

bool PythagoreanFactor::is_unit() const {
  // im_coeff is the coefficient of i; |z|^2 = re^2 + im_coeff^2
  return (re * re + im_coeff * im_coeff) == QuadraticElement(1, 0);
}

PythagoreanFactor pythagorean(PythagoreanKind kind) {
  auto q = [](long a, long b) { return mpq_class(a, b); };
  switch (kind) {
    case PythagoreanKind::P5: return {kind, {q(-3, 5), 0}, {q(4, 5), 0}};
    case PythagoreanKind::Q2: return {kind, {q(-1, 2), 0}, {0, q(1, 2)}};
    case PythagoreanKind::P13: return {kind, {q(-5, 13), 0}, {q(12, 13), 0}};
    case PythagoreanKind::Q13: return {kind, {q(-11, 13), 0}, {0, q(4, 13)}};
    case PythagoreanKind::P37: return {kind, {q(-12, 37), 0}, {q(35, 37), 0}};
    case PythagoreanKind::Q37: return {kind, {q(-13, 37), 0}, {0, q(20, 37)}};
    case PythagoreanKind::P241: return {kind, {q(-120, 241), 0}, {q(209, 241), 0}};
    case PythagoreanKind::Q241: return {kind, {q(-143, 241), 0}, {0, q(112, 241)}};
  }
  throw std::invalid_argument("unknown generator");
}

BigComplex pythagorean_value(PythagoreanKind kind, int digits) {
  auto f = pythagorean(kind);
  return BigComplex(eval_quadratic(f.re, digits), eval_quadratic(f.im_coeff, digits));
}

BigReal pythagorean_arg(PythagoreanKind kind, int digits) {
  if (kind == PythagoreanKind::Q2) return BigReal::pi(digits) * 2L / 3L;
  return pythagorean_value(kind, digits).arg();
}

RootOfUnity::RootOfUnity(long k_, long n_) : k(k_), n(n_) {
  if (n <= 0) throw std::invalid_argument("root of unity order must be positive");
  k = ((k % n) + n) % n;
}

bool PhaseBase::has_generator() const {
  for (const auto& a : atoms) {
    if (!a.is_root) return true;
  }
  return false;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Tokenizer {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  std::string source;

  explicit Tokenizer(const std::string& s) : source(s) {
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == 'P' || c == 'Q' || c == 'w') {
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i + 1) fail("expected digits after '" + std::string(1, c) + "'");
        toks.push_back(s.substr(i, j - i));
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks.push_back(s.substr(i, j - i));
        i = j;
      } else if (std::string("-*/^()i").find(c) != std::string::npos) {
        toks.emplace_back(1, c);
        ++i;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("phase syntax error in '" + source + "': " + msg);
  }
  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos];
  }
  std::string take() {
    if (done()) fail("unexpected end of input");
    return toks[pos++];
  }
  void expect(const std::string& t) {
    if (take() != t) fail("expected '" + t + "'");
  }
};

bool is_number(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Node;
struct Factor {
  std::shared_ptr<Node> node;
  mpq_class exponent;
};
struct Node {
  bool is_group = false;
  bool is_one = false;
  PhaseAtom atom;
  int sign = 1;
  std::vector<Factor> factors;
};

std::shared_ptr<Node> parse_group(Tokenizer& t);

mpq_class parse_exponent(Tokenizer& t) {
  if (t.peek() == "(") {
    t.take();
    int s = 1;
    if (t.peek() == "-") {
      t.take();
      s = -1;
    }
    std::string n = t.take();
    if (!is_number(n)) t.fail("bad exponent");
    mpq_class e(n);
    if (t.peek() == "/") {
      t.take();
      std::string d = t.take();
      if (!is_number(d) || d == "0") t.fail("bad exponent denominator");
      e = mpq_class(n + "/" + d);
    }
    t.expect(")");
    e.canonicalize();
    return s * e;
  }
  int s = 1;
  if (t.peek() == "-") {
    t.take();
    s = -1;
  }
  std::string n = t.take();
  if (!is_number(n)) t.fail("bad exponent");
  return mpq_class(s) * mpq_class(n);
}

std::shared_ptr<Node> parse_atom(Tokenizer& t) {
  std::string tok = t.take();
  auto node = std::make_shared<Node>();
  if (tok == "(") {
    node = parse_group(t);
    t.expect(")");
    return node;
  }
  if (tok == "1") {
    node->is_one = true;
    return node;
  }
  if (tok == "i") {
    node->atom.is_root = true;
    node->atom.root = RootOfUnity(1, 4);
    node->atom.imag_unit = true;
    return node;
  }
  if (tok[0] == 'w') {
    long n = std::stol(tok.substr(1));
    if (n <= 0) t.fail("root of unity order must be positive");
    node->atom.is_root = true;
    node->atom.root = RootOfUnity(1, n);
    return node;
  }
  if (tok[0] == 'P' || tok[0] == 'Q') {
    node->atom.is_root = false;
    try {
      node->atom.kind = parse_pythagorean(tok);
    } catch (const std::invalid_argument&) {
      t.fail("unknown generator '" + tok + "'");
    }
    return node;
  }
  t.fail("unexpected token '" + tok + "'");
}

Factor parse_factor(Tokenizer& t) {
  Factor f{parse_atom(t), mpq_class(1)};
  if (t.peek() == "^") {
    t.take();
    f.exponent = parse_exponent(t);
  }
  return f;
}

std::shared_ptr<Node> parse_group(Tokenizer& t) {
  auto g = std::make_shared<Node>();
  g->is_group = true;
  if (t.peek() == "-") {
    t.take();
    g->sign = -1;
  }
  g->factors.push_back(parse_factor(t));
  while (t.peek() == "*" || t.peek() == "/") {
    bool inv = t.take() == "/";
    Factor f = parse_factor(t);
    if (inv) f.exponent = -f.exponent;
    g->factors.push_back(f);
  }
  return g;
}

// flattens a group with an integer overall power into sign and atoms
void flatten(const Node& n, long power, PhaseBase& base, Tokenizer& t) {
  if (!n.is_group) {
    if (n.is_one) return;
    PhaseAtom a = n.atom;
    a.exponent = power;
    base.atoms.push_back(a);
    return;
  }
  if (n.sign < 0 && (power % 2 != 0)) base.sign = -base.sign;
  for (const auto& f : n.factors) {
    if (f.exponent.get_den() != 1) t.fail("fractional exponent inside a grouped base");
    flatten(*f.node, power * f.exponent.get_num().get_si(), base, t);
  }
}

}  // namespace

PhaseExpression parse_phase(const std::string& text) {
  Tokenizer t(text);
  if (t.toks.empty()) t.fail("empty expression");
  auto top = parse_group(t);
  if (!t.done()) t.fail("trailing input");
  PhaseExpression expr;
  expr.sign = top->sign;
  for (const auto& f : top->factors) {
    const Node& n = *f.node;
    if (!n.is_group && n.is_one) continue;
    PhaseTerm term;
    term.exponent = f.exponent;
    if (n.is_group) {
      term.grouped = true;
      flatten(n, 1, term.base, t);
    } else {
      term.base.atoms.push_back(n.atom);
    }
    expr.terms.push_back(std::move(term));
  }
  return expr;
}

namespace {

std::string atom_name(const PhaseAtom& a) {
  if (!a.is_root) return to_string(a.kind);
  if (a.imag_unit) return "i";
  // roots are stored as (1, n) when parsed; general k printed as a power
  return "w" + std::to_string(a.root.n);
}

std::string atom_string(const PhaseAtom& a, long e) {
  long power = e * (a.is_root && !a.imag_unit ? a.root.k : 1);
  std::string s = atom_name(a);
  if (power != 1) s += "^" + (power < 0 ? "(" + std::to_string(power) + ")" : std::to_string(power));
  return s;
}

std::string base_string(const PhaseBase& b) {
  std::vector<std::string> num, den;
  for (const auto& a : b.atoms) {
    if (a.exponent > 0) num.push_back(atom_string(a, a.exponent));
    if (a.exponent < 0) den.push_back(atom_string(a, -a.exponent));
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
    return s;
  };
  std::string s = b.sign < 0 ? "-" : "";
  s += num.empty() ? "1" : join(num);
  if (!den.empty()) s += "/" + (den.size() == 1 ? den[0] : "(" + join(den) + ")");
  return s;
}

std::string exponent_suffix(const mpq_class& e) {
  if (e == 1) return "";
  if (e.get_den() == 1 && e > 0) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

}  // namespace

std::string to_string(const PhaseExpression& expr) {
  std::string s = expr.sign < 0 ? "-" : "";
  if (expr.terms.empty()) return expr.sign < 0 ? "-1" : "1";
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    const auto& t = expr.terms[i];
    if (i) s += "*";
    if (t.grouped || t.base.atoms.size() != 1 || t.base.sign < 0) {
      s += "(" + base_string(t.base) + ")" + exponent_suffix(t.exponent);
    } else {
      const PhaseAtom& a = t.base.atoms[0];
      mpq_class e = t.exponent * a.exponent * (a.is_root && !a.imag_unit ? a.root.k : 1);
      s += atom_name(a) + exponent_suffix(e);
    }
  }
  return s;
}

// ---------------------------------------------------------------- evaluation

namespace {

// reduces a turn into (-1/2, 1/2]
mpq_class principal_turn(const mpq_class& t) {
  mpq_class shifted = t - mpq_class(1, 2);
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  mpq_class r = t - mpq_class(c);
  r.canonicalize();
  return r;
}

mpq_class mod_one(const mpq_class& t) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  mpq_class r = t - mpq_class(f);
  r.canonicalize();
  return r;
}

mpq_class atom_root_turn(const PhaseAtom& a) { return a.root.turn() * a.exponent; }

// turn of the sign and the roots in a base, before branch reduction
mpq_class base_root_turn(const PhaseBase& b) {
  mpq_class t = b.sign < 0 ? mpq_class(1, 2) : mpq_class(0);
  for (const auto& a : b.atoms) {
    if (a.is_root) t += atom_root_turn(a);
  }
  return t;
}

// integer m with (unreduced angle - 2 pi m) principal, for a base containing generators
long branch_shift(const PhaseBase& b, int digits) {
  BigReal two_pi = BigReal::pi(digits) * 2L;
  BigReal theta = two_pi * to_big(base_root_turn(b), digits);
  for (const auto& a : b.atoms) {
    if (!a.is_root) theta += pythagorean_arg(a.kind, digits) * a.exponent;
  }
  BigReal x = theta / two_pi;
  // m = ceil(x - 1/2)
  BigReal shifted = x - BigReal(0.5, digits);
  BigReal c(shifted);
  mpfr_ceil(c.raw(), shifted.raw());
  BigReal frac = c - shifted;
  if (frac.log10_abs() < -(digits - 10)) throw std::domain_error("grouped base lies on the branch cut");
  return mpfr_get_si(c.raw(), MPFR_RNDN);
}

}  // namespace

CanonicalPhase canonicalize(const PhaseExpression& expr) {
  CanonicalPhase c;
  c.turn = expr.sign < 0 ? mpq_class(1, 2) : mpq_class(0);
  for (const auto& term : expr.terms) {
    const PhaseBase& b = term.base;
    if (!b.has_generator()) {
      c.turn += term.exponent * principal_turn(base_root_turn(b));
      continue;
    }
    long m = branch_shift(b, 60);
    mpq_class t = base_root_turn(b) - m;
    for (const auto& a : b.atoms) {
      if (a.is_root) continue;
      if (a.kind == PythagoreanKind::Q2) {
        t += mpq_class(a.exponent, 3);
      } else {
        c.exponents[a.kind] += term.exponent * a.exponent;
      }
    }
    c.turn += term.exponent * t;
  }
  c.turn = mod_one(c.turn);
  for (auto it = c.exponents.begin(); it != c.exponents.end();) {
    it->second.canonicalize();
    if (it->second == 0) {
      it = c.exponents.erase(it);
    } else {
      ++it;
    }
  }
  return c;
}

PhaseExpression from_canonical(const CanonicalPhase& c) {
  PhaseExpression e;
  mpq_class t = mod_one(c.turn);
  if (t == mpq_class(1, 2)) {
    e.sign = -1;
  } else if (t != 0) {
    PhaseTerm term;
    PhaseAtom a;
    a.is_root = true;
    a.root = RootOfUnity(1, t.get_den().get_si());
    term.base.atoms.push_back(a);
    term.exponent = mpq_class(t.get_num());
    e.terms.push_back(term);
  }
  for (auto k : kAllPythagorean) {
    auto it = c.exponents.find(k);
    if (it == c.exponents.end() || it->second == 0) continue;
    PhaseTerm term;
    PhaseAtom a;
    a.is_root = false;
    a.kind = k;
    term.base.atoms.push_back(a);
    term.exponent = it->second;
    e.terms.push_back(term);
  }
  return e;
}

bool phase_equal(const PhaseExpression& a, const PhaseExpression& b) {
  return canonicalize(a) == canonicalize(b);
}

BigReal phase_angle(const PhaseExpression& expr, int digits) {
  CanonicalPhase c = canonicalize(expr);
  BigReal two_pi = BigReal::pi(digits) * 2L;
  BigReal theta = two_pi * to_big(c.turn, digits);
  for (const auto& [kind, e] : c.exponents) theta += pythagorean_arg(kind, digits) * to_big(e, digits);
  return theta;
}

BigComplex eval_phase(const PhaseExpression& expr, int digits) {
  if (expr.terms.empty()) return BigComplex(expr.sign, 0, digits);
  return expi(phase_angle(expr, digits));
}

long exponent_lcm(const PhaseExpression& expr) {
  long l = 1;
  for (const auto& t : expr.terms) l = std::lcm(l, t.exponent.get_den().get_si());
  return l;
}

namespace {

BigComplex int_power(const BigComplex& z, long e, int digits) {
  BigComplex base = e < 0 ? z.conj() : z;  // unit modulus
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  BigComplex acc(1, 0, digits);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace

BigComplex debranched_power(const PhaseExpression& expr, int digits) {
  long L = exponent_lcm(expr);
  BigComplex acc(L % 2 != 0 && expr.sign < 0 ? -1 : 1, 0, digits);
  for (const auto& t : expr.terms) {
    mpq_class p = t.exponent * L;
    long n = p.get_num().get_si();
    BigComplex base(t.base.sign, 0, digits);
    for (const auto& a : t.base.atoms) {
      BigComplex v = a.is_root ? root_of_unity(a.root.n, a.root.k, digits) : pythagorean_value(a.kind, digits);
      base *= int_power(v, a.exponent, digits);
    }
    acc *= int_power(base, n, digits);
  }
  return acc;
}

}  // namespace sic

// ---------------------------------------------------------------- cyclotomic

namespace sic {

namespace {

using Poly = std::vector<mpz_class>;

// exact division of integer polynomials with monic divisor
Poly poly_div(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class c = num[i + den.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div(p, cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicNumber::CyclotomicNumber(long conductor) : n_(conductor), c_(static_cast<std::size_t>(conductor)) {
  if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
}

CyclotomicNumber CyclotomicNumber::rational(const mpq_class& q) {
  CyclotomicNumber z(1);
  z.c_[0] = q;
  return z;
}

CyclotomicNumber CyclotomicNumber::root(long n, long k) {
  CyclotomicNumber z(n);
  z.c_[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
  return z;
}

CyclotomicNumber CyclotomicNumber::lift(long m) const {
  if (m % n_ != 0) throw std::invalid_argument("cannot lift to a non-multiple conductor");
  CyclotomicNumber z(m);
  long s = m / n_;
  for (long k = 0; k < n_; ++k) z.c_[static_cast<std::size_t>(k * s)] = c_[static_cast<std::size_t>(k)];
  return z;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  long m = std::lcm(n_, o.n_);
  CyclotomicNumber a = lift(m), b = o.lift(m);
  for (long k = 0; k < m; ++k) a.c_[k] += b.c_[k];
  return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const { return *this + (-o); }

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  long m = std::lcm(n_, o.n_);
  CyclotomicNumber a = lift(m), b = o.lift(m), r(m);
  for (long i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < m; ++j) {
      if (b.c_[j] != 0) r.c_[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const mpq_class& q) const {
  CyclotomicNumber r(*this);
  for (auto& c : r.c_) c *= q;
  return r;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  CyclotomicNumber r(n_);
  for (long k = 0; k < n_; ++k) r.c_[(n_ - k) % n_] = c_[k];
  return r;
}

std::vector<mpq_class> CyclotomicNumber::reduced() const {
  auto phi = cyclotomic_polynomial(n_);
  std::size_t deg = phi.size() - 1;
  std::vector<mpq_class> r(c_.begin(), c_.end());
  for (std::size_t i = r.size(); i-- > deg;) {
    mpq_class c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * mpq_class(phi[j]);
  }
  r.resize(deg);
  for (auto& x : r) x.canonicalize();
  return r;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  long m = std::lcm(n_, o.n_);
  return (lift(m) - o.lift(m)).is_zero();
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& x : reduced()) {
    if (x != 0) return false;
  }
  return true;
}

BigComplex CyclotomicNumber::eval(int digits) const {
  BigComplex acc(digits);
  for (long k = 0; k < n_; ++k) {
    if (c_[k] == 0) continue;
    BigComplex w = root_of_unity(n_, k, digits);
    BigReal q(digits);
    mpfr_set_q(q.raw(), c_[k].get_mpq_t(), MPFR_RNDN);
    acc += w * q;
  }
  return acc;
}

}  // namespace sic
