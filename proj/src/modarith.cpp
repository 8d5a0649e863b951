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

#include "sic/modarith.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sic {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// Extended Euclid; returns x with a*x = g (mod m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("value not invertible modulo " + std::to_string(m));
  return reduce(old_s, m);
}

// x = a mod m1, x = b mod m2, gcd(m1, m2) = 1.
std::int64_t crt2(std::int64_t a, std::int64_t m1, std::int64_t b, std::int64_t m2) {
  std::int64_t t = mulmod(reduce(b - a, m2), inverse_mod(m1, m2), m2);
  return reduce(a + m1 * t, m1 * m2);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_odd_square_free(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> tensor_factors(std::int64_t n) {
  if (is_prime(n)) return {n};
  // n = m(m-2) with m odd: m = 1 + sqrt(n+1)
  std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n + 1))));
  if (s * s == n + 1 && s % 2 == 0) {
    std::int64_t m = s + 1;
    if (std::gcd(m, m - 2) == 1 && m - 2 > 1) {
      auto left = tensor_factors(m - 2);
      auto right = tensor_factors(m);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  return prime_factors(n);
}

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  value_ = reduce(value, modulus);
}

std::int64_t ModInt::signed_value() const {
  return value_ > modulus_ / 2 ? value_ - modulus_ : value_;
}

bool ModInt::invertible() const { return std::gcd(value_, modulus_) == 1; }

ModInt ModInt::inverse() const { return ModInt(inverse_mod(value_, modulus_), modulus_); }

ModInt ModInt::pow(std::int64_t exponent) const {
  ModInt base = exponent < 0 ? inverse() : *this;
  std::int64_t e = exponent < 0 ? -exponent : exponent;
  ModInt acc(1, modulus_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void ModInt::check_same(const ModInt& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("modulus mismatch");
}

ModInt ModInt::operator+(const ModInt& o) const {
  check_same(o);
  return ModInt(value_ + o.value_, modulus_);
}

ModInt ModInt::operator-(const ModInt& o) const {
  check_same(o);
  return ModInt(value_ - o.value_, modulus_);
}

ModInt ModInt::operator*(const ModInt& o) const {
  check_same(o);
  return ModInt(mulmod(value_, o.value_, modulus_), modulus_);
}

ModInt ModInt::operator-() const { return ModInt(-value_, modulus_); }

int legendre(const ModInt& a) {
  std::int64_t p = a.modulus();
  if (p == 2 || !is_prime(p)) throw std::domain_error("modulus must be an odd prime");
  if (a.value() == 0) return 0;
  ModInt e = a.pow((p - 1) / 2);
  return e.value() == 1 ? 1 : -1;
}

SymplecticMatrix::SymplecticMatrix(std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                   std::int64_t delta, std::int64_t modulus)
    : alpha_(alpha, modulus), beta_(beta, modulus), gamma_(gamma, modulus), delta_(delta, modulus) {
  if (!is_odd_square_free(modulus)) {
    throw std::invalid_argument("modulus must be odd and square-free, got " + std::to_string(modulus));
  }
  if ((alpha_ * delta_ - beta_ * gamma_).value() != 1) {
    throw std::invalid_argument("determinant is not 1 mod " + std::to_string(modulus));
  }
}

SymplecticMatrix SymplecticMatrix::identity(std::int64_t modulus) {
  return SymplecticMatrix(1, 0, 0, 1, modulus);
}

SymplecticMatrix SymplecticMatrix::parity(std::int64_t modulus) {
  return SymplecticMatrix(-1, 0, 0, -1, modulus);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  return SymplecticMatrix(delta_.value(), -beta_.value(), -gamma_.value(), alpha_.value(), modulus());
}

SymplecticMatrix SymplecticMatrix::pow(std::int64_t exponent) const {
  SymplecticMatrix base = exponent < 0 ? inverse() : *this;
  std::int64_t e = exponent < 0 ? -exponent : exponent;
  SymplecticMatrix acc = identity(modulus());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool SymplecticMatrix::is_identity() const {
  return alpha_.value() == 1 && beta_.value() == 0 && gamma_.value() == 0 && delta_.value() == 1;
}

std::int64_t SymplecticMatrix::order() const {
  SymplecticMatrix acc = *this;
  std::int64_t n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
  }
  return n;
}

std::array<std::int64_t, 2> SymplecticMatrix::apply(std::int64_t i, std::int64_t j) const {
  std::int64_t d = modulus();
  ModInt mi(i, d), mj(j, d);
  return {(alpha_ * mi + beta_ * mj).value(), (gamma_ * mi + delta_ * mj).value()};
}

std::string SymplecticMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << alpha_.signed_value() << "," << beta_.signed_value() << "],["
     << gamma_.signed_value() << "," << delta_.signed_value() << "]] mod " << modulus();
  return os.str();
}

SymplecticMatrix sympl_mul(const SymplecticMatrix& f1, const SymplecticMatrix& f2) {
  if (f1.modulus() != f2.modulus()) throw std::invalid_argument("modulus mismatch");
  ModInt a = f1.alpha() * f2.alpha() + f1.beta() * f2.gamma();
  ModInt b = f1.alpha() * f2.beta() + f1.beta() * f2.delta();
  ModInt c = f1.gamma() * f2.alpha() + f1.delta() * f2.gamma();
  ModInt d = f1.gamma() * f2.beta() + f1.delta() * f2.delta();
  return SymplecticMatrix(a.value(), b.value(), c.value(), d.value(), f1.modulus());
}

SymplecticMatrix operator*(const SymplecticMatrix& f1, const SymplecticMatrix& f2) {
  return sympl_mul(f1, f2);
}

std::int64_t crt_scale(std::int64_t modulus, std::int64_t factor) {
  if (modulus % factor != 0 || std::gcd(modulus / factor, factor) != 1) {
    throw std::invalid_argument("factor is not a coprime divisor of the modulus");
  }
  return inverse_mod((modulus / factor) % factor, factor);
}

std::vector<SymplecticMatrix> crt_factorize(const SymplecticMatrix& f,
                                            std::span<const std::int64_t> moduli) {
  std::int64_t prod = 1;
  for (std::int64_t m : moduli) {
    if (std::gcd(prod, m) != 1) throw std::invalid_argument("factors are not coprime");
    prod *= m;
  }
  if (prod != f.modulus()) throw std::invalid_argument("factors do not multiply to the modulus");
  std::vector<SymplecticMatrix> out;
  for (std::int64_t m : moduli) {
    std::int64_t u = crt_scale(prod, m);
    std::int64_t uinv = inverse_mod(u, m);
    out.emplace_back(f.alpha().value(), mulmod(uinv, f.beta().value() % m, m),
                     mulmod(u, f.gamma().value() % m, m), f.delta().value(), m);
  }
  return out;
}

SymplecticMatrix crt_combine(std::span<const SymplecticMatrix> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to combine");
  std::int64_t prod = 1;
  for (const auto& p : parts) {
    if (std::gcd(prod, p.modulus()) != 1) throw std::invalid_argument("factors are not coprime");
    prod *= p.modulus();
  }
  std::int64_t a = 0, b = 0, c = 0, d = 0, m = 1;
  for (const auto& p : parts) {
    std::int64_t mk = p.modulus();
    std::int64_t u = crt_scale(prod, mk);
    std::int64_t uinv = inverse_mod(u, mk);
    a = crt2(a, m, p.alpha().value(), mk);
    b = crt2(b, m, mulmod(u, p.beta().value(), mk), mk);
    c = crt2(c, m, mulmod(uinv, p.gamma().value(), mk), mk);
    d = crt2(d, m, p.delta().value(), mk);
    m *= mk;
  }
  return SymplecticMatrix(a, b, c, d, prod);
}

CrtSplit crt_split(const SymplecticMatrix& f, std::int64_t d) {
  if (d % 2 == 0) throw std::invalid_argument("d must be odd");
  if (d < 5 || std::gcd(d, d - 2) != 1) throw std::invalid_argument("factors d-2 and d are not coprime");
  if (f.modulus() != d * (d - 2)) throw std::invalid_argument("matrix modulus is not d(d-2)");
  std::int64_t moduli[2] = {d - 2, d};
  auto parts = crt_factorize(f, moduli);
  return CrtSplit{parts[0], parts[1], ModInt((d - 1) / 2, d * (d - 2))};
}

SymplecticMatrix crt_join(const CrtSplit& split) {
  SymplecticMatrix parts[2] = {split.left, split.right};
  return crt_combine(parts);
}

namespace {

SymplecticMatrix conjugator_prime(const SymplecticMatrix& s, const SymplecticMatrix& t) {
  std::int64_t d = s.modulus();
  if (s == t) return SymplecticMatrix::identity(d);
  // enumerate SL(2, Z/dZ): pick (a, c) nonzero column, then all completions
  for (std::int64_t a = 0; a < d; ++a) {
    for (std::int64_t c = 0; c < d; ++c) {
      if (std::gcd(std::gcd(a, c), d) != 1) continue;
      // a*dd - b*c = 1
      for (std::int64_t b = 0; b < d; ++b) {
        for (std::int64_t dd = 0; dd < d; ++dd) {
          if (reduce(a * dd - b * c, d) != 1) continue;
          SymplecticMatrix g(a, b, c, dd, d);
          if (g * s == t * g) return g;
        }
      }
    }
  }
  throw std::domain_error("not conjugate");
}

void check_zauner_like(const SymplecticMatrix& f) {
  if (f.pow(3).is_identity() && !f.is_identity()) return;
  throw std::invalid_argument("matrix is not of order 3: " + f.to_string());
}

}  // namespace

SymplecticMatrix find_conjugator(const SymplecticMatrix& source, const SymplecticMatrix& target) {
  if (source.modulus() != target.modulus()) throw std::invalid_argument("modulus mismatch");
  check_zauner_like(source);
  check_zauner_like(target);
  std::int64_t d = source.modulus();
  if (is_prime(d)) return conjugator_prime(source, target);
  auto moduli = prime_factors(d);
  auto ps = crt_factorize(source, moduli);
  auto pt = crt_factorize(target, moduli);
  std::vector<SymplecticMatrix> gs;
  for (std::size_t k = 0; k < moduli.size(); ++k) gs.push_back(conjugator_prime(ps[k], pt[k]));
  return crt_combine(gs);
}

}  // namespace sic
