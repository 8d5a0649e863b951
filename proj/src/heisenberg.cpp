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

#include "sic/heisenberg.hpp"

#include <stdexcept>

namespace sic {

DisplacementIndex operator*(const SymplecticMatrix& f, const DisplacementIndex& p) {
  if (f.modulus() != p.dim()) throw std::invalid_argument("modulus mismatch");
  auto q = f.apply(p.i.value(), p.j.value());
  return DisplacementIndex(q[0], q[1], p.dim());
}

RootTable::RootTable(long n, int digits) : n_(n) {
  roots_.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) roots_.push_back(root_of_unity(n, k, digits));
}

std::pair<BigComplexMatrix, BigComplexMatrix> clock_shift(std::int64_t d, int digits) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  BigComplexMatrix z(d, d, digits), x(d, d, digits);
  for (std::int64_t r = 0; r < d; ++r) {
    z(r, r) = root_of_unity(d, r, digits);
    x((r + 1) % d, r) = BigComplex(1, 0, digits);
  }
  return {z, x};
}

BigComplexMatrix displacement(const DisplacementIndex& p, int digits) {
  const std::int64_t d = p.dim();
  const std::int64_t i = p.i.value(), j = p.j.value();
  RootTable roots(2 * d, digits);
  BigComplexMatrix m(d, d, digits);
  for (std::int64_t r = 0; r < d; ++r) {
    std::int64_t s = ((r - i) % d + d) % d;
    // tau = e^{2 pi i (d+1)/(2d)}, omega = tau^2 up to the even-d sign, so
    // everything is a power of the 2d-th root
    m(r, s) = roots[(d + 1) * i * j + 2 * j * s];
  }
  return m;
}

BigComplexVector apply_displacement(const DisplacementIndex& p, const BigComplexVector& v,
                                    const RootTable& roots2d) {
  const std::int64_t d = p.dim();
  if (static_cast<std::int64_t>(v.dim()) != d || roots2d.order() != 2 * d) {
    throw std::invalid_argument("dimension mismatch in displacement");
  }
  const std::int64_t i = p.i.value(), j = p.j.value();
  BigComplexVector out(d, v.digits());
  for (std::int64_t r = 0; r < d; ++r) {
    std::int64_t s = ((r - i) % d + d) % d;
    out[r] = roots2d[((d + 1) * i * j + 2 * j * s) % (2 * d)] * v[s];
  }
  return out;
}

namespace {

MetaplecticUnitary metaplectic_prime(const SymplecticMatrix& f, int digits) {
  const std::int64_t d = f.modulus();
  if (!is_prime(d)) throw std::domain_error("modulus must be an odd prime");
  RootTable roots(d, digits);
  BigComplexMatrix m(d, d, digits);
  const ModInt two_inv = ModInt(2, d).inverse();
  const ModInt& a = f.alpha();
  const ModInt& b = f.beta();
  const ModInt& c = f.gamma();
  const ModInt& dl = f.delta();
  if (b.value() == 0) {
    // monomial branch: U|s> = (alpha|d) w^{alpha gamma s^2 / 2} |alpha s>
    int sign = legendre(a);
    for (std::int64_t s = 0; s < d; ++s) {
      ModInt ms(s, d);
      ModInt e = two_inv * a * c * ms * ms;
      BigComplex z = roots[e.value()];
      if (sign < 0) z = -z;
      m((a * ms).value(), s) = z;
    }
    return {f, m, BigComplex(sign, 0, digits)};
  }
  // e^{i theta} from the Legendre symbol of -beta
  int l = legendre(-b);
  std::int64_t k = d / 4;
  BigComplex phase(digits);
  if (d % 4 == 1) {
    phase = BigComplex((k % 2 == 0 ? 1 : -1) * l, 0, digits);
  } else {
    phase = BigComplex(0, ((k + 1) % 2 == 0 ? 1 : -1) * l, digits);
  }
  BigReal scale = BigReal(1L, digits) / sqrt(BigReal(static_cast<long>(d), digits));
  BigComplex pref = phase * scale;
  const ModInt c0 = two_inv * b.inverse();
  for (std::int64_t r = 0; r < d; ++r) {
    for (std::int64_t s = 0; s < d; ++s) {
      ModInt mr(r, d), ms(s, d);
      ModInt e = c0 * (dl * mr * mr - ModInt(2, d) * mr * ms + a * ms * ms);
      m(r, s) = roots[e.value()] * pref;
    }
  }
  return {f, m, phase};
}

std::vector<std::int64_t> strides(const std::vector<std::int64_t>& factors) {
  std::vector<std::int64_t> st(factors.size(), 1);
  for (std::size_t k = factors.size(); k-- > 1;) st[k - 1] = st[k] * factors[k];
  return st;
}

BigComplexMatrix kron_to_standard(const BigComplexMatrix& mk, const std::vector<std::int64_t>& factors) {
  const std::size_t d = mk.rows();
  std::vector<std::size_t> idx(d);
  for (std::size_t r = 0; r < d; ++r) idx[r] = tensor_index(static_cast<std::int64_t>(r), factors);
  BigComplexMatrix m(d, d, mk.digits());
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) m(r, s) = mk(idx[r], idx[s]);
  }
  return m;
}

}  // namespace

std::size_t tensor_index(std::int64_t r, const std::vector<std::int64_t>& factors) {
  auto st = strides(factors);
  std::int64_t k = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) k += (r % factors[f]) * st[f];
  return static_cast<std::size_t>(k);
}

BigComplexVector tensor_to_standard(const BigComplexVector& v, const std::vector<std::int64_t>& factors) {
  BigComplexVector out(v.dim(), v.digits());
  for (std::size_t r = 0; r < v.dim(); ++r) out[r] = v[tensor_index(static_cast<std::int64_t>(r), factors)];
  return out;
}

BigComplexVector standard_to_tensor(const BigComplexVector& v, const std::vector<std::int64_t>& factors) {
  BigComplexVector out(v.dim(), v.digits());
  for (std::size_t r = 0; r < v.dim(); ++r) out[tensor_index(static_cast<std::int64_t>(r), factors)] = v[r];
  return out;
}

MetaplecticUnitary metaplectic(const SymplecticMatrix& f, int digits) {
  const std::int64_t d = f.modulus();
  if (is_prime(d)) return metaplectic_prime(f, digits);
  auto factors = tensor_factors(d);
  auto parts = crt_factorize(f, factors);
  BigComplexMatrix mk = BigComplexMatrix::identity(1, digits);
  BigComplex phase(1, 0, digits);
  for (const auto& part : parts) {
    MetaplecticUnitary u = metaplectic_prime(part, digits);
    mk = kron(mk, u.matrix);
    phase *= u.phase_theta;
  }
  return {f, kron_to_standard(mk, factors), phase};
}

BigReal covariance_check(const SymplecticMatrix& f, const DisplacementIndex& p, int digits) {
  const std::int64_t d = f.modulus();
  if (d != p.dim()) throw std::invalid_argument("modulus mismatch");
  BigComplexMatrix target = displacement(f * p, digits);
  if (is_prime(d)) {
    MetaplecticUnitary u = metaplectic(f, digits);
    BigComplexMatrix lhs = u.matrix * displacement(p, digits) * u.matrix.adjoint();
    return lhs.max_abs_diff(target);
  }
  // conjugate factor by factor; D_{i,j} = (x)_k D_{i, u_k j} on the tensor basis
  auto factors = tensor_factors(d);
  auto parts = crt_factorize(f, factors);
  BigComplexMatrix mk = BigComplexMatrix::identity(1, digits);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::int64_t dk = factors[k];
    std::int64_t u = crt_scale(d, dk);
    DisplacementIndex pk(p.i.value() % dk, (u * (p.j.value() % dk)) % dk, dk);
    MetaplecticUnitary uk = metaplectic_prime(parts[k], digits);
    mk = kron(mk, uk.matrix * displacement(pk, digits) * uk.matrix.adjoint());
  }
  return kron_to_standard(mk, factors).max_abs_diff(target);
}

MetaplecticUnitary zauner_unitary(std::int64_t d, const SymplecticMatrix& rep, int digits) {
  if (rep.modulus() != d) throw std::invalid_argument("representative has the wrong modulus");
  if (rep.is_identity() || !rep.pow(3).is_identity()) {
    throw std::invalid_argument("rep not order 3: " + rep.to_string());
  }
  return metaplectic(rep, digits);
}

int unitary_order(const BigComplexMatrix& u) {
  const int digits = u.digits();
  const BigReal tol = BigReal::pow10(-(digits - 10), digits);
  BigComplexMatrix id = BigComplexMatrix::identity(u.rows(), digits);
  BigComplexMatrix acc = u;
  for (int n = 1; n <= 24; ++n) {
    if (acc.max_abs_diff(id) < tol) return n;
    acc = acc * u;
  }
  throw std::domain_error("matrix is not of finite order <= 24");
}

namespace {

void check_root(const BigComplex& lambda, int n, int digits) {
  BigComplex acc(1, 0, digits);
  for (int k = 0; k < n; ++k) acc *= lambda;
  BigReal err = (acc - BigComplex(1, 0, digits)).abs();
  if (err > BigReal::pow10(-(digits - 10), digits)) {
    throw std::domain_error("eigenvalue is not a root of unity of order " + std::to_string(n));
  }
}

}  // namespace

BigComplexMatrix subspace_projector(const BigComplexMatrix& u, const BigComplex& eigenvalue, int digits) {
  int n = unitary_order(u);
  check_root(eigenvalue, n, digits);
  BigComplex lbar = eigenvalue.conj();
  BigComplex coef(1, 0, digits);
  BigComplexMatrix power = BigComplexMatrix::identity(u.rows(), digits);
  BigComplexMatrix acc(u.rows(), u.cols(), digits);
  for (int k = 0; k < n; ++k) {
    acc += power * coef;
    power = power * u;
    coef *= lbar;
  }
  return acc * BigComplex(BigReal(1L, digits) / static_cast<long>(n), BigReal(digits));
}

BigComplexMatrix subspace_projector(const SymplecticMatrix& f, const BigComplex& eigenvalue, int digits) {
  std::int64_t n = f.order();
  check_root(eigenvalue, static_cast<int>(n), digits);
  BigComplex lbar = eigenvalue.conj();
  BigComplex coef(1, 0, digits);
  const std::int64_t d = f.modulus();
  BigComplexMatrix acc(d, d, digits);
  for (std::int64_t k = 0; k < n; ++k) {
    acc += metaplectic(f.pow(k), digits).matrix * coef;
    coef *= lbar;
  }
  return acc * BigComplex(BigReal(1L, digits) / static_cast<long>(n), BigReal(digits));
}

BigComplexVector conjugate(const BigComplexVector& v) {
  std::vector<BigComplex> out;
  out.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].conj());
  return BigComplexVector(std::move(out));
}

}  // namespace sic
