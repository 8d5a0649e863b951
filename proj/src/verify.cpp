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

#include "sic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sic {

bool OverlapReport::passed() const {
  return max_violation < BigReal::pow10(-(precision / 2), precision);
}

std::string OverlapReport::to_string() const {
  std::ostringstream os;
  os << "dimension: " << dim << "\n"
     << "precision: " << precision << "\n"
     << "checked: " << checked_count << "\n"
     << "max violation: " << max_violation.sci(3) << "\n"
     << "worst index: (" << worst_index.i.value() << ", " << worst_index.j.value() << ")\n"
     << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

// Scratch space for one worker. For fixed i the products
// a_s = conj(v_{s+i}) v_s are shared by every j, and
// <v|D_{i,j} v> = tau^{(d+1) i j} sum_s a_s w^{j s}.
class OverlapKernel {
 public:
  OverlapKernel(const BigComplexVector& v, const RootTable& roots2d)
      : v_(v), roots_(roots2d), d_(static_cast<std::int64_t>(v.dim())), digits_(v.digits()), a_(v.dim(), digits_),
        t_(digits_), sre_(digits_), sim_(digits_) {}

  void load_shift(std::int64_t i) {
    for (std::int64_t s = 0; s < d_; ++s) {
      const BigComplex& x = v_[(s + i) % d_];
      const BigComplex& y = v_[s];
      BigComplex& a = a_[s];
      // conj(x) y
      mpfr_mul(a.re.raw(), x.re.raw(), y.re.raw(), MPFR_RNDN);
      mpfr_mul(t_.raw(), x.im.raw(), y.im.raw(), MPFR_RNDN);
      mpfr_add(a.re.raw(), a.re.raw(), t_.raw(), MPFR_RNDN);
      mpfr_mul(a.im.raw(), x.re.raw(), y.im.raw(), MPFR_RNDN);
      mpfr_mul(t_.raw(), x.im.raw(), y.re.raw(), MPFR_RNDN);
      mpfr_sub(a.im.raw(), a.im.raw(), t_.raw(), MPFR_RNDN);
    }
  }

  // sum_s a_s w^{j s}, left in (sre_, sim_)
  void sum(std::int64_t j) {
    mpfr_set_zero(sre_.raw(), 1);
    mpfr_set_zero(sim_.raw(), 1);
    std::int64_t e = 0;
    const std::int64_t step = (2 * j) % (2 * d_);
    for (std::int64_t s = 0; s < d_; ++s, e = (e + step) % (2 * d_)) {
      const BigComplex& a = a_[s];
      if (e == 0) {
        mpfr_add(sre_.raw(), sre_.raw(), a.re.raw(), MPFR_RNDN);
        mpfr_add(sim_.raw(), sim_.raw(), a.im.raw(), MPFR_RNDN);
        continue;
      }
      const BigComplex& w = roots_[e];
      mpfr_mul(t_.raw(), a.re.raw(), w.re.raw(), MPFR_RNDN);
      mpfr_add(sre_.raw(), sre_.raw(), t_.raw(), MPFR_RNDN);
      mpfr_mul(t_.raw(), a.im.raw(), w.im.raw(), MPFR_RNDN);
      mpfr_sub(sre_.raw(), sre_.raw(), t_.raw(), MPFR_RNDN);
      mpfr_mul(t_.raw(), a.re.raw(), w.im.raw(), MPFR_RNDN);
      mpfr_add(sim_.raw(), sim_.raw(), t_.raw(), MPFR_RNDN);
      mpfr_mul(t_.raw(), a.im.raw(), w.re.raw(), MPFR_RNDN);
      mpfr_add(sim_.raw(), sim_.raw(), t_.raw(), MPFR_RNDN);
    }
  }

  BigComplex value(std::int64_t i, std::int64_t j) {
    sum(j);
    return roots_[((d_ + 1) * i % (2 * d_)) * j % (2 * d_)] * BigComplex(sre_, sim_);
  }

  // |(d+1)|o|^2 - 1|
  BigReal violation(std::int64_t j) {
    sum(j);
    BigReal m = sre_ * sre_ + sim_ * sim_;
    return abs(m * static_cast<long>(d_ + 1) - BigReal(1L, digits_));
  }

 private:
  const BigComplexVector& v_;
  const RootTable& roots_;
  std::int64_t d_;
  int digits_;
  BigComplexVector a_;
  BigReal t_, sre_, sim_;
};

struct Worst {
  BigReal value;
  std::int64_t i = 0, j = 0;
  std::int64_t count = 0;
};

}  // namespace

BigComplex overlap(const BigComplexVector& v, const DisplacementIndex& p, const RootTable& roots2d) {
  if (static_cast<std::int64_t>(v.dim()) != p.dim() || roots2d.order() != 2 * p.dim()) {
    throw std::invalid_argument("dimension mismatch in overlap");
  }
  OverlapKernel k(v, roots2d);
  k.load_shift(p.i.value());
  return k.value(p.i.value(), p.j.value());
}

std::vector<DisplacementIndex> orbit_representatives(std::int64_t d,
                                                     const std::vector<SymplecticMatrix>& generators) {
  std::vector<SymplecticMatrix> gens = generators;
  gens.push_back(SymplecticMatrix::parity(d));
  for (const auto& g : gens) {
    if (g.modulus() != d) throw std::invalid_argument("generator has the wrong modulus");
  }
  std::vector<char> seen(static_cast<std::size_t>(d * d), 0);
  seen[0] = 1;
  std::vector<DisplacementIndex> reps;
  std::vector<std::int64_t> stack;
  for (std::int64_t start = 1; start < d * d; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    reps.emplace_back(start / d, start % d, d);
    stack.push_back(start);
    while (!stack.empty()) {
      std::int64_t x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        auto q = g.apply(x / d, x % d);
        std::int64_t y = q[0] * d + q[1];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return reps;
}

OverlapReport sic_check(const BigComplexVector& v_in, int precision, bool reduce_by_symmetry,
                        const std::vector<SymplecticMatrix>& generators, unsigned workers) {
  const std::int64_t d = static_cast<std::int64_t>(v_in.dim());
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (precision < 12) throw std::invalid_argument("precision must be at least 12 digits");
  BigComplexVector v = v_in.with_digits(precision);
  BigReal dev = abs(v.norm() - BigReal(1L, precision));
  if (dev >= BigReal::pow10(-(precision - 10), precision)) {
    throw std::invalid_argument("non-unit input: | ||v|| - 1 | = " + dev.sci(3));
  }
  RootTable roots(2 * d, precision);

  // work list: per shift i, the j values to evaluate
  std::vector<std::vector<std::int64_t>> todo(static_cast<std::size_t>(d));
  if (reduce_by_symmetry) {
    for (const auto& p : orbit_representatives(d, generators)) todo[p.i.value()].push_back(p.j.value());
  } else {
    for (std::int64_t i = 0; i < d; ++i) {
      for (std::int64_t j = (i == 0 ? 1 : 0); j < d; ++j) todo[i].push_back(j);
    }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, d));
  std::vector<Worst> partial(workers, Worst{BigReal(-1L, precision)});
  auto run = [&](unsigned w) {
    OverlapKernel kernel(v, roots);
    Worst& best = partial[w];
    for (std::int64_t i = w; i < d; i += workers) {
      if (todo[i].empty()) continue;
      kernel.load_shift(i);
      for (std::int64_t j : todo[i]) {
        BigReal x = kernel.violation(j);
        ++best.count;
        if (x > best.value) {
          best.value = std::move(x);
          best.i = i;
          best.j = j;
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  OverlapReport report;
  report.dim = d;
  report.precision = precision;
  report.max_violation = BigReal(precision);
  report.worst_index = DisplacementIndex(0, 0, d);
  bool any = false;
  for (const auto& p : partial) {
    report.checked_count += p.count;
    if (p.count > 0 && (!any || p.value > report.max_violation)) {
      report.max_violation = p.value;
      report.worst_index = DisplacementIndex(p.i, p.j, d);
      any = true;
    }
  }
  return report;
}

std::vector<SymmetryCertificate> symmetry_certificate(const BigComplexVector& v_in,
                                                      const std::vector<SymplecticMatrix>& generators,
                                                      int precision) {
  BigComplexVector v = v_in.with_digits(precision);
  std::vector<SymmetryCertificate> out;
  for (const auto& g : generators) {
    if (g.modulus() != static_cast<std::int64_t>(v.dim())) throw std::invalid_argument("generator has the wrong modulus");
    BigComplexVector w = metaplectic(g, precision).matrix * v;
    // Rayleigh quotient, snapped to the nearest root of unity of order ord(g)
    BigComplex q = inner(v, w);
    const long n = static_cast<long>(g.order());
    long k = 0;
    if (!q.abs().is_zero()) {
      BigReal turns = q.arg() * static_cast<long>(n) / (BigReal::pi(precision) * 2L);
      k = std::lround(round(turns).to_double());
    }
    BigComplex lambda = root_of_unity(n, ((k % n) + n) % n, precision);
    BigReal res = (w - v * lambda).norm();
    out.push_back({g, lambda, res});
  }
  return out;
}

}  // namespace sic
