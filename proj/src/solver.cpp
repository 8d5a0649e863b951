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

#include "sic/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "sic/fiducials.hpp"
#include "sic/heisenberg.hpp"

namespace sic {

using cd = std::complex<double>;

std::vector<SectorGenerator> parse_sector(const std::string& text, std::int64_t d) {
  std::vector<SectorGenerator> out;
  if (text == "full" || text.empty()) return out;
  static const std::regex item(R"(\s*(zauner|(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+))\s*:\s*(-?\d+)\s*/\s*(\d+)\s*)");
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw std::invalid_argument("bad sector item '" + part + "'");
    SymplecticMatrix f = m[1] == "zauner"
                             ? zauner_rep(d)
                             : SymplecticMatrix(std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4]), std::stoll(m[5]), d);
    long n = std::stol(m[7]);
    if (n <= 0) throw std::invalid_argument("bad eigenvalue order in '" + part + "'");
    RootOfUnity lambda(std::stol(m[6]), n);
    if (f.order() % lambda.n != 0) {
      throw std::invalid_argument("eigenvalue order does not divide the order of " + f.to_string());
    }
    out.push_back({f, lambda});
  }
  return out;
}

namespace {

std::vector<BigComplexVector> gram_schmidt(const std::vector<BigComplexVector>& cols, int digits) {
  std::vector<BigComplexVector> out;
  const BigReal tol = BigReal::pow10(-(digits / 2), digits);
  for (const auto& c : cols) {
    BigComplexVector w = c.with_digits(digits);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w -= q * inner(q, w);
    }
    BigReal n = w.norm();
    if (n > tol) out.push_back(w * (BigReal(1L, digits) / n));
  }
  return out;
}

}  // namespace

std::vector<BigComplexVector> sector_basis(const SolverConfig& config, int digits) {
  const std::int64_t d = config.dim;
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  std::vector<BigComplexVector> basis;
  if (!config.explicit_basis.empty()) {
    for (const auto& b : config.explicit_basis) {
      if (static_cast<std::int64_t>(b.dim()) != d) throw std::invalid_argument("basis vector has the wrong dimension");
    }
    basis = gram_schmidt(config.explicit_basis, digits);
  } else if (config.sector.empty()) {
    for (std::int64_t k = 0; k < d; ++k) basis.push_back(BigComplexVector::basis(d, k, digits));
  } else {
    BigComplexMatrix proj = BigComplexMatrix::identity(d, digits);
    for (const auto& g : config.sector) {
      if (g.matrix.modulus() != d) throw std::invalid_argument("sector generator has the wrong modulus");
      proj = subspace_projector(g.matrix, root_of_unity(g.eigenvalue.n, g.eigenvalue.k, digits), digits) * proj;
    }
    std::vector<BigComplexVector> cols;
    for (std::int64_t k = 0; k < d; ++k) cols.push_back(proj.column(k));
    basis = gram_schmidt(cols, digits);
  }
  if (basis.empty()) throw std::invalid_argument("empty sector");
  return basis;
}

namespace {

// u^dagger D_{i,j} w for all (i, j), index i d + j.
void bilinear(const std::vector<cd>& u, const std::vector<cd>& w, const std::vector<cd>& roots, std::vector<cd>& out) {
  const std::int64_t d = static_cast<std::int64_t>(u.size());
  out.assign(d * d, cd(0, 0));
  std::vector<cd> a(d);
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t s = 0; s < d; ++s) a[s] = std::conj(u[(s + i) % d]) * w[s];
    for (std::int64_t j = 0; j < d; ++j) {
      cd acc(0, 0);
      std::int64_t e = 0, step = (2 * j) % (2 * d);
      for (std::int64_t s = 0; s < d; ++s, e = (e + step) % (2 * d)) acc += a[s] * roots[e];
      out[i * d + j] = roots[((d + 1) * i % (2 * d)) * j % (2 * d)] * acc;
    }
  }
}

std::vector<cd> double_roots(std::int64_t n) {
  std::vector<cd> r(n);
  for (std::int64_t k = 0; k < n; ++k) r[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
  return r;
}

// Coarse stage on theta = (Re c_0, Im c_0, Re c_1, ...), v = B c.
class CoarseProblem {
 public:
  CoarseProblem(const std::vector<BigComplexVector>& basis, std::int64_t d)
      : d_(d), m_(basis.size()), roots_(double_roots(2 * d)) {
    for (const auto& b : basis) {
      std::vector<cd> col(d);
      for (std::int64_t r = 0; r < d; ++r) col[r] = cd(b[r].re.to_double(), b[r].im.to_double());
      b_.push_back(std::move(col));
    }
  }

  std::size_t params() const { return 2 * m_; }

  std::vector<cd> vec(const Eigen::VectorXd& theta) const {
    std::vector<cd> v(d_, cd(0, 0));
    for (std::size_t k = 0; k < m_; ++k) {
      cd c(theta[2 * k], theta[2 * k + 1]);
      for (std::int64_t r = 0; r < d_; ++r) v[r] += c * b_[k][r];
    }
    return v;
  }

  double cost(const Eigen::VectorXd& theta) const { return frame_residual(vec(theta)); }

  void linearize(const Eigen::VectorXd& theta, Eigen::VectorXd& r, Eigen::MatrixXd& jac) const {
    const std::int64_t n = d_ * d_ - 1;
    const double target = 1.0 / static_cast<double>(d_ + 1);
    std::vector<cd> v = vec(theta), o, a, c;
    bilinear(v, v, roots_, o);
    r.resize(n);
    jac.resize(n, 2 * m_);
    for (std::int64_t p = 1; p <= n; ++p) r[p - 1] = std::norm(o[p]) - target;
    for (std::size_t k = 0; k < m_; ++k) {
      bilinear(b_[k], v, roots_, a);
      bilinear(v, b_[k], roots_, c);
      for (std::int64_t p = 1; p <= n; ++p) {
        const double on = std::norm(o[p]);
        cd dx = a[p] + c[p];
        cd dy = cd(0, -1) * a[p] + cd(0, 1) * c[p];
        jac(p - 1, 2 * k) = 2 * std::real(std::conj(o[p]) * dx) - 4 * on * theta[2 * k];
        jac(p - 1, 2 * k + 1) = 2 * std::real(std::conj(o[p]) * dy) - 4 * on * theta[2 * k + 1];
      }
    }
  }

 private:
  std::int64_t d_;
  std::size_t m_;
  std::vector<cd> roots_;
  std::vector<std::vector<cd>> b_;
};

double coarse_descent(const CoarseProblem& prob, Eigen::VectorXd& theta, int max_iters) {
  theta.normalize();
  double cost = prob.cost(theta);
  double mu = -1;
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  for (int it = 0; it < max_iters && cost > 1e-28; ++it) {
    prob.linearize(theta, r, jac);
    Eigen::MatrixXd h = jac.transpose() * jac;
    Eigen::VectorXd g = jac.transpose() * r;
    if (mu < 0) mu = 1e-3 * h.diagonal().maxCoeff();
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      Eigen::MatrixXd a = h;
      a.diagonal().array() += mu;
      Eigen::VectorXd step = a.ldlt().solve(-g);
      Eigen::VectorXd trial = (theta + step).normalized();
      double c = prob.cost(trial);
      if (c < cost) {
        theta = trial;
        cost = c;
        mu = std::max(mu / 3, 1e-15);
        accepted = true;
      } else {
        mu *= 4;
      }
    }
    if (!accepted) break;
  }
  return cost;
}

// High-precision counterpart: complex multiply-accumulate on raw MPFR values.
class FineProblem {
 public:
  FineProblem(std::vector<BigComplexVector> basis, std::int64_t d, int digits)
      : d_(d), m_(basis.size()), digits_(digits), roots_(2 * d, digits), b_(std::move(basis)), t_(digits) {}

  std::size_t params() const { return 2 * m_; }
  int digits() const { return digits_; }

  BigComplexVector vec(const std::vector<BigReal>& theta) const {
    BigComplexVector v(d_, digits_);
    for (std::size_t k = 0; k < m_; ++k) v += b_[k] * BigComplex(theta[2 * k], theta[2 * k + 1]);
    return v;
  }

  // u^dagger D_{i,j} w, index i d + j
  std::vector<BigComplex> bilinear(const BigComplexVector& u, const BigComplexVector& w) {
    std::vector<BigComplex> out(d_ * d_, BigComplex(digits_));
    std::vector<BigComplex> a(d_, BigComplex(digits_));
    BigComplex acc(digits_);
    for (std::int64_t i = 0; i < d_; ++i) {
      for (std::int64_t s = 0; s < d_; ++s) {
        const BigComplex& x = u[(s + i) % d_];
        const BigComplex& y = w[s];
        mpfr_mul(a[s].re.raw(), x.re.raw(), y.re.raw(), MPFR_RNDN);
        mpfr_mul(t_.raw(), x.im.raw(), y.im.raw(), MPFR_RNDN);
        mpfr_add(a[s].re.raw(), a[s].re.raw(), t_.raw(), MPFR_RNDN);
        mpfr_mul(a[s].im.raw(), x.re.raw(), y.im.raw(), MPFR_RNDN);
        mpfr_mul(t_.raw(), x.im.raw(), y.re.raw(), MPFR_RNDN);
        mpfr_sub(a[s].im.raw(), a[s].im.raw(), t_.raw(), MPFR_RNDN);
      }
      for (std::int64_t j = 0; j < d_; ++j) {
        mpfr_set_zero(acc.re.raw(), 1);
        mpfr_set_zero(acc.im.raw(), 1);
        std::int64_t e = 0, step = (2 * j) % (2 * d_);
        for (std::int64_t s = 0; s < d_; ++s, e = (e + step) % (2 * d_)) mul_add(acc, a[s], roots_[e]);
        out[i * d_ + j] = roots_[((d_ + 1) * i % (2 * d_)) * j % (2 * d_)] * acc;
      }
    }
    return out;
  }

  BigReal cost(const std::vector<BigReal>& theta) { return residual_of(vec(theta)); }

  BigReal residual_of(const BigComplexVector& v) {
    auto o = bilinear(v, v);
    const BigReal target = BigReal(1L, digits_) / static_cast<long>(d_ + 1);
    BigReal s(digits_);
    for (std::int64_t p = 1; p < d_ * d_; ++p) {
      BigReal r = o[p].norm_sq() - target;
      s += r * r;
    }
    return s;
  }

  // normal equations h = J^T J, g = J^T r
  void normal_equations(const std::vector<BigReal>& theta, std::vector<std::vector<BigReal>>& h,
                        std::vector<BigReal>& g) {
    const std::size_t np = params();
    BigComplexVector v = vec(theta);
    auto o = bilinear(v, v);
    std::vector<std::vector<BigComplex>> a(m_), c(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      a[k] = bilinear(b_[k], v);
      c[k] = bilinear(v, b_[k]);
    }
    const BigReal target = BigReal(1L, digits_) / static_cast<long>(d_ + 1);
    h.assign(np, std::vector<BigReal>(np, BigReal(digits_)));
    g.assign(np, BigReal(digits_));
    std::vector<BigReal> row(np, BigReal(digits_));
    for (std::int64_t p = 1; p < d_ * d_; ++p) {
      const BigComplex oc = o[p].conj();
      const BigReal on = o[p].norm_sq();
      const BigReal r = on - target;
      for (std::size_t k = 0; k < m_; ++k) {
        BigComplex dx = a[k][p] + c[k][p];
        BigComplex dy = c[k][p] - a[k][p];  // times i below
        // Re(conj(o) i z) = -Im(conj(o) z)
        row[2 * k] = (oc * dx).re * 2L - on * theta[2 * k] * 4L;
        row[2 * k + 1] = -(oc * dy).im * 2L - on * theta[2 * k + 1] * 4L;
      }
      for (std::size_t x = 0; x < np; ++x) {
        g[x] += row[x] * r;
        for (std::size_t y = 0; y <= x; ++y) h[x][y] += row[x] * row[y];
      }
    }
    for (std::size_t x = 0; x < np; ++x) {
      for (std::size_t y = x + 1; y < np; ++y) h[x][y] = h[y][x];
    }
  }

 private:
  void mul_add(BigComplex& acc, const BigComplex& a, const BigComplex& w) {
    mpfr_mul(t_.raw(), a.re.raw(), w.re.raw(), MPFR_RNDN);
    mpfr_add(acc.re.raw(), acc.re.raw(), t_.raw(), MPFR_RNDN);
    mpfr_mul(t_.raw(), a.im.raw(), w.im.raw(), MPFR_RNDN);
    mpfr_sub(acc.re.raw(), acc.re.raw(), t_.raw(), MPFR_RNDN);
    mpfr_mul(t_.raw(), a.re.raw(), w.im.raw(), MPFR_RNDN);
    mpfr_add(acc.im.raw(), acc.im.raw(), t_.raw(), MPFR_RNDN);
    mpfr_mul(t_.raw(), a.im.raw(), w.re.raw(), MPFR_RNDN);
    mpfr_add(acc.im.raw(), acc.im.raw(), t_.raw(), MPFR_RNDN);
  }

  std::int64_t d_;
  std::size_t m_;
  int digits_;
  RootTable roots_;
  std::vector<BigComplexVector> b_;
  BigReal t_;
};

// Solves a x = b by Gaussian elimination with partial pivoting.
std::vector<BigReal> solve_dense(std::vector<std::vector<BigReal>> a, std::vector<BigReal> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (a[col][col].is_zero()) throw std::domain_error("singular system");
    for (std::size_t r = col + 1; r < n; ++r) {
      BigReal f = a[r][col] / a[col][col];
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigReal> x(n, BigReal(b.empty() ? 30 : b[0].digits()));
  for (std::size_t r = n; r-- > 0;) {
    BigReal s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

void normalize(std::vector<BigReal>& theta) {
  BigReal s(theta[0].digits());
  for (const auto& t : theta) s += t * t;
  BigReal inv = BigReal(1L, s.digits()) / sqrt(s);
  for (auto& t : theta) t *= inv;
}

BigReal fine_descent(FineProblem& prob, std::vector<BigReal>& theta, int max_iters) {
  const int digits = prob.digits();
  normalize(theta);
  BigReal cost = prob.cost(theta);
  const BigReal floor_cost = BigReal::pow10(-(2 * digits - 24), digits);
  BigReal mu(-1L, digits);
  std::vector<std::vector<BigReal>> h;
  std::vector<BigReal> g;
  for (int it = 0; it < max_iters && cost > floor_cost; ++it) {
    prob.normal_equations(theta, h, g);
    BigReal hmax(digits);
    for (std::size_t k = 0; k < h.size(); ++k) hmax = hmax > h[k][k] ? hmax : h[k][k];
    if (mu.sign() < 0) mu = hmax * BigReal::pow10(-8, digits);
    const BigReal mu_floor = hmax * BigReal::pow10(-(digits - 10), digits);
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      auto a = h;
      for (std::size_t k = 0; k < a.size(); ++k) a[k][k] += mu;
      std::vector<BigReal> neg(g.size(), BigReal(digits));
      for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
      std::vector<BigReal> trial = theta;
      auto step = solve_dense(std::move(a), std::move(neg));
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] += step[k];
      normalize(trial);
      BigReal c = prob.cost(trial);
      if (c < cost) {
        theta = std::move(trial);
        cost = c;
        mu = mu / 100L;
        if (mu < mu_floor) mu = mu_floor;
        accepted = true;
      } else {
        mu = mu * 10L;
      }
    }
    if (!accepted) break;
  }
  return cost;
}

}  // namespace

double frame_residual(const std::vector<cd>& v) {
  const std::int64_t d = static_cast<std::int64_t>(v.size());
  std::vector<cd> o;
  bilinear(v, v, double_roots(2 * d), o);
  const double target = 1.0 / static_cast<double>(d + 1);
  double s = 0;
  for (std::int64_t p = 1; p < d * d; ++p) {
    double r = std::norm(o[p]) - target;
    s += r * r;
  }
  return s;
}

BigReal frame_residual(const BigComplexVector& v) {
  FineProblem prob({}, static_cast<std::int64_t>(v.dim()), v.digits());
  return prob.residual_of(v);
}

SearchResult search(const SolverConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("restarts must be positive");
  if (!(config.target_residual > 0)) throw std::invalid_argument("target residual must be positive");
  const int digits = std::max(config.refine_digits, 20);
  auto basis = sector_basis(config, digits);
  CoarseProblem coarse(basis, config.dim);

  Eigen::VectorXd best_theta;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_seed = config.seed;
  for (int run = 0; run < config.restarts; ++run) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(run);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd theta(coarse.params());
    for (Eigen::Index k = 0; k < theta.size(); ++k) theta[k] = normal(rng);
    double c = coarse_descent(coarse, theta, config.max_iters);
    if (c < best) {
      best = c;
      best_theta = theta;
      best_seed = seed;
    }
    if (best < 1e-20) break;
  }

  std::vector<BigReal> theta;
  for (Eigen::Index k = 0; k < best_theta.size(); ++k) theta.emplace_back(best_theta[k], digits);
  FineProblem fine(basis, config.dim, digits);
  BigReal residual(digits);
  if (best < 1e-10) {
    residual = fine_descent(fine, theta, config.refine_iters);
  } else {
    normalize(theta);
    residual = fine.cost(theta);
  }
  SearchResult out;
  out.vector = fine.vec(theta);
  out.residual = residual;
  out.converged = residual < BigReal(config.target_residual, digits);
  out.seed = best_seed;
  out.coarse_residual = best;
  return out;
}

}  // namespace sic
