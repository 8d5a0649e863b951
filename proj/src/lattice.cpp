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

#include "sic/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace sic {

namespace {

mpz_class dot(const IntRow& a, const IntRow& b) {
  mpz_class s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

// nearest integer to a / b, b > 0
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class num = 2 * a + b;
  mpz_class den = 2 * b;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

class IntegralLll {
 public:
  explicit IntegralLll(std::vector<IntRow> rows)
      : b_(std::move(rows)), n_(b_.size()), d_(n_ + 1), lam_(n_, std::vector<mpz_class>(n_)) {}

  std::vector<IntRow> run() {
    if (n_ == 0) return b_;
    d_[0] = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) throw std::invalid_argument("lattice rows are dependent");
    std::size_t k = 1, kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        incorporate(k);
      }
      reduce(k, k - 1);
      // Lovasz with delta = 3/4, scaled by 4 d_{k-1}
      const mpz_class& l = lam_[k][k - 1];
      if (4 * d_[k + 1] * d_[k - 1] < 3 * d_[k] * d_[k] - 4 * l * l) {
        swap(k, kmax);
        if (k > 1) --k;
      } else {
        for (std::size_t l2 = k - 1; l2-- > 0;) reduce(k, l2);
        ++k;
      }
    }
    return b_;
  }

 private:
  void incorporate(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      mpz_class u = dot(b_[k], b_[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = (d_[i + 1] * u - lam_[k][i] * lam_[j][i]) / d_[i];
      }
      if (j < k) {
        lam_[k][j] = u;
      } else {
        if (u == 0) throw std::invalid_argument("lattice rows are dependent");
        d_[k + 1] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lam_[k][l]) <= d_[l + 1]) return;
    mpz_class q = round_div(lam_[k][l], d_[l + 1]);
    for (std::size_t t = 0; t < b_[k].size(); ++t) b_[k][t] -= q * b_[l][t];
    lam_[k][l] -= q * d_[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const mpz_class l = lam_[k][k - 1];
    const mpz_class bb = (d_[k - 1] * d_[k + 1] + l * l) / d_[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lam_[i][k];
      lam_[i][k] = (d_[k + 1] * lam_[i][k - 1] - l * t) / d_[k];
      lam_[i][k - 1] = (bb * t + l * lam_[i][k]) / d_[k + 1];
    }
    d_[k] = bb;
  }

  std::vector<IntRow> b_;
  std::size_t n_;
  std::vector<mpz_class> d_;  // d_[i] = Gram determinant of the first i rows
  std::vector<std::vector<mpz_class>> lam_;
};

}  // namespace

std::vector<IntRow> lll_reduce(std::vector<IntRow> rows) {
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw std::invalid_argument("ragged lattice basis");
  }
  return IntegralLll(std::move(rows)).run();
}

}  // namespace sic
