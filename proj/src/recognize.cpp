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

#include "sic/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sic/lattice.hpp"

namespace sic {

mpz_class IntegerRelation::max_abs() const {
  mpz_class m = 0;
  for (const auto& c : coefficients) m = std::max(m, mpz_class(abs(c)));
  return m;
}

namespace {

mpz_class to_integer(const BigReal& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

int working_digits(const std::vector<BigReal>& values, int precision) {
  int w = precision + 10;
  for (const auto& v : values) w = std::max(w, v.digits());
  return w;
}

}  // namespace

std::vector<IntegerRelation> find_relations(const std::vector<BigReal>& values, long coeff_bound, int precision) {
  if (precision < 10) throw std::invalid_argument("relation search needs at least 10 digits");
  if (values.size() < 2) throw std::invalid_argument("relation search needs at least two values");
  const std::size_t n = values.size();
  const int w = working_digits(values, precision);
  const BigReal scale = BigReal::pow10(precision - 2, w);

  std::vector<IntRow> rows(n, IntRow(n + 1, 0));
  for (std::size_t k = 0; k < n; ++k) {
    rows[k][k] = 1;
    rows[k][n] = to_integer(values[k].with_digits(w) * scale);
  }
  std::vector<IntRow> reduced;
  try {
    reduced = lll_reduce(std::move(rows));
  } catch (const std::invalid_argument&) {
    return {};
  }

  const BigReal threshold = BigReal::pow10(-static_cast<long>(std::floor(0.6 * precision)), w);
  std::vector<IntegerRelation> out;
  for (const auto& row : reduced) {
    IntegerRelation rel{{row.begin(), row.begin() + static_cast<long>(n)}, BigReal(w), precision};
    mpz_class cmax = rel.max_abs();
    if (cmax == 0 || cmax > coeff_bound) continue;
    // enough digits to determine n integers of this size
    if (precision < static_cast<double>(n) * std::log10(cmax.get_d()) + 5.0) continue;
    BigReal acc(w);
    for (std::size_t k = 0; k < n; ++k) acc += values[k].with_digits(w) * BigReal(rel.coefficients[k].get_si(), w);
    rel.residual = abs(acc);
    if (!(rel.residual < threshold)) continue;
    out.push_back(std::move(rel));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IntegerRelation& a, const IntegerRelation& b) { return a.max_abs() < b.max_abs(); });
  return out;
}

std::optional<IntegerRelation> find_relation(const std::vector<BigReal>& values, long coeff_bound, int precision) {
  auto all = find_relations(values, coeff_bound, precision);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<QuadraticElement> recognize_quadratic(const BigReal& x, long D, long max_den, int precision) {
  if (D < 2) throw std::invalid_argument("D must be a square-free integer >= 2");
  const int w = std::max(x.digits(), precision + 10);
  const BigReal tol = BigReal::pow10(-(precision - 4), w);
  if (abs(x) < tol) return QuadraticElement(0, 0, D);
  std::vector<BigReal> values = {BigReal(1L, w), sqrt(BigReal(D, w)), x.with_digits(w)};
  for (const auto& rel : find_relations(values, 2 * max_den, precision)) {
    const mpz_class& c = rel.coefficients[2];
    if (c == 0) continue;
    QuadraticElement q(mpq_class(-rel.coefficients[0], c), mpq_class(-rel.coefficients[1], c), D);
    if (q.q1().get_den() > max_den || q.q2().get_den() > max_den) continue;
    if (abs(eval_quadratic(q, w) - x) < tol) return q;
  }
  return std::nullopt;
}

std::vector<PythagoreanKind> default_dictionary(std::int64_t d) {
  using K = PythagoreanKind;
  if (d == 5) return {K::P5};
  if (d == 15) return {K::P5, K::P13, K::Q13, K::Q2};
  if (d == 195) return {K::P5, K::P13, K::Q13, K::Q2, K::P37, K::Q37, K::P241, K::Q241};
  return {K::P5};
}

std::vector<PythagoreanKind> parse_dictionary(const std::string& text) {
  std::vector<PythagoreanKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    out.push_back(parse_pythagorean(item));
  }
  return out;
}

std::optional<RecognizedPhase> recognize_phase(const BigReal& angle, const std::vector<PythagoreanKind>& dictionary,
                                               long max_exp_den, int precision) {
  if (angle.is_nan()) throw std::domain_error("phase gauge undefined");
  if (max_exp_den < 1) throw std::invalid_argument("max_exp_den must be positive");
  const int w = std::max(angle.digits(), precision + 10);
  const BigReal two_pi = BigReal::pi(w) * 2L;
  const BigReal tol = BigReal::pow10(-(precision - 6), w);
  auto wrapped = [&](BigReal a) {
    // into (-pi, pi]
    BigReal k = round(a / two_pi);
    a -= k * two_pi;
    return a;
  };
  BigReal nu = wrapped(angle.with_digits(w));
  if (abs(nu) < tol) return RecognizedPhase{PhaseExpression{}, abs(nu)};

  std::vector<PythagoreanKind> gens;
  for (auto k : dictionary) {
    if (k != PythagoreanKind::Q2 && std::find(gens.begin(), gens.end(), k) == gens.end()) gens.push_back(k);
  }
  std::vector<BigReal> values;
  values.push_back(nu);
  for (auto k : gens) values.push_back(pythagorean_arg(k, w));
  values.push_back(two_pi);

  for (auto rel : find_relations(values, 4 * max_exp_den, precision)) {
    mpz_class c0 = rel.coefficients[0];
    if (c0 == 0) continue;
    if (c0 < 0) {
      for (auto& c : rel.coefficients) c = -c;
      c0 = -c0;
    }
    if (c0 > max_exp_den) continue;
    CanonicalPhase cp;
    cp.turn = mpq_class(-rel.coefficients.back(), c0);
    cp.turn -= mpz_class(cp.turn.get_num() / cp.turn.get_den());
    if (cp.turn < 0) cp.turn += 1;
    cp.turn.canonicalize();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      mpq_class e(-rel.coefficients[k + 1], c0);
      e.canonicalize();
      if (e != 0) cp.exponents[gens[k]] = e;
    }
    PhaseExpression expr = from_canonical(cp);
    BigReal res = abs(wrapped(phase_angle(expr, w) - nu));
    if (res < tol) return RecognizedPhase{expr, res};
  }
  return std::nullopt;
}

std::string ConvertReport::to_json() const {
  nlohmann::ordered_json j;
  j["success"] = success();
  if (!message.empty()) j["message"] = message;
  j["span_residual"] = span_residual.sci(3);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json o;
    o["index"] = e.index;
    o["status"] = e.ok() ? "ok" : "failed";
    o["modulus"] = e.modulus ? e.modulus->to_string() : std::string();
    o["phase"] = e.phase ? to_string(*e.phase) : std::string(e.modulus && e.modulus->is_zero() ? "none" : "");
    o["residual"] = (e.modulus_residual > e.phase_residual ? e.modulus_residual : e.phase_residual).sci(3);
    if (!e.message.empty()) o["message"] = e.message;
    arr.push_back(o);
  }
  j["entries"] = arr;
  return j.dump(2);
}

ConvertReport convert(const BigComplexVector& v, const std::string& basis_id, int precision,
                      const ConvertOptions& options) {
  ConvertReport report;
  const int w = std::max(precision, v.digits()) + 10;
  report.span_residual = BigReal(w);
  const std::int64_t dim = basis_dimension(basis_id);
  if (static_cast<std::int64_t>(v.dim()) != dim) {
    report.message = "vector dimension " + std::to_string(v.dim()) + " does not match basis " + basis_id;
    return report;
  }
  AdaptedCoordinates coords;
  try {
    coords = to_adapted(v, basis_id, w);
  } catch (const std::exception& e) {
    report.message = e.what();
    return report;
  }
  report.span_residual = coords.residual;
  const auto dictionary = options.dictionary.empty() ? default_dictionary(dim) : options.dictionary;
  const BigReal zero_tol = BigReal::pow10(-(precision - 4), w);

  bool all_ok = true;
  for (std::size_t r = 0; r < coords.entries.size(); ++r) {
    const auto& c = coords.entries[r];
    EntryReport e;
    e.index = r;
    e.modulus_residual = BigReal(w);
    e.phase_residual = BigReal(w);
    bool zero = c.modulus_sq < zero_tol;
    try {
      if (options.moduli) {
        e.modulus = recognize_quadratic(c.modulus_sq, options.D, options.max_den, precision);
        if (e.modulus) {
          e.modulus_ok = true;
          zero = e.modulus->is_zero();
          e.modulus_residual = abs(eval_quadratic(*e.modulus, w) - c.modulus_sq);
        } else {
          e.message = "modulus not recognized in the base field";
        }
      } else {
        e.modulus_ok = true;
      }
      if (!options.phases) {
        e.phase_ok = true;
      } else if (zero) {
        e.phase_ok = true;
      } else if (r == 0) {
        e.phase = PhaseExpression{};
        e.phase_ok = true;
      } else {
        auto ph = recognize_phase(c.phase_angle, dictionary, options.max_exp_den, precision);
        if (ph) {
          e.phase = ph->expression;
          e.phase_residual = ph->residual;
          e.phase_ok = true;
        } else {
          if (!e.message.empty()) e.message += "; ";
          e.message += "phase not recognized";
        }
      }
    } catch (const std::exception& ex) {
      e.message = ex.what();
      e.modulus_ok = e.modulus_ok && e.modulus.has_value();
    }
    all_ok = all_ok && e.ok();
    report.entries.push_back(std::move(e));
  }
  if (!all_ok) {
    report.message = "recognition failed";
    return report;
  }
  if (!options.moduli || !options.phases) return report;

  FiducialSpec spec;
  spec.name = options.name;
  spec.dim = dim;
  spec.basis_id = basis_id;
  for (const auto& e : report.entries) {
    FiducialEntry fe;
    fe.modulus_sq = *e.modulus;
    if (!fe.modulus_sq.is_zero()) fe.phase = e.phase.value_or(PhaseExpression{});
    spec.entries.push_back(std::move(fe));
  }
  try {
    spec.validate();
  } catch (const std::exception& ex) {
    report.message = ex.what();
    return report;
  }
  report.spec = std::move(spec);
  return report;
}

bool sweep_point(const FiducialSpec& spec, const BigComplexVector& exact, int digits, bool phases) {
  if (digits < 10) return false;
  BigComplexVector v = truncate(exact, digits);
  ConvertOptions opt;
  opt.moduli = !phases;
  opt.phases = phases;
  ConvertReport rep = convert(v, spec.basis_id, digits, opt);
  if (rep.entries.empty()) return false;
  for (std::size_t r = 0; r < rep.entries.size(); ++r) {
    const auto& e = rep.entries[r];
    if (!e.ok()) return false;
    const FiducialEntry blank{};
    const FiducialEntry& want = r < spec.entries.size() ? spec.entries[r] : blank;
    if (!phases) {
      if (*e.modulus != want.modulus_sq) return false;
    } else {
      if (e.phase.has_value() != want.phase.has_value()) return false;
      if (e.phase && !phase_equal(*e.phase, *want.phase)) return false;
    }
  }
  return true;
}

SweepResult precision_sweep(const std::string& name, int step, int start) {
  if (step < 1) throw std::invalid_argument("step must be positive");
  FiducialSpec spec = embedded_spec(name);
  BigComplexVector exact = build_fiducial(spec, start + 20);
  SweepResult out;
  for (int pass = 0; pass < 2; ++pass) {
    int best = 0;
    for (int q = start; q > 0; q -= step) {
      if (!sweep_point(spec, exact, q, pass == 1)) break;
      best = q;
    }
    (pass == 0 ? out.min_moduli_digits : out.min_phase_digits) = best;
  }
  return out;
}

}  // namespace sic
