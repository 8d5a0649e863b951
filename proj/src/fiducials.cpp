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

#include "sic/fiducials.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sic {

std::string EigenLabel::to_string() const {
  std::string z;
  if (zauner.k == 0) {
    z = "1";
  } else {
    z = "w" + std::to_string(zauner.n);
    if (zauner.k != 1) z += "^" + std::to_string(zauner.k);
  }
  std::string s = "|" + z + "," + (secondary > 0 ? "+" : "-");
  if (disambiguator) s += std::string(",") + disambiguator;
  return s + ">";
}

SymplecticMatrix zauner_rep(std::int64_t d) {
  switch (d) {
    case 3: return SymplecticMatrix(1, 0, -1, 1, 3);
    case 5: return SymplecticMatrix(0, -1, 1, -1, 5);
    case 13: return SymplecticMatrix(3, 0, 0, -4, 13);
    case 15: return SymplecticMatrix(-5, 3, -2, 4, 15);
    case 195: return SymplecticMatrix(55, 156, 169, 139, 195);
    default: break;
  }
  throw std::invalid_argument("no Zauner representative stored for dimension " + std::to_string(d));
}

SymplecticMatrix symmetry_s(std::int64_t d) {
  switch (d) {
    case 13: return SymplecticMatrix(5, 0, 0, -5, 13);
    case 195: return SymplecticMatrix(161, 0, 0, 86, 195);
    default: break;
  }
  throw std::invalid_argument("no order-4 symmetry stored for dimension " + std::to_string(d));
}

namespace {

using Cyc = CyclotomicNumber;

Cyc w5(long k) { return Cyc::root(5, k); }
Cyc w3(long k) { return Cyc::root(3, k); }
Cyc num(long q) { return Cyc::rational(mpq_class(q)); }

BigComplexVector evaluate(const std::vector<Cyc>& raw, const Cyc& norm_sq, int digits) {
  BigReal scale = BigReal(1L, digits) / sqrt(norm_sq.eval(digits).re);
  std::vector<BigComplex> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.push_back(c.eval(digits) * scale);
  return BigComplexVector(std::move(out));
}

Cyc norm_sq(const std::vector<Cyc>& raw) {
  Cyc acc = num(0);
  for (const auto& c : raw) acc = acc + c * c.conj();
  return acc;
}

AdaptedBasisVector make_vector(EigenLabel label, std::string name, std::vector<Cyc> raw, int digits) {
  Cyc n = norm_sq(raw);
  AdaptedBasisVector v{label, std::move(name), evaluate(raw, n, digits), n, std::move(raw)};
  return v;
}

}  // namespace

std::vector<AdaptedBasisVector> adapted_basis_5(int digits) {
  const Cyc s5 = w5(1) + w5(4) - w5(2) - w5(3);
  const Cyc one = num(1);
  const Cyc a0 = w5(1) * num(4) - w5(4) * num(2) + w3(1) * num(2) * (w5(3) - w5(4));
  // |w3,+>
  const Cyc e0_1 = w5(3) + w5(4) + w3(1) * (one + w5(3) * num(2) + w5(4) * num(2));
  const Cyc e0_2 = w5(2) * num(4) + w5(4) * num(3) + w3(1) * num(3) * (w5(4) - one);
  std::vector<Cyc> e0 = {a0, e0_1, e0_2, e0_2, e0_1};
  // |w3,->
  const Cyc e1_1 = w5(1) - w5(3) + s5 * w3(1);
  const Cyc e1_2 = one - w5(4);
  std::vector<Cyc> e1 = {num(0), e1_1, e1_2, -e1_2, -e1_1};
  // |w3^2,+>
  const Cyc e2_1 = num(4) + w5(2) * num(3) + w3(1) * num(3) * (w5(2) - w5(3));
  const Cyc e2_2 = one + w5(1) - w3(1) * (w5(3) * num(2) + w5(4) * num(2) + w5(2));
  std::vector<Cyc> e2 = {a0, e2_1, e2_2, e2_2, e2_1};
  // |w3^2,->
  const Cyc e3_1 = w5(3) - w5(2);
  const Cyc e3_2 = w5(1) - w5(4) + s5 * w3(2) * w5(2);
  std::vector<Cyc> e3 = {num(0), e3_1, e3_2, -e3_2, -e3_1};
  // |1,+>, printed already normalized
  const Cyc pre = (w3(2) - w3(1)) * mpq_class(1, 15);
  const Cyc e4_0 = num(4) + w5(1) * num(3) + w5(2) * num(2) + w5(3) * num(6);
  const Cyc e4_1 = num(-1) - w5(1) * num(2) - w5(2) * num(3) + w5(3);
  const Cyc e4_2 = num(4) + w5(1) * num(3) + w5(2) * num(2) + w5(3);
  std::vector<Cyc> e4 = {pre * e4_0, pre * e4_1, pre * e4_2, pre * e4_2, pre * e4_1};

  std::vector<AdaptedBasisVector> out;
  out.push_back(make_vector({RootOfUnity(1, 3), +1}, "e0(5)", e0, digits));
  out.push_back(make_vector({RootOfUnity(1, 3), -1}, "e1(5)", e1, digits));
  out.push_back(make_vector({RootOfUnity(2, 3), +1}, "e2(5)", e2, digits));
  out.push_back(make_vector({RootOfUnity(2, 3), -1}, "e3(5)", e3, digits));
  out.push_back(make_vector({RootOfUnity(0, 1), +1}, "e4(5)", e4, digits));
  return out;
}

std::vector<AdaptedBasisVector> adapted_basis_3(int digits) {
  std::vector<AdaptedBasisVector> out;
  out.push_back(make_vector({RootOfUnity(1, 3), -1}, "e0(3)", {num(0), num(1), num(1)}, digits));
  out.push_back(make_vector({RootOfUnity(1, 3), +1}, "e1(3)", {num(0), num(1), num(-1)}, digits));
  out.push_back(make_vector({RootOfUnity(0, 1), -1}, "e2(3)", {num(1), num(0), num(0)}, digits));
  return out;
}

std::vector<AdaptedBasisVector> adapted_basis_13(int digits) {
  // U_Z |s> = |3s>, U_S |s> = -|5s>, and <3, 5> is all of (Z/13)^*, so the
  // joint projection of |1> puts one root of unity on every nonzero entry:
  // entry at 3^k 5^l is conj(lz)^k (-ls)^l / 12 before normalization. The
  // overall sign makes entry 1 real with sign -ls.
  struct Spec13 {
    long z;  // zauner eigenvalue w3^z
    int s;   // U_S eigenvalue
    char tag;
  };
  const std::array<Spec13, 6> specs = {{{0, -1, 'b'}, {2, +1, 0}, {1, -1, 0}, {0, +1, 0}, {2, -1, 0}, {1, +1, 0}}};
  std::vector<AdaptedBasisVector> out;
  std::vector<Cyc> a(13, num(0));
  a[0] = num(1);
  out.push_back(make_vector({RootOfUnity(0, 1), -1, 'a'}, "e0(13)", a, digits));
  int idx = 1;
  for (const auto& sp : specs) {
    std::vector<Cyc> raw(13, num(0));
    for (long k = 0; k < 3; ++k) {
      long p3 = 1;
      for (long t = 0; t < k; ++t) p3 = p3 * 3 % 13;
      for (long l = 0; l < 4; ++l) {
        long s = p3;
        for (long t = 0; t < l; ++t) s = s * 5 % 13;
        long sign = -sp.s;  // calibration
        for (long t = 0; t < l; ++t) sign *= -sp.s;
        raw[s] = w3(-sp.z * k) * num(sign);
      }
    }
    out.push_back(make_vector({RootOfUnity(sp.z, 3), sp.s, sp.tag}, "e" + std::to_string(idx) + "(13)", raw,
                              digits));
    ++idx;
  }
  return out;
}

namespace {

const std::vector<std::array<int, 2>> kPairs15 = {{0, 0}, {0, 1}, {2, 2}, {2, 3}, {1, 0}, {1, 1}};

const std::vector<std::array<int, 3>> kTriples19 = {
    {0, 0, 0}, {0, 0, 1}, {0, 2, 2}, {0, 2, 3}, {1, 0, 0}, {1, 0, 1}, {1, 2, 2}, {1, 2, 3}, {2, 1, 2}, {2, 1, 3},
    {3, 0, 4}, {3, 2, 0}, {3, 2, 1}, {4, 1, 0}, {4, 1, 1}, {5, 0, 2}, {5, 0, 3}, {5, 2, 4}, {6, 1, 4}};

const std::vector<std::array<int, 3>> kTriples17 = {
    {0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}, {2, 0, 2}, {2, 0, 3}, {2, 2, 4}, {3, 1, 4}, {4, 0, 0},
    {4, 0, 1}, {4, 2, 2}, {4, 2, 3}, {5, 1, 2}, {5, 1, 3}, {6, 0, 4}, {6, 2, 0}, {6, 2, 1}};

RootOfUnity mul_roots(const RootOfUnity& a, const RootOfUnity& b) {
  long n = std::lcm(a.n, b.n);
  return RootOfUnity(a.k * (n / a.n) + b.k * (n / b.n), n);
}

AdaptedBasisVector product(const std::vector<const AdaptedBasisVector*>& parts, const std::vector<std::int64_t>& dims,
                           int secondary) {
  BigComplexVector v = parts[0]->vector;
  Cyc n = parts[0]->norm_factor_sq;
  RootOfUnity z = parts[0]->label.zauner;
  std::string name = parts[0]->name;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    v = kron(v, parts[k]->vector);
    n = n * parts[k]->norm_factor_sq;
    z = mul_roots(z, parts[k]->label.zauner);
    name += " " + parts[k]->name;
  }
  if (z.k == 0) z = RootOfUnity(0, 1);
  return AdaptedBasisVector{{z, secondary, 0}, name, tensor_to_standard(v, dims), n, {}};
}

}  // namespace

std::vector<std::string> basis_ids() { return {"dim5-zauner2", "dim15-zauner6", "dim195-19", "dim195-36"}; }

std::int64_t basis_dimension(const std::string& id) {
  if (id == "dim5-zauner2") return 5;
  if (id == "dim15-zauner6") return 15;
  if (id == "dim195-19" || id == "dim195-36") return 195;
  throw std::invalid_argument("unknown basis '" + id + "'");
}

std::size_t basis_size(const std::string& id) {
  if (id == "dim5-zauner2") return 2;
  if (id == "dim15-zauner6") return 6;
  if (id == "dim195-19") return 19;
  if (id == "dim195-36") return 36;
  throw std::invalid_argument("unknown basis '" + id + "'");
}

std::vector<AdaptedBasisVector> assemble_basis(const std::string& id, int digits) {
  if (id == "dim5-zauner2") {
    auto b5 = adapted_basis_5(digits);
    return {b5[0], b5[1]};
  }
  if (id == "dim15-zauner6") {
    auto b3 = adapted_basis_3(digits);
    auto b5 = adapted_basis_5(digits);
    std::vector<AdaptedBasisVector> out;
    for (const auto& [i, j] : kPairs15) {
      out.push_back(product({&b3[i], &b5[j]}, {3, 5}, b3[i].label.secondary * b5[j].label.secondary));
    }
    return out;
  }
  if (id == "dim195-19" || id == "dim195-36") {
    auto b13 = adapted_basis_13(digits);
    auto b3 = adapted_basis_3(digits);
    auto b5 = adapted_basis_5(digits);
    std::vector<AdaptedBasisVector> out;
    auto add = [&](const std::vector<std::array<int, 3>>& triples) {
      for (const auto& [i, j, k] : triples) {
        // U_S = U_S13 (x) U_P3 (x) 1
        int s = b13[i].label.secondary * b3[j].label.secondary;
        out.push_back(product({&b13[i], &b3[j], &b5[k]}, {13, 3, 5}, s));
      }
    };
    add(kTriples19);
    if (id == "dim195-36") add(kTriples17);
    return out;
  }
  throw std::invalid_argument("unknown basis '" + id + "'");
}

// ---------------------------------------------------------------- specs

QuadraticElement FiducialSpec::total() const {
  QuadraticElement acc;
  for (const auto& e : entries) acc = acc + e.modulus_sq;
  return acc;
}

void FiducialSpec::validate() const {
  if (entries.empty()) throw std::invalid_argument("invalid spec: no entries");
  if (basis_dimension(basis_id) != dim) throw std::invalid_argument("invalid spec: basis dimension mismatch");
  // a spec may use a leading part of its basis (15d spans the first four of six)
  if (entries.size() > basis_size(basis_id)) throw std::invalid_argument("invalid spec: too many entries");
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const auto& e = entries[r];
    if (e.modulus_sq.sign() < 0) throw std::invalid_argument("invalid spec: negative modulus at " + std::to_string(r));
    if (e.modulus_sq.is_zero() != !e.phase.has_value()) {
      throw std::invalid_argument("invalid spec: phase present iff modulus nonzero, entry " + std::to_string(r));
    }
  }
  if (!entries[0].phase || !phase_equal(*entries[0].phase, PhaseExpression{})) {
    throw std::invalid_argument("invalid spec: first phase must be 1");
  }
  if (total() != QuadraticElement(1, 0)) {
    throw std::invalid_argument("invalid spec: moduli sum to " + total().to_string());
  }
}

bool FiducialSpec::same_as(const FiducialSpec& o) const {
  // missing trailing entries count as zero entries
  if (dim != o.dim || basis_id != o.basis_id) return false;
  const FiducialEntry blank{};
  for (std::size_t r = 0; r < std::max(entries.size(), o.entries.size()); ++r) {
    const auto& a = r < entries.size() ? entries[r] : blank;
    const auto& b = r < o.entries.size() ? o.entries[r] : blank;
    if (a.modulus_sq != b.modulus_sq) return false;
    if (a.phase.has_value() != b.phase.has_value()) return false;
    if (a.phase && !phase_equal(*a.phase, *b.phase)) return false;
  }
  return true;
}

BigComplexVector build_fiducial(const FiducialSpec& spec, int digits) {
  auto basis = assemble_basis(spec.basis_id, digits);
  if (basis.size() < spec.entries.size()) throw std::invalid_argument("invalid spec: too many entries");
  BigComplexVector v(static_cast<std::size_t>(spec.dim), digits);
  for (std::size_t r = 0; r < spec.entries.size(); ++r) {
    const auto& e = spec.entries[r];
    if (e.modulus_sq.sign() < 0) throw std::invalid_argument("invalid spec");
    if (e.modulus_sq.is_zero()) continue;
    BigComplex c = eval_phase(e.phase.value_or(PhaseExpression{}), digits) * sqrt(eval_quadratic(e.modulus_sq, digits));
    v += basis[r].vector * c;
  }
  return v;
}

std::vector<BigComplex> adapted_coefficients(const BigComplexVector& v, const std::vector<AdaptedBasisVector>& basis) {
  std::vector<BigComplex> c;
  c.reserve(basis.size());
  for (const auto& e : basis) c.push_back(inner(e.vector, v));
  return c;
}

AdaptedCoordinates to_adapted(const BigComplexVector& v, const std::vector<AdaptedBasisVector>& basis, int digits) {
  if (basis.empty() || basis[0].vector.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  BigComplexVector w = v.with_digits(digits);
  auto c = adapted_coefficients(w, basis);
  const BigReal tol = BigReal::pow10(-(digits - 10), digits);
  if (c[0].norm_sq() < tol) throw std::domain_error("phase gauge undefined");
  AdaptedCoordinates out{{}, BigReal(digits)};
  BigReal arg0 = c[0].arg();
  BigReal pi = BigReal::pi(digits);
  BigComplexVector rest = w;
  for (std::size_t r = 0; r < c.size(); ++r) {
    rest -= basis[r].vector * c[r];
    BigReal m = c[r].norm_sq();
    BigReal a(digits);
    if (r > 0 && m >= tol) {
      a = c[r].arg() - arg0;
      if (a > pi) a -= pi * 2L;
      if (a <= -pi) a += pi * 2L;
    }
    out.entries.push_back({c[r], m, a});
  }
  out.residual = rest.norm();
  return out;
}

AdaptedCoordinates to_adapted(const BigComplexVector& v, const std::string& basis_id, int digits) {
  return to_adapted(v, assemble_basis(basis_id, digits), digits);
}

BigComplexVector change_representative(const BigComplexVector& v, const SymplecticMatrix& g, int digits) {
  if (static_cast<std::int64_t>(v.dim()) != g.modulus()) throw std::invalid_argument("dimension mismatch");
  return metaplectic(g, digits).matrix * v;
}

// ---------------------------------------------------------------- files

std::string format_spec(const FiducialSpec& spec) {
  std::ostringstream os;
  os << "fiducial " << spec.name << " dim " << spec.dim << " basis " << spec.basis_id << "\n";
  for (const auto& e : spec.entries) {
    os << "p = " << e.modulus_sq.to_string() << " ; phase = " << (e.phase ? to_string(*e.phase) : "none") << "\n";
  }
  return os.str();
}

FiducialSpec parse_spec(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  FiducialSpec spec;
  bool header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto where = [&] { return "spec line " + std::to_string(lineno) + ": "; };
    if (!header) {
      std::istringstream hs(line);
      std::string k1, k2, k3;
      if (!(hs >> k1 >> spec.name >> k2 >> spec.dim >> k3 >> spec.basis_id) || k1 != "fiducial" || k2 != "dim" ||
          k3 != "basis") {
        throw std::invalid_argument(where() + "expected 'fiducial <name> dim <d> basis <id>'");
      }
      header = true;
      continue;
    }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw std::invalid_argument(where() + "missing ';'");
    std::string left = line.substr(0, semi), right = line.substr(semi + 1);
    auto eq1 = left.find('='), eq2 = right.find('=');
    if (eq1 == std::string::npos || eq2 == std::string::npos) throw std::invalid_argument(where() + "missing '='");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(left.substr(0, eq1)) != "p" || trim(right.substr(0, eq2)) != "phase") {
      throw std::invalid_argument(where() + "expected 'p = ... ; phase = ...'");
    }
    FiducialEntry e;
    e.modulus_sq = QuadraticElement::parse(trim(left.substr(eq1 + 1)));
    std::string ph = trim(right.substr(eq2 + 1));
    if (ph != "none") e.phase = parse_phase(ph);
    spec.entries.push_back(std::move(e));
  }
  if (!header) throw std::invalid_argument("empty spec");
  return spec;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

FiducialSpec read_spec_file(const std::string& path) { return parse_spec(slurp(path)); }
void write_spec_file(const std::string& path, const FiducialSpec& spec) { dump(path, format_spec(spec)); }

std::string format_vector(const BigComplexVector& v, int precision, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "# dim=" << v.dim() << " precision=" << precision << "\n";
  for (const auto& c : comments) os << "# " << c << "\n";
  for (std::size_t r = 0; r < v.dim(); ++r) os << serialize(v[r], precision) << "\n";
  return os.str();
}

VectorFile parse_vector(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  VectorFile f;
  long dim = -1;
  std::vector<std::string> rows;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      long d = 0;
      int p = 0;
      if (dim < 0 && std::sscanf(body.c_str(), " dim=%ld precision=%d", &d, &p) == 2) {
        dim = d;
        f.precision = p;
      } else {
        auto b = body.find_first_not_of(' ');
        f.comments.push_back(b == std::string::npos ? "" : body.substr(b));
      }
      continue;
    }
    rows.push_back(line);
  }
  if (dim < 0) throw std::invalid_argument("vector file lacks '# dim=<d> precision=<P>' header");
  if (static_cast<long>(rows.size()) != dim) {
    throw std::invalid_argument("vector file has " + std::to_string(rows.size()) + " rows, header says " +
                                std::to_string(dim));
  }
  if (f.precision < 1) throw std::invalid_argument("vector file precision must be positive");
  std::vector<BigComplex> entries;
  entries.reserve(rows.size());
  for (const auto& r : rows) entries.push_back(parse_complex(r, f.precision));
  f.vector = BigComplexVector(std::move(entries));
  return f;
}

VectorFile read_vector_file(const std::string& path) { return parse_vector(slurp(path)); }

void write_vector_file(const std::string& path, const BigComplexVector& v, int precision,
                       const std::vector<std::string>& comments) {
  dump(path, format_vector(v, precision, comments));
}

}  // namespace sic
