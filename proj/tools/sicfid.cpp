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

// Command-line front end: build, verify, adapt, recognize, solve, sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "sic/fiducials.hpp"
#include "sic/recognize.hpp"
#include "sic/solver.hpp"
#include "sic/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for bad option values that CLI11 cannot see (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

long field_discriminant(const std::string& field) {
  static const std::regex re(R"(sqrt(\d+))");
  std::smatch m;
  if (!std::regex_match(field, m, re)) throw UsageError("--field must look like sqrt3");
  return std::stol(m[1]);
}

std::vector<sic::SymplecticMatrix> parse_generators(const std::string& text, std::int64_t d) {
  std::vector<sic::SymplecticMatrix> out;
  if (text.empty()) {
    // stored symmetries when available
    try {
      out.push_back(sic::zauner_rep(d));
    } catch (const std::invalid_argument&) {
    }
    try {
      out.push_back(sic::symmetry_s(d));
    } catch (const std::invalid_argument&) {
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    long a, b, c, e;
    if (std::sscanf(item.c_str(), " %ld , %ld , %ld , %ld", &a, &b, &c, &e) != 4) {
      throw UsageError("generator '" + item + "' is not a,b,c,d");
    }
    out.emplace_back(a, b, c, e, d);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and recognize SIC fiducial vectors"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Write a fiducial in the standard basis");
  std::string b_name, b_spec, b_out;
  int b_prec = 150;
  auto* b_fid = build->add_option("--fiducial", b_name, "Embedded fiducial (5a, 15d, 15b, 195d, 195b)");
  build->add_option("--spec", b_spec, "Spec file instead of an embedded fiducial")->excludes(b_fid);
  build->add_option("--precision", b_prec, "Decimal digits")->check(CLI::Range(12, 100000));
  build->add_option("--out", b_out, "Output vector file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the SIC condition for a vector file");
  std::string v_in, v_gens;
  bool v_reduce = false;
  int v_prec = 0;
  verify->add_option("--in", v_in, "Vector file")->required();
  verify->add_flag("--reduce", v_reduce, "One overlap per symmetry orbit");
  verify->add_option("--generators", v_gens, "Symmetries for --reduce, 'a,b,c,d;...'");
  verify->add_option("--precision", v_prec, "Working digits (default: file precision)")->check(CLI::Range(12, 100000));

  // adapt
  auto* adapt = app.add_subcommand("adapt", "Print adapted-basis moduli and phases");
  std::string a_in, a_basis;
  int a_prec = 0;
  adapt->add_option("--in", a_in, "Vector file")->required();
  adapt->add_option("--basis", a_basis, "Adapted basis id")->required();
  adapt->add_option("--precision", a_prec, "Working digits (default: file precision)")->check(CLI::Range(12, 100000));

  // recognize
  auto* recog = app.add_subcommand("recognize", "Recover an exact spec from a numerical fiducial");
  std::string r_in, r_basis, r_field = "sqrt3", r_dict, r_out;
  long r_max_den = sic::kDefaultMaxDen, r_max_exp = sic::kDefaultMaxExpDen;
  int r_prec = 0;
  bool r_json = false;
  recog->add_option("--in", r_in, "Vector file")->required();
  recog->add_option("--basis", r_basis, "Adapted basis id")->required();
  recog->add_option("--field", r_field, "Base field of the moduli");
  recog->add_option("--dict", r_dict, "Phase generators, e.g. P5,P13,Q13,Q2");
  recog->add_option("--max-den", r_max_den, "Denominator bound for moduli")->check(CLI::PositiveNumber);
  recog->add_option("--max-exp-den", r_max_exp, "Denominator bound for phase exponents")->check(CLI::PositiveNumber);
  recog->add_option("--precision", r_prec, "Digits trusted in the input (default: file precision)")
      ->check(CLI::Range(10, 100000));
  recog->add_flag("--json", r_json, "Always print the per-entry report");
  recog->add_option("--out", r_out, "Write the recognized spec here");

  // solve
  auto* solve = app.add_subcommand("solve", "Numerical fiducial search in a symmetry sector");
  sic::SolverConfig s_cfg;
  std::string s_sector = "zauner:1/3", s_out;
  long s_dim = 0;
  std::uint64_t s_seed = 1;
  solve->add_option("--dim", s_dim, "Dimension")->required()->check(CLI::Range(2L, 1000L));
  solve->add_option("--sector", s_sector, "'full', 'zauner:k/3' or 'a,b,c,d:k/n;...'");
  solve->add_option("--seed", s_seed, "Random seed");
  solve->add_option("--restarts", s_cfg.restarts, "Seeded restarts")->check(CLI::PositiveNumber);
  solve->add_option("--precision", s_cfg.refine_digits, "Refinement digits")->check(CLI::Range(20, 2000));
  solve->add_option("--max-iters", s_cfg.max_iters, "Coarse iteration budget")->check(CLI::PositiveNumber);
  solve->add_option("--out", s_out, "Output vector file (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Minimum precision for exact recovery");
  std::string w_name;
  int w_step = 5, w_start = 100;
  sweep->add_option("--fiducial", w_name, "Embedded fiducial")->required();
  sweep->add_option("--step", w_step, "Digits per step")->check(CLI::PositiveNumber);
  sweep->add_option("--start", w_start, "First precision tried")->check(CLI::Range(10, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      if (b_name.empty() && b_spec.empty()) throw UsageError("build needs --fiducial or --spec");
      sic::FiducialSpec spec = b_spec.empty() ? sic::embedded_spec(b_name) : sic::read_spec_file(b_spec);
      spec.validate();
      sic::BigComplexVector v = sic::build_fiducial(spec, b_prec);
      emit(b_out, sic::format_vector(v, b_prec, {"fiducial " + spec.name + " basis " + spec.basis_id}));
      return kPass;
    }
    if (*verify) {
      sic::VectorFile f = sic::read_vector_file(v_in);
      int prec = v_prec ? v_prec : f.precision;
      auto d = static_cast<std::int64_t>(f.vector.dim());
      auto gens = v_reduce ? parse_generators(v_gens, d) : std::vector<sic::SymplecticMatrix>{};
      sic::OverlapReport rep = sic::sic_check(f.vector, prec, v_reduce, gens);
      std::cout << rep.to_string();
      return rep.passed() ? kPass : kFail;
    }
    if (*adapt) {
      sic::VectorFile f = sic::read_vector_file(a_in);
      int prec = a_prec ? a_prec : f.precision;
      sic::AdaptedCoordinates c = sic::to_adapted(f.vector, a_basis, prec + 10);
      const int shown = std::min(prec, 40);
      for (std::size_t r = 0; r < c.entries.size(); ++r) {
        std::cout << r << "  p = " << c.entries[r].modulus_sq.to_string(shown)
                  << "  nu = " << c.entries[r].phase_angle.to_string(shown) << "\n";
      }
      std::cout << "residual " << c.residual.sci(3) << "\n";
      return kPass;
    }
    if (*recog) {
      sic::ConvertOptions opt;
      opt.D = field_discriminant(r_field);
      sic::VectorFile f = sic::read_vector_file(r_in);
      opt.max_den = r_max_den;
      opt.max_exp_den = r_max_exp;
      if (!r_dict.empty()) opt.dictionary = sic::parse_dictionary(r_dict);
      int prec = r_prec ? r_prec : f.precision;
      sic::ConvertReport rep = sic::convert(f.vector, r_basis, prec, opt);
      if (r_json || !rep.success()) std::cout << rep.to_json() << "\n";
      if (rep.success()) {
        if (!r_out.empty()) sic::write_spec_file(r_out, *rep.spec);
        if (r_out.empty() || r_json) std::cout << sic::format_spec(*rep.spec);
        return kPass;
      }
      std::cerr << "recognition failed: " << rep.message << "\n";
      return kFail;
    }
    if (*solve) {
      s_cfg.dim = s_dim;
      s_cfg.sector = sic::parse_sector(s_sector, s_dim);
      s_cfg.seed = s_seed;
      sic::SearchResult r = sic::search(s_cfg);
      const int prec = s_cfg.refine_digits;
      emit(s_out, sic::format_vector(r.vector, prec,
                                     {"seed=" + std::to_string(r.seed) + " residual=" + r.residual.sci(3) +
                                      " sector=" + s_sector}));
      std::cerr << "residual " << r.residual.sci(3) << (r.converged ? " (converged)" : " (not converged)") << "\n";
      return r.converged ? kPass : kFail;
    }
    if (*sweep) {
      sic::SweepResult r = sic::precision_sweep(w_name, w_step, w_start);
      std::cout << "moduli: " << r.min_moduli_digits << ", phases: " << r.min_phase_digits << "\n";
      return (r.min_moduli_digits > 0 && r.min_phase_digits > 0) ? kPass : kFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
