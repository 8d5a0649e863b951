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

#include <stdexcept>

namespace sic {

namespace {

// p = (a + b sqrt3) / c, phase in the text grammar (null when p = 0)
struct Row {
  long a, b, c;
  const char* phase;
};

struct Table {
  const char* name;
  std::int64_t dim;
  const char* basis;
  std::vector<Row> rows;
};

const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
    {"5a", 5, "dim5-zauner2",
     {
      {3, -1, 4, "1"},
      {1, 1, 4, "P5^(1/4)"},
     }},
    {"15d", 15, "dim15-zauner6",
     {
      {0, 1, 4, "1"},
      {2, -1, 4, "-i*P5^(1/4)"},
      {0, 1, 8, "w12*P5^(1/3)"},
      {4, -1, 8, "w3*P5^(1/12)*(-Q13*P13)^(-1/4)"},
     }},
    {"15b", 15, "dim15-zauner6",
     {
      {0, 1, 8, "1"},
      {4, -1, 8, "-i*P5^(-1/4)*(-Q13*P13)^(1/4)"},
      {-3, 2, 8, "w12^5*P5^(-1/3)"},
      {1, 0, 8, "w12^11*P5^(-1/12)"},
      {6, -3, 8, "-1"},
      {0, 1, 8, "P5^(-1/4)"},
     }},
    {"195d", 195, "dim195-19",
     {
      {-9, 12, 182, "1"},
      {19, -8, 182, "P5^(1/4)*(-Q13*P13)^(1/4)"},
      {-9, 12, 364, "w3^2*P5^(1/3)"},
      {41, -20, 364, "-w24*P5^(1/12)*(i*P37*Q37)^(1/4)"},
      {-90, 55, 546, "-i*w24*P5^(-1/2)"},
      {20, -5, 182, "w24*P5^(3/4)"},
      {-3, 4, 273, "w3^2*P5^(1/3)"},
      {19, -8, 91, "w12^2*P5^(1/12)*(-Q13*P13)^(-1/4)"},
      {5, -2, 14, "w12^10*P5^(1/3)*(-w3*Q13/P13)^(1/12)"},
      {-3, 2, 14, "w12^2*P5^(1/12)*(-P13/(w3*Q13))^(1/6)"},
      {-3, 2, 21, "w12^7*P5^(1/6)*(-P13/(w3*Q13))^(1/12)"},
      {0, 1, 21, "w24*w12^2*(-P13/(w3*Q13))^(1/12)"},
      {2, -1, 7, "w24*w3^2*P5^(1/4)*(-P13/(w3*Q13))^(1/12)"},
      {2, -1, 14, "w24"},
      {0, 1, 14, "i*w24*P5^(1/4)"},
      {-3, 4, 42, "w12^5*P5^(1/3)*Q13^(1/2)*(-P13/(w3*Q13))^(1/6)"},
      {7, -4, 14, "w12^7*P5^(1/12)*(-w3*Q13/P13)^(1/12)"},
      {-6, 4, 21, "-P5^(1/6)*(-w3*Q13/P13)^(1/12)"},
      {1, 0, 7, "-P5^(1/6)*(-w3*Q13/P13)^(1/6)"},
     }},
    {"195b", 195, "dim195-36",
     {
      {-3, 4, 91, "1"},
      {2, -1, 7, "w4^3*(P5*P13/Q13)^(1/4)"},
      {-105, 62, 364, "w12*(P5^4/(P13^3*Q13^3))^(1/12)"},
      {5, 2, 364, "w12^4*(-P5)^(1/12)"},
      {-3, 4, 1092, "-1"},
      {11, -6, 28, "w4^2*(P5/Q13^2)^(1/4)"},
      {-174, 115, 546, "w12^3*(i*P5^4*Q241^3/P241^3)^(1/12)"},
      {4, -1, 182, "w12^10*(-P5)^(1/12)"},
      {2, -1, 14, "w12^5*(P5^4*P13^2*Q2/Q13^2)^(1/12)"},
      {-3, 2, 14, "w12^2*(-P5*P13^2*Q2/Q13^2)^(1/12)"},
      {0, 1, 21, "w12^5*(-P5^2*P13/(Q2*Q13))^(1/12)"},
      {0, 1, 42, "w12^4*(P13/(Q2*Q13))^(1/12)"},
      {2, -1, 14, "w12^5*(P5^3*P13/(Q2*Q13))^(1/12)"},
      {1, 0, 28, "-i"},
      {-3, 2, 28, "w4*P5^(1/4)"},
      {-3, 2, 42, "w12^11*(P5^4*Q2*Q13/P13)^(1/12)"},
      {2, -1, 14, "w12^2*(-P5*Q2*Q13/P13)^(1/12)"},
      {-3, 2, 21, "w12^4*(-P5^2*Q2*Q13/P13)^(1/12)"},
      {7, -4, 7, "w12^11*(-P5^2*Q13^2/(P13^2*Q2))^(1/12)"},
      {33, -18, 182, "-(-i)^(1/2)"},
      {-3, 4, 182, "w4^2*(-P5)^(1/4)"},
      {12, -3, 364, "-(-i)^(1/2)"},
      {6, 5, 364, "w4^2*(-P5)^(1/4)"},
      {-6, 5, 42, "w12^4*(-P5^4*P13^5*Q2/Q13^5)^(1/12)"},
      {7, -4, 14, "w12^3*(-P5*P13^2*Q2/Q13^2)^(1/12)"},
      {-3, 2, 21, "w12^2*(P5^2*P13^2*Q2/Q13^2)^(1/12)"},
      {0, 0, 1, nullptr},
      {0, 1, 84, "i^(1/2)"},
      {10, -5, 28, "w4^2*(-P5^3)^(1/4)"},
      {-12, 7, 42, "w6^4*(i*P5^2)^(1/6)"},
      {2, -1, 14, "w12^4*(-P5)^(1/12)"},
      {6, -3, 14, "w12^7*(-P5^4*Q2*Q13/P13)^(1/12)"},
      {-3, 2, 14, "w12^11*(P5*Q2*Q13/P13)^(1/12)"},
      {-6, 4, 21, "w6^4*(P5*Q2*Q13/P13)^(1/6)"},
      {-27, 16, 42, "(-Q13^5/(P13^5*Q2))^(1/12)"},
      {1, 0, 14, "w12^2*(P5^3*Q13^2/(P13^2*Q2))^(1/12)"},
     }},
  };
  return t;
}

}  // namespace

std::vector<std::string> embedded_names() {
  std::vector<std::string> out;
  for (const auto& t : tables()) out.emplace_back(t.name);
  return out;
}

FiducialSpec embedded_spec(const std::string& name) {
  for (const auto& t : tables()) {
    if (name != t.name) continue;
    FiducialSpec spec;
    spec.name = t.name;
    spec.dim = t.dim;
    spec.basis_id = t.basis;
    for (const auto& r : t.rows) {
      FiducialEntry e;
      e.modulus_sq = QuadraticElement(mpq_class(r.a, r.c), mpq_class(r.b, r.c));
      if (r.phase) e.phase = parse_phase(r.phase);
      spec.entries.push_back(std::move(e));
    }
    return spec;
  }
  throw std::invalid_argument("unknown fiducial '" + name + "'");
}

}  // namespace sic
