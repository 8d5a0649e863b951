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

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sic {
namespace {

constexpr int kP = 80;

BigReal tol(int digits = kP) { return BigReal::pow10(-(digits - 8), digits); }

// Phases as they occur in the embedded tables.
const std::vector<std::string> kTablePhases = {
    "1",
    "-1",
    "-i",
    "i^(1/2)",
    "-(-i)^(1/2)",
    "P5^(1/4)",
    "P5^(-1/4)",
    "-i*P5^(1/4)",
    "i*w24*P5^(1/4)",
    "-i*w24*P5^(-1/2)",
    "w12*P5^(1/3)",
    "w12^10*(-P5)^(1/12)",
    "w12^11*P5^(-1/12)",
    "P5^(1/4)*(-Q13*P13)^(1/4)",
    "-i*P5^(-1/4)*(-Q13*P13)^(1/4)",
    "(-Q13^5/(P13^5*Q2))^(1/12)",
    "w12*(P5^4/(P13^3*Q13^3))^(1/12)",
    "w12^11*(-P5^2*Q13^2/(P13^2*Q2))^(1/12)",
    "w12^2*(-P5*P13^2*Q2/Q13^2)^(1/12)",
    "-P5^(1/6)*(-w3*Q13/P13)^(1/12)",
    "-w24*P5^(1/12)*(i*P37*Q37)^(1/4)",
};

TEST(Quadratic, ArithmeticAndSign) {
  QuadraticElement a(mpq_class(3, 4), mpq_class(-1, 4));
  QuadraticElement b(mpq_class(1, 4), mpq_class(1, 4));
  EXPECT_EQ(a + b, QuadraticElement(1, 0));
  // (3 - sqrt3)(1 + sqrt3)/16 = (2 sqrt3)/16
  EXPECT_EQ(a * b, QuadraticElement(0, mpq_class(1, 8)));
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ(QuadraticElement(mpq_class(-9, 182), mpq_class(6, 91)).sign(), 1);
  EXPECT_EQ(QuadraticElement(1, -1).sign(), -1);
  EXPECT_EQ(QuadraticElement().sign(), 0);
  EXPECT_THROW(a + QuadraticElement(0, 1, 5), std::invalid_argument);
}

TEST(Quadratic, ParseAndPrint) {
  EXPECT_EQ(QuadraticElement::parse("3/4 - 1/4*sqrt3"), QuadraticElement(mpq_class(3, 4), mpq_class(-1, 4)));
  EXPECT_EQ(QuadraticElement::parse("1/4*sqrt3"), QuadraticElement(0, mpq_class(1, 4)));
  EXPECT_EQ(QuadraticElement::parse("-2/6"), QuadraticElement(mpq_class(-1, 3), 0));
  QuadraticElement x(mpq_class(-9, 182), mpq_class(6, 91));
  EXPECT_EQ(QuadraticElement::parse(x.to_string()), x);
  EXPECT_THROW(QuadraticElement::parse("1 + sqrt"), std::invalid_argument);
  EXPECT_THROW(QuadraticElement::parse("1 + 2*sqrt5"), std::invalid_argument);
}

TEST(Quadratic, Evaluation) {
  EXPECT_LT(abs(eval_quadratic(QuadraticElement(0, mpq_class(1, 4)), kP) -
                sqrt(BigReal(3L, kP)) / 4L),
            tol());
  EXPECT_NEAR(eval_quadratic(QuadraticElement(0, mpq_class(1, 4)), kP).to_double(), 0.4330127018922193, 1e-15);
  EXPECT_EQ(eval_quadratic(QuadraticElement(mpq_class(1, 2), 0), kP), BigReal("0.5", kP));
  EXPECT_NEAR(eval_quadratic(QuadraticElement(mpq_class(3, 4), mpq_class(-1, 4)), kP).to_double(),
              0.31698729810778065, 1e-15);
}

TEST(Pythagorean, ExactUnitModulus) {
  for (PythagoreanKind k : kAllPythagorean) {
    PythagoreanFactor f = pythagorean(k);
    EXPECT_EQ(f.re * f.re + f.im_coeff * f.im_coeff, QuadraticElement(1, 0)) << to_string(k);
    EXPECT_TRUE(f.is_unit());
    EXPECT_LT(abs(pythagorean_value(k, kP).abs() - BigReal(1L, kP)), tol());
  }
}

TEST(Pythagorean, PrintedValues) {
  PythagoreanFactor p5 = pythagorean(PythagoreanKind::P5);
  EXPECT_EQ(p5.re, QuadraticElement(mpq_class(-3, 5), 0));
  EXPECT_EQ(p5.im_coeff, QuadraticElement(mpq_class(4, 5), 0));
  PythagoreanFactor q13 = pythagorean(PythagoreanKind::Q13);
  EXPECT_EQ(q13.re, QuadraticElement(mpq_class(-11, 13), 0));
  EXPECT_EQ(q13.im_coeff, QuadraticElement(0, mpq_class(4, 13)));
  // Q2 is w3
  EXPECT_LT((pythagorean_value(PythagoreanKind::Q2, kP) - root_of_unity(3, 1, kP)).abs(), tol());
  EXPECT_EQ(parse_pythagorean("P241"), PythagoreanKind::P241);
  EXPECT_THROW(parse_pythagorean("P7"), std::invalid_argument);
}

TEST(Phase, EmptyIsOne) {
  PhaseExpression one;
  EXPECT_TRUE(one.is_one_literal());
  BigComplex z = eval_phase(one, kP);
  EXPECT_EQ(z.re, BigReal(1L, kP));
  EXPECT_TRUE(z.im.is_zero());
}

TEST(Phase, PrincipalFourthRoot) {
  BigComplex r = eval_phase(parse_phase("P5^(1/4)"), kP);
  BigReal want = pythagorean_arg(PythagoreanKind::P5, kP) / 4L;
  EXPECT_LT(abs(r.arg() - want), tol());
  BigComplex r4 = r * r * r * r;
  EXPECT_LT((r4 - pythagorean_value(PythagoreanKind::P5, kP)).abs(), tol());
  BigComplex s = eval_phase(parse_phase("-i*P5^(1/4)"), kP);
  EXPECT_LT((s - r * BigComplex(0, -1, kP)).abs(), tol());
}

TEST(Phase, TablePhasesHaveUnitModulus) {
  for (const std::string& s : kTablePhases) {
    BigComplex z = eval_phase(parse_phase(s), kP);
    EXPECT_LT(abs(z.abs() - BigReal(1L, kP)), BigReal::pow10(-(kP - 5), kP)) << s;
  }
}

TEST(Phase, PrintParseRoundTrip) {
  for (const std::string& s : kTablePhases) {
    PhaseExpression e = parse_phase(s);
    PhaseExpression back = parse_phase(to_string(e));
    EXPECT_TRUE(phase_equal(e, back)) << s << " -> " << to_string(e);
    EXPECT_LT((eval_phase(e, 40) - eval_phase(back, 40)).abs(), tol(40));
  }
}

TEST(Phase, Debranching) {
  for (const std::string& s : kTablePhases) {
    PhaseExpression e = parse_phase(s);
    long l = exponent_lcm(e);
    BigComplex z = eval_phase(e, kP), acc(1, 0, kP);
    for (long k = 0; k < l; ++k) acc = acc * z;
    EXPECT_LT((acc - debranched_power(e, kP)).abs(), tol()) << s;
  }
}

TEST(Phase, CanonicalEquality) {
  EXPECT_TRUE(phase_equal(parse_phase("Q2"), parse_phase("w3")));
  EXPECT_TRUE(phase_equal(parse_phase("i^(1/2)"), parse_phase("w8")));
  EXPECT_TRUE(phase_equal(parse_phase("-1"), parse_phase("i^2")));
  EXPECT_TRUE(phase_equal(parse_phase("P5^(1/4)*P5^(-1/4)"), parse_phase("1")));
  EXPECT_FALSE(phase_equal(parse_phase("P5^(1/4)"), parse_phase("P5^(-1/4)")));
  EXPECT_FALSE(phase_equal(parse_phase("P13"), parse_phase("Q13")));
  // canonical forms round trip
  for (const std::string& s : kTablePhases) {
    PhaseExpression e = parse_phase(s);
    PhaseExpression c = from_canonical(canonicalize(e));
    EXPECT_TRUE(phase_equal(e, c)) << s;
    EXPECT_LT((eval_phase(e, 40) - eval_phase(c, 40)).abs(), tol(40)) << s;
  }
}

TEST(Phase, CanonicalFormFoldsQ2) {
  CanonicalPhase c = canonicalize(parse_phase("w12^11*(P5*Q2*Q13/P13)^(1/12)"));
  EXPECT_EQ(c.exponents.count(PythagoreanKind::Q2), 0u);
  EXPECT_GE(c.turn, 0);
  EXPECT_LT(c.turn, 1);
}

TEST(Phase, ParseErrors) {
  EXPECT_THROW(parse_phase("P7"), std::invalid_argument);
  EXPECT_THROW(parse_phase("P5^(1/0)"), std::invalid_argument);
  EXPECT_THROW(parse_phase("(P5"), std::invalid_argument);
  EXPECT_THROW(parse_phase("P5 +"), std::invalid_argument);
}

TEST(Cyclotomic, GaussSumSquaredIsFive) {
  CyclotomicNumber g = CyclotomicNumber::root(5, 1) + CyclotomicNumber::root(5, 4) - CyclotomicNumber::root(5, 2) -
                       CyclotomicNumber::root(5, 3);
  EXPECT_EQ(g * g, CyclotomicNumber::rational(5));
  EXPECT_TRUE(g.is_real());
}

TEST(Cyclotomic, RelationsAndLift) {
  CyclotomicNumber s = CyclotomicNumber::rational(1) + CyclotomicNumber::root(3, 1) + CyclotomicNumber::root(3, 2);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(CyclotomicNumber::root(3, 1).lift(15), CyclotomicNumber::root(15, 5));
  EXPECT_EQ(CyclotomicNumber::root(15, 4).conj(), CyclotomicNumber::root(15, 11));
  EXPECT_EQ(cyclotomic_polynomial(15).size(), 9u);
  EXPECT_EQ(CyclotomicNumber::root(15, 3).reduced().size(), 8u);
  BigComplex z = (CyclotomicNumber::root(15, 2) * mpq_class(3, 2)).eval(kP);
  EXPECT_LT((z - root_of_unity(15, 2, kP) * BigComplex(BigReal("1.5", kP), BigReal(kP))).abs(), tol());
}

}  // namespace
}  // namespace sic
