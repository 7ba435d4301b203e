// Copyright 2026 The definetti Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "definetti/numbers.hpp"

#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

TEST(ParseRational, AcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), rational(3, 4));
  EXPECT_EQ(parse_rational(" -6/8 "), rational(-3, 4));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_EQ(parse_rational("0/7"), Rational(0));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "0.5", "1/0", "1//2", "a/b", "1/2/3", "/2", "3/"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ToFractionString, AlwaysWritesADenominator) {
  EXPECT_EQ(to_fraction_string(Rational(2)), "2/1");
  EXPECT_EQ(to_fraction_string(rational(-4, 6)), "-2/3");
}

TEST(ToDecimalString, TruncatesTowardZero) {
  EXPECT_EQ(to_decimal_string(rational(2, 3), 4), "0.6666");
  EXPECT_EQ(to_decimal_string(rational(-2, 3), 4), "-0.6666");
  EXPECT_EQ(to_decimal_string(Rational(1), 3), "1.000");
  EXPECT_EQ(to_decimal_string(rational(1, 8), 10), "0.1250000000");
}

TEST(Rational, HelperCanonicalizes) {
  Rational r = rational(6, 8);
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 4);
  Rational s = rational(Integer(-10), Integer(4));
  EXPECT_EQ(s.get_num(), -5);
  EXPECT_EQ(s.get_den(), 2);
}

TEST(Binomial, MatchesPascal) {
  for (unsigned long n = 1; n < 30; ++n) {
    for (unsigned long k = 1; k < n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(ExactSum, AgreesWithLeftFold) {
  testing_util::Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> terms;
    Rational fold = 0;
    std::size_t count = gen.below(40);
    for (std::size_t i = 0; i < count; ++i) {
      terms.push_back(gen.rational(-5, 5, 97));
      fold += terms.back();
    }
    EXPECT_EQ(exact_sum(terms), fold);
  }
}

TEST(SqrtUpper, IsAnUpperBoundWithinPrecision) {
  testing_util::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r = gen.rational(0, 50, 1000);
    Rational s = sqrt_upper(r, 40);
    EXPECT_GE(s * s, r);
    Rational below = s - Rational(1, 1UL << 30);
    EXPECT_TRUE(below < 0 || below * below < r) << r;
  }
}

TEST(LcmOfDenominators, CoversEveryValue) {
  EXPECT_EQ(lcm_of_denominators({rational(1, 4), rational(5, 6), Rational(3)}), 12);
  EXPECT_EQ(lcm_of_denominators({}), 1);
}

TEST(ClampUnit, Clamps) {
  EXPECT_EQ(clamp_unit(Rational(-1)), 0);
  EXPECT_EQ(clamp_unit(rational(3, 2)), 1);
  EXPECT_EQ(clamp_unit(rational(1, 3)), rational(1, 3));
}

}  // namespace
}  // namespace definetti
