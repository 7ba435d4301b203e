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

#include "definetti/enumerable_reals.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

Rational r(long p, unsigned long q) { return rational(p, q); }

// Approaches `value` from below like value - 1/fuel.
LowerReal lower_towards(const Rational& value) {
  return LowerReal([value](Fuel f) -> Rational { return value - r(1, f); });
}
UpperReal upper_towards(const Rational& value) {
  return UpperReal([value](Fuel f) -> Rational { return value + r(1, f); });
}

TEST(LowerReal, MemoizesTheBoundFunction) {
  auto calls = std::make_shared<std::atomic<int>>(0);
  LowerReal x([calls](Fuel f) {
    ++*calls;
    return Rational(f);
  });
  LowerReal copy = x;
  EXPECT_EQ(x.bound_at(3), 3);
  EXPECT_EQ(copy.bound_at(3), 3);
  EXPECT_EQ(*calls, 1);
}

TEST(LowerSup, FamilyOfConstants) {
  LowerReal sup = lower_sup([](std::size_t i) -> std::optional<LowerReal> { return LowerReal(1 - r(1, i)); });
  EXPECT_EQ(sup.bound_at(10), r(9, 10));
  EXPECT_EQ(sup.bound_at(1), 0);
}

TEST(LowerSup, SingletonBehavesAsItsMember) {
  LowerReal member = lower_towards(r(2, 3));
  LowerReal sup = lower_sup(std::vector<LowerReal>{member});
  for (Fuel f = 1; f <= 8; ++f) EXPECT_EQ(sup.bound_at(f), std::max(Rational(0), member.bound_at(f)));
}

TEST(LowerSup, FiniteFamilyConvergesToMax) {
  LowerReal sup = lower_sup(std::vector<LowerReal>{lower_towards(r(1, 3)), lower_towards(r(1, 2)),
                                                   lower_towards(r(2, 5))});
  Rational previous = -10;
  for (Fuel f = 1; f <= 50; ++f) {
    Rational v = sup.bound_at(f);
    EXPECT_LE(v, r(1, 2));
    EXPECT_GE(v, previous);
    previous = v;
  }
  EXPECT_EQ(sup.bound_at(50), r(1, 2) - r(1, 50));
}

TEST(LowerSup, EmptyPrefixGivesFloor) {
  LowerReal sup = lower_sup([](std::size_t) -> std::optional<LowerReal> { return std::nullopt; }, r(1, 7));
  EXPECT_EQ(sup.bound_at(5), r(1, 7));
}

TEST(SignedSum, Examples) {
  LowerReal a = signed_sum({{1, LowerReal(r(1, 2))}, {-1, UpperReal(r(1, 4))}});
  LowerReal b = signed_sum({{0, LowerReal(r(1, 2))}, {0, UpperReal(r(1, 4))}});
  LowerReal c = signed_sum({{2, LowerReal(r(1, 3))}, {-3, UpperReal(r(1, 6))}});
  for (Fuel f = 1; f <= 5; ++f) {
    EXPECT_EQ(a.bound_at(f), r(1, 4));
    EXPECT_EQ(b.bound_at(f), 0);
    EXPECT_EQ(c.bound_at(f), r(1, 6));
  }
}

TEST(SignedSum, RejectsMismatchedSides) {
  EXPECT_THROW(signed_sum({{1, UpperReal(r(1, 2))}}), std::invalid_argument);
  EXPECT_THROW(signed_sum({{-1, LowerReal(r(1, 2))}}), std::invalid_argument);
}

TEST(SignedSum, SoundAndMonotoneForRandomTerms) {
  testing_util::Gen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SignedTerm> terms;
    Rational target = 0;
    for (std::size_t t = 0, n = 1 + gen.below(6); t < n; ++t) {
      Rational coef = gen.rational(-4, 4, 5), value = gen.rational(0, 1, 12);
      target += coef * value;
      if (coef >= 0) {
        terms.push_back({coef, lower_towards(value)});
      } else {
        terms.push_back({coef, upper_towards(value)});
      }
    }
    LowerReal sum = signed_sum(terms);
    Rational previous = sum.bound_at(1);
    for (Fuel f = 1; f <= 40; ++f) {
      Rational v = sum.bound_at(f);
      EXPECT_LE(v, target);
      EXPECT_GE(v, previous);
      previous = v;
    }
  }
}

TEST(UpperFromComplement, Examples) {
  UpperReal a = upper_from_complement(1, lower_towards(r(1, 4)));
  UpperReal b = upper_from_complement(1, LowerReal(Rational(0)));
  UpperReal c = upper_from_complement(1, LowerReal(r(2, 3)));
  for (Fuel f = 1; f <= 30; ++f) {
    EXPECT_GE(a.bound_at(f), r(3, 4));
    EXPECT_EQ(b.bound_at(f), 1);
    EXPECT_EQ(c.bound_at(f), r(1, 3));
  }
  EXPECT_EQ(a.bound_at(30), r(3, 4) + r(1, 30));
}

TEST(WeightedSum, LengthMismatchThrows) {
  EXPECT_THROW(weighted_sum({1, 2}, {1}), std::invalid_argument);
  EXPECT_EQ(weighted_sum({2, -1}, {r(1, 2), r(1, 3)}), r(2, 3));
}

}  // namespace
}  // namespace definetti
