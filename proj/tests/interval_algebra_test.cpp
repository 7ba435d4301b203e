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

#include "definetti/interval_algebra.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

using testing_util::Gen;
using testing_util::probe_points;

Rational r(long p, unsigned long q) { return rational(p, q); }
OpenIntervalSet iv(const Rational& a, const Rational& b) { return OpenIntervalSet::interval(a, b); }

TEST(Normalize, MergesOverlaps) {
  OpenIntervalSet s = normalize({{0, r(1, 2)}, {r(1, 4), r(3, 4)}});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.intervals()[0], (Interval{0, r(3, 4)}));
}

TEST(Normalize, EmptyListIsEmptySet) { EXPECT_TRUE(normalize({}).empty()); }

TEST(Normalize, KeepsSentinelsForClippedEnds) {
  OpenIntervalSet s = normalize({{-1, r(1, 4)}, {r(1, 2), 2}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(0));
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(r(1, 4)));
  EXPECT_EQ(s.to_string(), "[0,1/4)|(1/2,1]");
}

TEST(Normalize, TouchingIntervalsStaySeparate) {
  OpenIntervalSet s = normalize({{0, r(1, 2)}, {r(1, 2), 1}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(s.contains(r(1, 2)));
}

TEST(Normalize, IsIdempotentAndPointwiseFaithful) {
  Gen gen(1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Interval> raw;
    std::size_t count = gen.below(5);
    for (std::size_t i = 0; i < count; ++i) {
      Rational a = gen.rational(-1, 2, 6), b = gen.rational(-1, 2, 6);
      raw.push_back({a, b});
    }
    OpenIntervalSet s = normalize(raw);
    EXPECT_EQ(normalize(s.intervals()), s);
    for (const Rational& x : probe_points(12)) {
      bool want = std::any_of(raw.begin(), raw.end(), [&](const Interval& i) { return i.lo < x && x < i.hi; });
      EXPECT_EQ(s.contains(x), want) << s.to_string() << " at " << x;
    }
  }
}

TEST(SetOperations, MatchPointwiseLogic) {
  Gen gen(2);
  for (int trial = 0; trial < 300; ++trial) {
    OpenIntervalSet a = gen.set(8, 3), b = gen.set(8, 3);
    OpenIntervalSet u = a.unite(b), n = a.intersect(b);
    for (const Rational& x : probe_points(16)) {
      EXPECT_EQ(u.contains(x), a.contains(x) || b.contains(x));
      EXPECT_EQ(n.contains(x), a.contains(x) && b.contains(x));
    }
  }
}

TEST(Length, SumsClippedPieces) {
  EXPECT_EQ((iv(-1, r(1, 4)).unite(iv(r(1, 2), 2))).length(), r(3, 4));
  EXPECT_EQ(OpenIntervalSet::full().length(), 1);
  EXPECT_EQ(OpenIntervalSet::empty_set().length(), 0);
}

TEST(Refines, StrictClosureContainment) {
  EXPECT_TRUE(refines({iv(r(1, 4), r(1, 2))}, {iv(0, 1)}));
  EXPECT_FALSE(refines({iv(0, 1)}, {iv(0, 1)}));
  EXPECT_FALSE(refines({iv(r(1, 4), r(1, 2)), iv(r(1, 4), r(1, 2))}, {iv(0, 1), iv(0, r(3, 8))}));
  EXPECT_TRUE(refines({OpenIntervalSet::full()}, {OpenIntervalSet::full()}));
  EXPECT_TRUE(refines({OpenIntervalSet::empty_set()}, {iv(r(1, 3), r(2, 3))}));
}

TEST(EnumerateRefinements, GridFourGivesQuarterShrink) {
  std::vector<SetTuple> list = enumerate_refinements({iv(0, 1)}, 4);
  SetTuple want = {iv(r(1, 4), r(3, 4))};
  EXPECT_NE(std::find(list.begin(), list.end(), want), list.end());
}

TEST(EnumerateRefinements, FuelOneHasNoStrictShrinkOfUnitInterval) {
  EXPECT_TRUE(enumerate_refinements({iv(0, 1)}, 1).empty());
}

TEST(EnumerateRefinements, PrefixMonotoneAndEveryMemberRefines) {
  Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    SetTuple pi;
    std::size_t k = 1 + gen.below(3);
    for (std::size_t j = 0; j < k; ++j) pi.push_back(gen.set(6, 2));
    std::vector<SetTuple> previous;
    for (Fuel f = 1; f <= 12; ++f) {
      std::vector<SetTuple> list = enumerate_refinements(pi, f);
      ASSERT_GE(list.size(), previous.size());
      EXPECT_TRUE(std::equal(previous.begin(), previous.end(), list.begin()));
      for (const SetTuple& sigma : list) EXPECT_TRUE(refines(sigma, pi)) << to_string(sigma) << " vs " << to_string(pi);
      previous = list;
    }
  }
}

TEST(ComplementOfClosure, Examples) {
  EXPECT_EQ(complement_of_closure(iv(r(1, 4), r(1, 2))), iv(-1, r(1, 4)).unite(iv(r(1, 2), 2)));
  EXPECT_EQ(complement_of_closure(OpenIntervalSet::empty_set()), OpenIntervalSet::full());
  EXPECT_TRUE(complement_of_closure(OpenIntervalSet::full()).empty());
}

TEST(ComplementOfClosure, PartitionsWithTheClosure) {
  Gen gen(4);
  for (int trial = 0; trial < 300; ++trial) {
    OpenIntervalSet s = gen.set(8, 3);
    OpenIntervalSet c = complement_of_closure(s);
    for (const Rational& x : probe_points(16)) {
      EXPECT_NE(c.contains(x), s.closure_contains(x)) << s.to_string() << " at " << x;
    }
  }
}

TEST(ShrinkToGrid, MovesEndpointsStrictlyInward) {
  EXPECT_TRUE(shrink_to_grid(iv(r(1, 3), r(2, 3)), 4).empty());
  EXPECT_EQ(shrink_to_grid(iv(r(1, 4), 2), 4), iv(r(1, 2), 2));
  EXPECT_EQ(shrink_to_grid(iv(r(1, 5), r(4, 5)), 10), iv(r(3, 10), r(7, 10)));
}

TEST(ConstraintMatrix, RejectsRaggedRows) {
  EXPECT_THROW(ConstraintMatrix({{1, 2}, {1}}), std::invalid_argument);
  EXPECT_THROW(ConstraintMatrix(std::vector<std::vector<Rational>>{}), std::invalid_argument);
  ConstraintMatrix c({{r(1, 2), 0}, {1, r(1, 3)}});
  EXPECT_EQ(c.rows(), 2u);
  EXPECT_EQ(c.cols(), 2u);
  EXPECT_EQ(c.at(1, 1), r(1, 3));
}

}  // namespace
}  // namespace definetti
