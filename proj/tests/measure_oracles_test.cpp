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

#include "definetti/measure_oracles.hpp"

#include <algorithm>
#include <numeric>

#include "definetti/processes.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

using testing_util::Gen;

Rational r(long p, unsigned long q) { return rational(p, q); }
OpenIntervalSet iv(const Rational& a, const Rational& b) { return OpenIntervalSet::interval(a, b); }
const OpenIntervalSet kUpperHalf = iv(r(1, 2), 2);

TEST(AlgebraLower, IidUniformOnUnion) {
  auto oracle = as_marginal_oracle(ProcessSpec::iid_uniform());
  SetTuple sigma = {iv(0, r(1, 2)).unite(iv(r(3, 4), 1))};
  EXPECT_EQ(algebra_lower(*oracle, sigma, 4), r(3, 4));
}

TEST(AlgebraLower, EmptyCoordinateGivesZero) {
  auto oracle = as_marginal_oracle(ProcessSpec::iid_uniform());
  EXPECT_EQ(algebra_lower(*oracle, {iv(0, 1), OpenIntervalSet::empty_set()}, 6), 0);
}

TEST(AlgebraLower, PolyaPairOfOnes) {
  auto oracle = as_marginal_oracle(ProcessSpec::polya(1, 1));
  EXPECT_EQ(algebra_lower(*oracle, {kUpperHalf, kUpperHalf}, 3), r(1, 3));
}

TEST(ClosedUpper, Examples) {
  auto atom = as_marginal_oracle(ProcessSpec::constant_atom(r(1, 2)));
  auto uniform = as_marginal_oracle(ProcessSpec::iid_uniform());
  for (Fuel f = 1; f <= 6; ++f) {
    EXPECT_EQ(closed_upper(*atom, SetTuple{iv(r(1, 4), r(1, 2))}, f), 1);
    EXPECT_GE(closed_upper(*uniform, SetTuple{iv(r(1, 4), r(1, 2))}, f), r(1, 4));
    EXPECT_EQ(closed_upper(*uniform, SetTuple{OpenIntervalSet::full()}, f), 1);
  }
  EXPECT_EQ(closed_upper(*uniform, SetTuple{iv(r(1, 4), r(1, 2))}, 8), r(1, 4));
}

TEST(ClosedUpper, BracketsTheOpenLowerBound) {
  Gen gen(21);
  auto oracle = as_marginal_oracle(ProcessSpec::constant_uniform());
  for (int trial = 0; trial < 60; ++trial) {
    SetTuple sigma;
    for (std::size_t j = 0, k = 1 + gen.below(3); j < k; ++j) sigma.push_back(gen.set(6, 2));
    for (Fuel f = 1; f <= 6; ++f) {
      EXPECT_LE(algebra_lower(*oracle, sigma, f), closed_upper(*oracle, sigma, f)) << to_string(sigma);
    }
  }
}

TEST(ToEvent, GroupsEqualSets) {
  ProductEvent e = to_event({iv(0, r(1, 2)), kUpperHalf, iv(0, r(1, 2))});
  ASSERT_EQ(e.size(), 2u);
  std::size_t total = 0;
  for (const Factor& f : e) total += f.count;
  EXPECT_EQ(total, 3u);
  EXPECT_TRUE(has_empty_factor(to_event({iv(0, 1), OpenIntervalSet::empty_set()})));
}

TEST(QueryUpset, BetaUniformTail) {
  DeFinettiMeasureRepr mu = as_mu_oracle(MeasureSpec::beta_bernoulli(1, 1));
  ConstraintMatrix c({{r(1, 4)}});
  Rational previous = 0;
  for (Fuel f = 1; f <= 12; ++f) {
    Rational v = query_upset(mu, {kUpperHalf}, c, f);
    EXPECT_LE(v, r(3, 4));
    EXPECT_GE(v, previous);
    previous = v;
  }
  EXPECT_GE(previous, r(1, 2));
}

TEST(QueryUpset, ImpossibleAndCertainRows) {
  DeFinettiMeasureRepr mu = as_mu_oracle(MeasureSpec::dirac_at_uniform());
  EXPECT_EQ(query_upset(mu, {iv(0, 1)}, ConstraintMatrix({{Rational(1)}}), 5), 0);
  EXPECT_EQ(query_upset(mu, {iv(0, 1)}, ConstraintMatrix({{Rational(-1)}}), 5), 1);
  EXPECT_EQ(simplify_upset(ConstraintMatrix({{Rational(2)}}), nullptr).kind, UpsetSimplification::Kind::kImpossible);
}

TEST(TabulatedOracle, ReturnsBestEntryWithinFuel) {
  std::vector<Interval> box = {{0, r(1, 2)}};
  TabulatedOracle oracle({{box, 1, r(1, 4)}, {box, 3, r(2, 5)}, {box, 9, r(1, 2)}}, false);
  EXPECT_EQ(oracle.box_lower(box, 1), r(1, 4));
  EXPECT_EQ(oracle.box_lower(box, 5), r(2, 5));
  EXPECT_EQ(oracle.box_lower(box, 9), r(1, 2));
  EXPECT_EQ(oracle.box_lower({{r(1, 2), 1}}, 9), 0);
  EXPECT_EQ(oracle.box_lower({}, 1), 1);
}

TEST(TabulatedOracle, KeyIgnoresCoordinateOrder) {
  std::vector<Interval> box = {{0, r(1, 2)}, {r(1, 3), 1}};
  std::vector<Interval> swapped = {box[1], box[0]};
  TabulatedOracle oracle({{box, 1, r(1, 5)}}, true);
  EXPECT_EQ(oracle.box_lower(swapped, 1), r(1, 5));
}

TEST(AlgebraLower, InvariantUnderPermutation) {
  Gen gen(22);
  std::vector<std::shared_ptr<const MarginalOracle>> oracles = {
      as_marginal_oracle(ProcessSpec::polya(1, 2)), as_marginal_oracle(ProcessSpec::iid_uniform()),
      as_marginal_oracle(ProcessSpec::constant_uniform())};
  for (int trial = 0; trial < 30; ++trial) {
    SetTuple sigma;
    for (std::size_t j = 0; j < 3; ++j) sigma.push_back(gen.set(4, 2));
    for (const auto& oracle : oracles) {
      Rational base = algebra_lower(*oracle, sigma, 4);
      std::vector<std::size_t> order(sigma.size());
      std::iota(order.begin(), order.end(), 0);
      while (std::next_permutation(order.begin(), order.end())) {
        SetTuple permuted;
        for (std::size_t i : order) permuted.push_back(sigma[i]);
        EXPECT_EQ(algebra_lower(*oracle, permuted, 4), base) << to_string(sigma);
      }
    }
  }
}

TEST(AlgebraLower, MonotoneInFuel) {
  Gen gen(23);
  auto oracle = as_marginal_oracle(ProcessSpec::constant_uniform());
  for (int trial = 0; trial < 30; ++trial) {
    SetTuple sigma = {gen.set(5, 2), gen.set(5, 2)};
    Rational previous = 0;
    for (Fuel f = 1; f <= 8; ++f) {
      Rational v = algebra_lower(*oracle, sigma, f);
      EXPECT_GE(v, previous);
      previous = v;
    }
  }
}

}  // namespace
}  // namespace definetti
