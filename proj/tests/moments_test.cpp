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

#include "definetti/moments.hpp"

#include <stdexcept>

#include "definetti/processes.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

using testing_util::Gen;

Rational r(long p, unsigned long q) { return rational(p, q); }
OpenIntervalSet iv(const Rational& a, const Rational& b) { return OpenIntervalSet::interval(a, b); }
const OpenIntervalSet kUpperHalf = iv(r(1, 2), 2);

// E p^e for p ~ Beta(a, b), one factor at a time.
Rational beta_moment(const Rational& a, const Rational& b, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= (a + i) / (a + b + i);
  return out;
}

TEST(MomentsFromChi, PolyaSecondMoment) {
  auto chi = as_marginal_oracle(ProcessSpec::polya(1, 1));
  MomentBounds m = moments_from_chi(*chi, {kUpperHalf}, {2}, 4);
  EXPECT_EQ(m.lower, r(1, 3));
  EXPECT_EQ(m.upper, r(1, 3));
}

TEST(MomentsFromChi, IidUniformHalf) {
  auto chi = as_marginal_oracle(ProcessSpec::iid_uniform());
  Rational previous = 0;
  for (Fuel f = 1; f <= 8; ++f) {
    MomentBounds m = moments_from_chi(*chi, {iv(0, r(1, 2))}, {1}, f);
    EXPECT_LE(m.lower, r(1, 2));
    EXPECT_GE(m.upper, r(1, 2));
    EXPECT_GE(m.lower, previous);
    previous = m.lower;
  }
  EXPECT_EQ(previous, r(1, 2));
}

TEST(MomentsFromChi, DegenerateSets) {
  auto chi = as_marginal_oracle(ProcessSpec::iid_uniform());
  MomentBounds none = moments_from_chi(*chi, {OpenIntervalSet::empty_set()}, {1}, 4);
  EXPECT_EQ(none.lower, 0);
  EXPECT_THROW(moments_from_chi(*chi, {iv(0, r(1, 3))}, {0}, 4), std::invalid_argument);
  MomentBounds full = moments_from_chi(*chi, {OpenIntervalSet::full()}, {3}, 4);
  EXPECT_EQ(full.lower, 1);
}

TEST(ChiMoments, MatchesBetaMomentsForUrn) {
  for (auto [a, b] : {std::pair<long, long>{1, 1}, {2, 3}, {3, 1}}) {
    auto chi = as_marginal_oracle(ProcessSpec::polya(a, b));
    ChiMoments moments(chi, {kUpperHalf, iv(-1, r(1, 2))});
    for (unsigned i = 0; i <= 3; ++i) {
      for (unsigned j = 0; j <= 3; ++j) {
        // V_(1/2,1] = p and V_[0,1/2) = 1 - p.
        Rational pa = a, pb = b;
        Rational want = beta_moment(pa, pb, i) * beta_moment(pb, pa + i, j);
        EXPECT_EQ(moments.moment_lower({i, j}, 4), want) << a << "," << b << " e=" << i << "," << j;
      }
    }
  }
}

TEST(PricePolynomial, ExactMomentsPriceExactly) {
  Polynomial p(1);
  p.add_term({2}, 1);
  p.add_term({1}, r(-1, 2));
  MomentPricing priced = price_polynomial(ExactMoments::uniform(1), p, 1);
  EXPECT_EQ(priced.value, r(1, 12));
  EXPECT_FALSE(priced.slack);
  Gen gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial q(2);
    std::vector<Rational> x = {gen.rational(0, 1, 7), gen.rational(0, 1, 7)};
    for (int t = 0; t < 5; ++t) {
      q.add_term({static_cast<unsigned>(gen.below(4)), static_cast<unsigned>(gen.below(4))}, gen.rational(-3, 3, 5));
    }
    EXPECT_EQ(price_polynomial(ExactMoments::point_mass(x), q, 1).value, q.evaluate(x));
  }
}

TEST(DistFromMoments, UniformOnUpperHalf) {
  ExactMoments uniform = ExactMoments::uniform(1);
  SetTuple sigma = {iv(r(1, 2), 1)};
  Rational previous = 0;
  for (Fuel f = 1; f <= 10; ++f) {
    Rational v = dist_from_moments(uniform, sigma, f).lower;
    EXPECT_LE(v, r(1, 2));
    EXPECT_GE(v, previous);
    previous = v;
  }
  EXPECT_GT(previous, 0);
  EXPECT_EQ(dist_from_moments(uniform, sigma, 1).lower, 0);
}

TEST(DistFromMoments, PointMassOutsideGivesZero) {
  ExactMoments atom = ExactMoments::point_mass({0});
  for (Fuel f = 1; f <= 8; ++f) EXPECT_EQ(dist_from_moments(atom, {iv(r(1, 2), 1)}, f).lower, 0);
}

TEST(DistFromMoments, PointMassInsideReachesOneMinusOneOverN) {
  ExactMoments atom = ExactMoments::point_mass({r(1, 2)});
  EXPECT_EQ(dist_from_moments(atom, {OpenIntervalSet::full()}, 4).lower, r(3, 4));
  EXPECT_LE(dist_from_moments(atom, {iv(r(1, 4), r(3, 4))}, 6).lower, 1);
}

TEST(IntegrateContinuous, BracketsUniformMean) {
  auto chi = as_marginal_oracle(ProcessSpec::iid_uniform());
  Bracket previous{0, 1};
  for (Fuel f = 1; f <= 12; ++f) {
    Bracket b = integrate_continuous(*chi, {1}, f);
    EXPECT_LE(b.lower, r(1, 2));
    EXPECT_GE(b.upper, r(1, 2));
    EXPECT_GE(b.lower, previous.lower);
    EXPECT_LE(b.upper, previous.upper);
    previous = b;
  }
  EXPECT_LE(previous.upper - previous.lower, r(1, 6));
}

TEST(IntegrateContinuous, SharedValueSecondMoment) {
  auto chi = as_marginal_oracle(ProcessSpec::constant_uniform());
  Bracket b = integrate_continuous(*chi, {1, 1}, 8);
  EXPECT_LE(b.lower, r(1, 3));
  EXPECT_GE(b.upper, r(1, 3));
}

TEST(MomentTable, IndexesLastCoordinateFastest) {
  MomentTable t({1, 2}, {r(0, 1), r(1, 1), r(2, 1), r(3, 1), r(4, 1), r(5, 1)});
  EXPECT_EQ(t.at({0, 2}), 2);
  EXPECT_EQ(t.at({1, 0}), 3);
  EXPECT_EQ(MomentTable::cell_count({1, 2}), 6u);
}

}  // namespace
}  // namespace definetti
