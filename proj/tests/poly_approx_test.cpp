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

#include "definetti/poly_approx.hpp"

#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

using testing_util::Gen;
using testing_util::probe_points;

Rational r(long p, unsigned long q) { return rational(p, q); }
OpenIntervalSet iv(const Rational& a, const Rational& b) { return OpenIntervalSet::interval(a, b); }

// Max-norm distance to the complement of one box, computed directly.
Rational box_depth(const std::vector<Interval>& sides, const std::vector<Rational>& x) {
  Rational depth = 1;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    Rational lo = sides[i].lo < 0 ? Rational(1) : x[i] - sides[i].lo;
    Rational hi = sides[i].hi > 1 ? Rational(1) : sides[i].hi - x[i];
    depth = std::min(depth, std::min(lo, hi));
  }
  return std::max(Rational(0), depth);
}

TEST(Urysohn, Examples) {
  EXPECT_EQ(urysohn(2, {iv(0, 1)})({r(1, 2)}), r(1, 2));
  EXPECT_EQ(urysohn(4, {iv(r(1, 4), r(1, 2))})({0}), r(-1, 4));
  EXPECT_EQ(urysohn(2, {iv(0, 1), iv(0, 1)})({r(1, 2), r(1, 2)}), r(1, 2));
  EXPECT_THROW(urysohn(1, {iv(0, 1)}), std::invalid_argument);
}

TEST(Urysohn, MatchesDirectFormulaAndStaysBelowIndicator) {
  Gen gen(31);
  for (int trial = 0; trial < 80; ++trial) {
    SetTuple sigma = {gen.set(6, 2), gen.set(6, 2)};
    unsigned n = 2 + static_cast<unsigned>(gen.below(4));
    UrysohnPL f = urysohn(n, sigma);
    BoxUnion region = BoxUnion::from_tuple(sigma);
    for (const Rational& a : probe_points(6)) {
      for (const Rational& b : probe_points(3)) {
        std::vector<Rational> x = {a, b};
        Rational d = 0;
        for (const Box& box : region.boxes()) d = std::max(d, box_depth(box.sides, x));
        Rational want = std::min(Rational(1), Rational(n * d)) - r(1, n);
        EXPECT_EQ(f(x), want) << to_string(sigma) << " n=" << n;
        Rational indicator = region.contains(x) ? 1 : 0;
        EXPECT_LE(f(x), indicator);
        EXPECT_GE(f(x), -1);
      }
    }
  }
}

TEST(Bernstein, CertifiedAndDominatedOnGrid) {
  Gen gen(32);
  for (int trial = 0; trial < 12; ++trial) {
    SetTuple sigma = {gen.interval(4)};
    if (gen.below(2)) sigma.push_back(gen.interval(4));
    unsigned n = 2 + static_cast<unsigned>(gen.below(2));
    UrysohnPL f = urysohn(n, sigma);
    BernsteinApprox b(f);
    ASSERT_TRUE(b.certificate().passed());
    EXPECT_EQ(b.certificate().budget, r(1, 2 * n));
    BoxUnion region = BoxUnion::from_tuple(sigma);
    std::vector<Rational> axis = probe_points(10);
    std::vector<std::vector<Rational>> axes(sigma.size(), axis);
    std::vector<Rational> values = b.evaluate_grid(axes);
    std::size_t idx = 0;
    auto check = [&](const std::vector<Rational>& x) {
      Rational p = values[idx++];
      EXPECT_EQ(p, b.evaluate(x));
      EXPECT_GE(p, -1);
      EXPECT_LE(p, region.contains(x) ? 1 : 0) << to_string(sigma);
      Rational gap = p - f(x);
      EXPECT_LE(abs(gap), b.certificate().error_bound);
    };
    if (sigma.size() == 1) {
      for (const Rational& a : axis) check({a});
    } else {
      for (const Rational& a : axis) {
        for (const Rational& c : axis) check({a, c});
      }
    }
  }
}

TEST(Bernstein, MonomialFormAgreesWithBernsteinForm) {
  Gen gen(33);
  for (int trial = 0; trial < 8; ++trial) {
    SetTuple sigma = {gen.interval(4), gen.interval(3)};
    BernsteinApprox b(urysohn(2, sigma));
    if (b.monomial_count() > 20000) continue;
    Polynomial p = b.monomials();
    EXPECT_LE(p.size(), b.monomial_count());
    for (int s = 0; s < 10; ++s) {
      std::vector<Rational> x = {gen.rational(0, 1, 9), gen.rational(0, 1, 9)};
      EXPECT_EQ(p.evaluate(x), b.evaluate(x));
    }
  }
}

TEST(Bernstein, ConstantTargetHasDegreeZero) {
  BernsteinApprox b(urysohn(3, {OpenIntervalSet::full()}));
  EXPECT_EQ(b.degrees(), std::vector<unsigned>{0});
  EXPECT_EQ(b.evaluate({r(1, 3)}), r(2, 3));
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  Polynomial x(2), y(2);
  x.add_term({1, 0}, 1);
  y.add_term({0, 1}, 1);
  Polynomial p = x * y - Polynomial::constant(2, r(1, 2)) + x;
  EXPECT_EQ(p.evaluate({r(1, 2), r(1, 3)}), r(1, 6) - r(1, 2) + r(1, 2));
  EXPECT_EQ(p.coefficient({1, 1}), 1);
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ(p.max_degrees(), (Exponents{1, 1}));
}

TEST(SplitSigns, SeparatesCoefficients) {
  Polynomial p(1);
  p.add_term({0}, r(-1, 4));
  p.add_term({1}, 2);
  p.add_term({2}, -1);
  auto [plus, minus] = split_signs(p);
  EXPECT_EQ(plus.coefficient({1}), 2);
  EXPECT_EQ(minus.coefficient({0}), r(1, 4));
  EXPECT_EQ(minus.coefficient({2}), 1);
  EXPECT_EQ(plus - minus, p);
  for (const auto& [e, c] : plus.terms()) EXPECT_GT(c, 0);
  for (const auto& [e, c] : minus.terms()) EXPECT_GT(c, 0);
}

TEST(QPolynomial, DoublesArity) {
  Polynomial p(1);
  p.add_term({1}, 1);
  p.add_term({0}, -1);
  Polynomial q = q_polynomial(p);
  EXPECT_EQ(q.arity(), 2u);
  EXPECT_EQ(q.evaluate({r(1, 2), r(1, 3)}), r(1, 2) - 1);
}

TEST(IndicatorPolyForConstraints, Examples) {
  EXPECT_TRUE(indicator_poly_for_constraints(1, ConstraintMatrix({{r(1, 2)}}))->is_zero());
  auto empty = indicator_poly_for_constraints(3, ConstraintMatrix({{Rational(1)}}));
  for (const Rational& x : probe_points(8)) EXPECT_LE(empty->evaluate({x}), 0);
  auto full = indicator_poly_for_constraints(3, ConstraintMatrix({{r(-1, 2)}}));
  EXPECT_EQ(*full, Polynomial::constant(1, r(2, 3)));
}

TEST(IndicatorPolyForConstraints, BoundedByUpsetIndicator) {
  ConstraintMatrix c({{r(1, 4), r(1, 2)}, {r(3, 4), r(-1, 1)}});
  auto p = indicator_poly_for_constraints(2, c);
  for (const Rational& a : probe_points(8)) {
    for (const Rational& b : probe_points(8)) {
      bool inside = (a > r(1, 4) && b > r(1, 2)) || a > r(3, 4);
      Rational v = p->evaluate({a, b});
      EXPECT_GE(v, -1);
      EXPECT_LE(v, inside ? 1 : 0) << a << "," << b;
    }
  }
}

TEST(BoxUnion, DropsContainedBoxes) {
  BoxUnion u(1, {Box{{{0, r(1, 2)}}}, Box{{{r(1, 8), r(1, 4)}}}, Box{{{r(1, 2), r(1, 2)}}}});
  EXPECT_EQ(u.boxes().size(), 1u);
  EXPECT_TRUE(u.contains({r(1, 3)}));
  EXPECT_FALSE(u.contains({r(1, 2)}));
}

}  // namespace
}  // namespace definetti
