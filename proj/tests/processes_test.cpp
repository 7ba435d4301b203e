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

#include "definetti/processes.hpp"

#include <cmath>
#include <stdexcept>

#include "definetti/definetti_core.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace definetti {
namespace {

using testing_util::Gen;
using testing_util::urn_sequential;

Rational r(long p, unsigned long q) { return rational(p, q); }
OpenIntervalSet iv(const Rational& a, const Rational& b) { return OpenIntervalSet::interval(a, b); }
const OpenIntervalSet kUpperHalf = iv(r(1, 2), 2);

TEST(PolyaMarginal, Examples) {
  EXPECT_EQ(polya_marginal(1, 1, "1"), r(1, 2));
  EXPECT_EQ(polya_marginal(1, 1, "11"), r(1, 3));
  EXPECT_EQ(polya_marginal(r(3, 2), r(5, 2), "10"), r(3, 16));
  EXPECT_EQ(polya_marginal(2, 5, ""), 1);
}

TEST(PolyaMarginal, MatchesSequentialUrnAndIsExchangeable) {
  Gen gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = gen.rational(1, 4, 4), b = gen.rational(1, 4, 4);
    std::string pattern;
    std::vector<int> bits;
    for (std::size_t i = 0, n = gen.below(7); i < n; ++i) {
      int bit = static_cast<int>(gen.below(2));
      bits.push_back(bit);
      pattern.push_back(bit ? '1' : '0');
    }
    Rational want = urn_sequential(a, b, bits);
    EXPECT_EQ(polya_marginal(a, b, pattern), want) << pattern;
    std::string reversed(pattern.rbegin(), pattern.rend());
    EXPECT_EQ(polya_marginal(a, b, reversed), want);
  }
}

TEST(Rising, Factorial) {
  EXPECT_EQ(rising(1, 4), 24);
  EXPECT_EQ(rising(r(1, 2), 2), r(3, 4));
  EXPECT_EQ(rising(7, 0), 1);
}

TEST(MarginalOracles, Examples) {
  auto iid = as_marginal_oracle(ProcessSpec::iid_uniform());
  EXPECT_EQ(iid->box_lower({{0, r(1, 2)}, {r(1, 4), 1}}, 1), r(3, 8));
  auto shared = as_marginal_oracle(ProcessSpec::constant_uniform());
  EXPECT_EQ(shared->box_lower({{0, r(1, 2)}, {r(1, 4), 1}}, 1), r(1, 4));
  auto urn = as_marginal_oracle(ProcessSpec::polya(1, 1));
  EXPECT_EQ(algebra_lower(*urn, pattern_box("10"), 1), r(1, 6));
  auto atom = as_marginal_oracle(ProcessSpec::constant_atom(r(1, 3)));
  EXPECT_EQ(atom->box_lower({{r(1, 4), r(1, 2)}, {0, r(1, 2)}}, 1), 1);
  EXPECT_EQ(atom->box_lower({{r(1, 3), r(1, 2)}}, 1), 0);
}

TEST(MarginalOracles, MixtureAveragesComponents) {
  auto mix = as_marginal_oracle(ProcessSpec::bernoulli_mixture({{r(1, 2), r(1, 4)}, {r(1, 2), r(3, 4)}}));
  EXPECT_EQ(algebra_lower(*mix, pattern_box("11"), 1), r(1, 2) * r(1, 16) + r(1, 2) * r(9, 16));
  EXPECT_EQ(algebra_lower(*mix, pattern_box("1"), 1), r(1, 2));
}

TEST(AsMuOracle, UniformOnDiracs) {
  DeFinettiMeasureRepr mu = as_mu_oracle(MeasureSpec::uniform_on_diracs());
  ConstraintMatrix c({{r(9, 10)}});
  EXPECT_EQ(query_upset(mu, {iv(r(1, 4), r(3, 4))}, c, 4), r(1, 2));
  EXPECT_EQ(query_upset(mu, {iv(0, r(1, 3))}, c, 4), r(1, 3));
}

TEST(AsMuOracle, NonIntegerBetaIsServed) {
  DeFinettiMeasureRepr mu = as_mu_oracle(MeasureSpec::beta_bernoulli(r(3, 2), r(5, 2)));
  Rational v = query_upset(mu, {kUpperHalf}, ConstraintMatrix({{r(1, 10)}}), 3);
  EXPECT_GE(v, 0);
  EXPECT_LE(v, 1);
}

TEST(MeasureBoxProbability, Examples) {
  std::optional<Rational> p = measure_box_probability(MeasureSpec::beta_bernoulli(1, 1), {kUpperHalf, kUpperHalf});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, r(1, 3));
  std::optional<Rational> q = measure_box_probability(MeasureSpec::dirac_at_atom(r(1, 2)), {iv(0, 1)});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, 1);
}

TEST(Validate, RejectsBadParameters) {
  EXPECT_THROW(ProcessSpec::polya(0, 1).validate(), std::invalid_argument);
  EXPECT_THROW(ProcessSpec::constant_atom(2).validate(), std::invalid_argument);
  EXPECT_THROW(ProcessSpec::bernoulli_mixture({{r(1, 2), r(1, 2)}}).validate(), std::invalid_argument);
  EXPECT_THROW(ProcessSpec::bernoulli_mixture({{1, r(3, 2)}}).validate(), std::invalid_argument);
  EXPECT_THROW(MeasureSpec::beta_bernoulli(1, -1).validate(), std::invalid_argument);
  EXPECT_NO_THROW(ProcessSpec::bernoulli_mixture({{r(1, 3), 0}, {r(2, 3), 1}}).validate());
}

TEST(Sampler, DeterministicPerSeed) {
  SamplerState a(ProcessSpec::polya(2, 3), 42), b(ProcessSpec::polya(2, 3), 42), c(ProcessSpec::polya(2, 3), 43);
  std::vector<double> xa = sample_sequence(a, 50), xb = sample_sequence(b, 50), xc = sample_sequence(c, 50);
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
}

TEST(Sampler, ValuesInRange) {
  for (const ProcessSpec& spec : {ProcessSpec::iid_uniform(), ProcessSpec::constant_uniform(),
                                  ProcessSpec::constant_atom(r(1, 3)), ProcessSpec::polya(1, 1)}) {
    SamplerState state(spec, 7);
    for (double x : sample_sequence(state, 200)) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
  SamplerState shared(ProcessSpec::constant_uniform(), 9);
  std::vector<double> xs = sample_sequence(shared, 10);
  for (double x : xs) EXPECT_EQ(x, xs[0]);
}

TEST(Sampler, FrequencyStabilizes) {
  SamplerState state(ProcessSpec::polya(1, 1), 123);
  std::vector<double> xs = sample_sequence(state, 100000);
  double ones_half = 0, ones_all = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ones_all += xs[i];
    if (i < 50000) ones_half += xs[i];
  }
  EXPECT_NEAR(ones_half / 50000, ones_all / 100000, 0.01);
  SamplerState iid(ProcessSpec::bernoulli_mixture({{1, r(1, 4)}}), 5);
  double mean = 0;
  for (double x : sample_sequence(iid, 100000)) mean += x;
  EXPECT_NEAR(mean / 100000, 0.25, 0.01);
}

TEST(Sampler, ContinuesAcrossCalls) {
  SamplerState a(ProcessSpec::polya(1, 2), 3), b(ProcessSpec::polya(1, 2), 3);
  std::vector<double> first = sample_sequence(a, 20);
  std::vector<double> rest = sample_sequence(a, 20);
  first.insert(first.end(), rest.begin(), rest.end());
  EXPECT_EQ(first, sample_sequence(b, 40));
}

TEST(Recognizer, PolyaIsBeta) {
  auto urn = as_marginal_oracle(ProcessSpec::polya(r(3, 2), r(5, 2)));
  Recognition rec = recognize_beta_bernoulli(*urn, 6);
  ASSERT_TRUE(rec.measure.has_value());
  EXPECT_EQ(rec.measure->alpha, r(3, 2));
  EXPECT_EQ(rec.measure->beta, r(5, 2));
  EXPECT_EQ(rec.verified_depth, 6u);
}

TEST(Recognizer, FairCoinFailsBetaFitThenIsIid) {
  auto coin = as_marginal_oracle(ProcessSpec::bernoulli_mixture({{1, r(1, 2)}}));
  Recognition rec = recognize_beta_bernoulli(*coin, 6);
  EXPECT_NE(rec.message.find("pattern 11"), std::string::npos) << rec.message;
  ASSERT_TRUE(rec.measure.has_value());
  EXPECT_EQ(rec.measure->kind, MeasureKind::kBernoulliMixture);
  EXPECT_EQ(rec.measure->components, (std::vector<MixtureComponent>{{1, r(1, 2)}}));
}

TEST(Recognizer, TwoPointMixtureHasNoFit) {
  auto mix = as_marginal_oracle(ProcessSpec::bernoulli_mixture({{r(1, 2), r(1, 4)}, {r(1, 2), r(3, 4)}}));
  Recognition rec = recognize_beta_bernoulli(*mix, 6);
  EXPECT_FALSE(rec.measure.has_value());
  EXPECT_NE(rec.message.find("rejected"), std::string::npos);
}

TEST(Transform, ClosedFormsAndFallback) {
  TransformResult urn = transform_process(ProcessSpec::polya(2, 3));
  EXPECT_EQ(urn.status, "closed-form");
  EXPECT_EQ(urn.output.kind, MeasureKind::kBetaBernoulli);
  TransformResult shared = transform_process(ProcessSpec::constant_uniform());
  EXPECT_EQ(shared.output.kind, MeasureKind::kUniformOnDiracs);
  TransformResult iid = transform_process(ProcessSpec::iid_uniform());
  EXPECT_EQ(iid.output.kind, MeasureKind::kDiracAtUniform);
  TransformResult atom = transform_process(ProcessSpec::constant_atom(r(1, 5)));
  EXPECT_EQ(atom.output.kind, MeasureKind::kDiracAtAtom);
  EXPECT_EQ(atom.output.atom, r(1, 5));
  TransformResult mix = transform_process(ProcessSpec::bernoulli_mixture({{r(1, 2), r(1, 4)}, {r(1, 2), r(3, 4)}}));
  EXPECT_EQ(mix.output.kind, MeasureKind::kDefinettiOracle);
  EXPECT_EQ(mix.status, "oracle");
  EXPECT_FALSE(mix.notes.empty());
}

}  // namespace
}  // namespace definetti
