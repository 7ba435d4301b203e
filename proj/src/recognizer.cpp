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

#include <functional>
#include <stdexcept>

#include "definetti/processes.hpp"

namespace definetti {

namespace {

Rational pattern_probability(const MarginalOracle& oracle, const std::string& pattern) {
  return oracle.event_lower(to_event(pattern_box(pattern)), 1);
}

// First pattern of length <= depth (shortest first, then lexicographic)
// whose probability differs from `expected`; empty when all agree.
std::optional<std::string> first_mismatch(const MarginalOracle& oracle, unsigned depth,
                                          const std::function<Rational(const std::string&)>& expected) {
  for (unsigned len = 1; len <= depth; ++len) {
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string pattern;
      for (unsigned i = 0; i < len; ++i) pattern += (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      if (pattern_probability(oracle, pattern) != expected(pattern)) return pattern;
    }
  }
  return std::nullopt;
}

Rational bernoulli_pattern(const Rational& p, const std::string& pattern) {
  Rational out = 1;
  for (char c : pattern) out *= c == '1' ? p : 1 - p;
  return out;
}

}  // namespace

Recognition recognize_beta_bernoulli(const MarginalOracle& oracle, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("recognize_beta_bernoulli: depth must be positive");
  Recognition out;
  Rational p1 = pattern_probability(oracle, "1");
  if (p1 == 0 || p1 == 1) {
    out.message = "Pr(1) = " + to_fraction_string(p1) + ": degenerate, no Beta fit";
  } else {
    Rational r = pattern_probability(oracle, "11") / p1;
    if (r <= p1) {
      out.message = "beta fit rejected at pattern 11: Pr(11)/Pr(1) = " + to_fraction_string(r) +
                    " does not exceed Pr(1) = " + to_fraction_string(p1);
    } else {
      Rational s = (1 - r) / (r - p1);
      Rational alpha = p1 * s;
      Rational beta = s - alpha;
      std::optional<std::string> bad = first_mismatch(
          oracle, depth, [&](const std::string& pattern) { return polya_marginal(alpha, beta, pattern); });
      if (!bad) {
        out.measure = MeasureSpec::beta_bernoulli(alpha, beta);
        out.verified_depth = depth;
        return out;
      }
      out.message = "beta fit (alpha = " + to_fraction_string(alpha) + ", beta = " + to_fraction_string(beta) +
                    ") rejected at pattern " + *bad;
    }
  }
  std::optional<std::string> bad =
      first_mismatch(oracle, depth, [&](const std::string& pattern) { return bernoulli_pattern(p1, pattern); });
  if (!bad) {
    out.measure = p1 == 0 || p1 == 1 ? MeasureSpec::dirac_at_atom(p1)
                                     : MeasureSpec::bernoulli_mixture({MixtureComponent{1, p1}});
    out.verified_depth = depth;
    return out;
  }
  out.message += "; i.i.d. fit rejected at pattern " + *bad;
  return out;
}

namespace {

// Boxes used to check real-valued rewrites: every tuple of up to three
// coordinates drawn from a fixed list of intervals.
std::vector<SetTuple> check_boxes() {
  std::vector<OpenIntervalSet> pool = {
      OpenIntervalSet::interval(0, Rational(1, 2)),          OpenIntervalSet::interval(Rational(1, 4), Rational(3, 4)),
      OpenIntervalSet::interval(Rational(1, 3), kHighSentinel), OpenIntervalSet::interval(kLowSentinel, Rational(1, 5)),
      OpenIntervalSet::interval(Rational(1, 2), kHighSentinel),
  };
  std::vector<SetTuple> out;
  std::vector<SetTuple> layer{{}};
  for (unsigned depth = 1; depth <= 3; ++depth) {
    std::vector<SetTuple> next;
    for (const SetTuple& t : layer) {
      for (const OpenIntervalSet& s : pool) {
        SetTuple wider = t;
        wider.push_back(s);
        next.push_back(wider);
        out.push_back(std::move(wider));
      }
    }
    layer = std::move(next);
  }
  return out;
}

constexpr unsigned kBoxCheckDepth = 3;

bool boxes_agree(const MarginalOracle& oracle, const MeasureSpec& measure, std::string* failure) {
  for (const SetTuple& box : check_boxes()) {
    Rational want = oracle.event_lower(to_event(box), 1);
    std::optional<Rational> got = measure_box_probability(measure, box);
    if (!got || *got != want) {
      *failure = "box " + to_string(box) + ": process " + to_fraction_string(want) + ", measure " +
                 (got ? to_fraction_string(*got) : std::string("n/a"));
      return false;
    }
  }
  return true;
}

}  // namespace

TransformResult transform_process(const ProcessSpec& spec, unsigned depth) {
  spec.validate();
  TransformResult out;
  out.input = spec;
  std::shared_ptr<const MarginalOracle> oracle = as_marginal_oracle(spec);
  std::optional<MeasureSpec> candidate;
  switch (spec.kind) {
    case ProcessKind::kPolya:
    case ProcessKind::kIidBernoulliMixture: {
      Recognition r = recognize_beta_bernoulli(*oracle, depth);
      if (!r.message.empty()) out.notes.push_back(r.message);
      if (r.measure) {
        out.output = *r.measure;
        out.verified_depth = r.verified_depth;
        out.status = "closed-form";
        return out;
      }
      break;
    }
    case ProcessKind::kIidUniform:
      candidate = MeasureSpec::dirac_at_uniform();
      break;
    case ProcessKind::kConstantUniform:
      candidate = MeasureSpec::uniform_on_diracs();
      break;
    case ProcessKind::kConstantAtom:
      candidate = MeasureSpec::dirac_at_atom(spec.atom);
      break;
    case ProcessKind::kTabulated:
      out.notes.push_back("tabulated process: no closed form attempted");
      break;
  }
  if (candidate) {
    std::string failure;
    if (boxes_agree(*oracle, *candidate, &failure)) {
      out.output = *candidate;
      out.verified_depth = kBoxCheckDepth;
      out.status = "closed-form";
      return out;
    }
    out.notes.push_back("closed form rejected at " + failure);
  }
  out.output = MeasureSpec::definetti_oracle(spec);
  out.verified_depth = 0;
  out.status = "oracle";
  return out;
}

}  // namespace definetti
