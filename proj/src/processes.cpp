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

#include <stdexcept>

#include "definetti/definetti_core.hpp"

namespace definetti {

ProcessSpec ProcessSpec::polya(const Rational& alpha, const Rational& beta) {
  ProcessSpec s;
  s.kind = ProcessKind::kPolya;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

ProcessSpec ProcessSpec::iid_uniform() {
  ProcessSpec s;
  s.kind = ProcessKind::kIidUniform;
  return s;
}

ProcessSpec ProcessSpec::constant_uniform() {
  ProcessSpec s;
  s.kind = ProcessKind::kConstantUniform;
  return s;
}

ProcessSpec ProcessSpec::constant_atom(const Rational& atom) {
  ProcessSpec s;
  s.kind = ProcessKind::kConstantAtom;
  s.atom = atom;
  return s;
}

ProcessSpec ProcessSpec::bernoulli_mixture(std::vector<MixtureComponent> components) {
  ProcessSpec s;
  s.kind = ProcessKind::kIidBernoulliMixture;
  s.components = std::move(components);
  return s;
}

namespace {

void validate_mixture(const std::vector<MixtureComponent>& components) {
  if (components.empty()) throw std::invalid_argument("mixture: no components");
  Rational total = 0;
  for (const MixtureComponent& c : components) {
    if (c.weight <= 0) throw std::invalid_argument("mixture: weights must be positive");
    if (c.p < 0 || c.p > 1) throw std::invalid_argument("mixture: p must lie in [0,1]");
    total += c.weight;
  }
  if (total != 1) throw std::invalid_argument("mixture: weights must sum to 1");
}

}  // namespace

void ProcessSpec::validate() const {
  switch (kind) {
    case ProcessKind::kPolya:
      if (alpha <= 0 || beta <= 0) throw std::invalid_argument("polya: alpha and beta must be positive");
      break;
    case ProcessKind::kConstantAtom:
      if (atom < 0 || atom > 1) throw std::invalid_argument("constant_atom: atom must lie in [0,1]");
      break;
    case ProcessKind::kIidBernoulliMixture:
      validate_mixture(components);
      break;
    case ProcessKind::kTabulated:
      TabulatedOracle(entries, exact);
      break;
    case ProcessKind::kIidUniform:
    case ProcessKind::kConstantUniform:
      break;
  }
}

std::string process_name(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::kPolya:
      return "polya";
    case ProcessKind::kIidUniform:
      return "iid_uniform";
    case ProcessKind::kConstantUniform:
      return "constant_uniform";
    case ProcessKind::kConstantAtom:
      return "constant_atom";
    case ProcessKind::kIidBernoulliMixture:
      return "iid_bernoulli_mixture";
    case ProcessKind::kTabulated:
      return "tabulated";
  }
  return "";
}

MeasureSpec MeasureSpec::beta_bernoulli(const Rational& alpha, const Rational& beta) {
  MeasureSpec s;
  s.kind = MeasureKind::kBetaBernoulli;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

MeasureSpec MeasureSpec::dirac_at_uniform() {
  MeasureSpec s;
  s.kind = MeasureKind::kDiracAtUniform;
  return s;
}

MeasureSpec MeasureSpec::uniform_on_diracs() {
  MeasureSpec s;
  s.kind = MeasureKind::kUniformOnDiracs;
  return s;
}

MeasureSpec MeasureSpec::dirac_at_atom(const Rational& atom) {
  MeasureSpec s;
  s.kind = MeasureKind::kDiracAtAtom;
  s.atom = atom;
  return s;
}

MeasureSpec MeasureSpec::bernoulli_mixture(std::vector<MixtureComponent> components) {
  MeasureSpec s;
  s.kind = MeasureKind::kBernoulliMixture;
  s.components = std::move(components);
  return s;
}

MeasureSpec MeasureSpec::definetti_oracle(ProcessSpec process) {
  MeasureSpec s;
  s.kind = MeasureKind::kDefinettiOracle;
  s.process = std::make_shared<const ProcessSpec>(std::move(process));
  return s;
}

void MeasureSpec::validate() const {
  switch (kind) {
    case MeasureKind::kBetaBernoulli:
      if (alpha <= 0 || beta <= 0) throw std::invalid_argument("beta_bernoulli: alpha and beta must be positive");
      break;
    case MeasureKind::kDiracAtAtom:
      if (atom < 0 || atom > 1) throw std::invalid_argument("dirac_at_atom: atom must lie in [0,1]");
      break;
    case MeasureKind::kBernoulliMixture:
      validate_mixture(components);
      break;
    case MeasureKind::kDefinettiOracle:
      if (!process) throw std::invalid_argument("definetti_oracle: missing process");
      process->validate();
      break;
    case MeasureKind::kDiracAtUniform:
    case MeasureKind::kUniformOnDiracs:
      break;
  }
}

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kBetaBernoulli:
      return "beta_bernoulli";
    case MeasureKind::kDiracAtUniform:
      return "dirac_at_uniform";
    case MeasureKind::kUniformOnDiracs:
      return "uniform_on_diracs";
    case MeasureKind::kDiracAtAtom:
      return "dirac_at_atom";
    case MeasureKind::kBernoulliMixture:
      return "bernoulli_mixture";
    case MeasureKind::kDefinettiOracle:
      return "definetti_oracle";
  }
  return "";
}

Rational rising(const Rational& x, unsigned long n) {
  Rational out = 1;
  for (unsigned long i = 0; i < n; ++i) out *= x + i;
  return out;
}

Rational polya_marginal(const Rational& alpha, const Rational& beta, const std::string& pattern) {
  unsigned long ones = 0;
  for (char c : pattern) {
    if (c == '1') {
      ++ones;
    } else if (c != '0') {
      throw std::invalid_argument("polya_marginal: pattern must consist of '0' and '1'");
    }
  }
  unsigned long n = pattern.size();
  return rising(alpha, ones) * rising(beta, n - ones) / rising(alpha + beta, n);
}

SetTuple pattern_box(const std::string& pattern) {
  SetTuple box;
  for (char c : pattern) {
    box.push_back(c == '1' ? OpenIntervalSet::interval(Rational(1, 2), kHighSentinel)
                           : OpenIntervalSet::interval(kLowSentinel, Rational(1, 2)));
  }
  return box;
}

namespace {

// A product event over a binary process reduces to "a coordinates equal 1
// and b coordinates equal 0", or to the empty event.
struct BinaryCounts {
  bool impossible = false;
  unsigned long ones = 0;
  unsigned long zeros = 0;
};

enum class BinaryClass { kBoth, kOnes, kZeros, kNone };

BinaryClass classify(const OpenIntervalSet& s) {
  bool one = s.contains(1);
  bool zero = s.contains(0);
  if (one && zero) return BinaryClass::kBoth;
  if (one) return BinaryClass::kOnes;
  if (zero) return BinaryClass::kZeros;
  return BinaryClass::kNone;
}

BinaryCounts count_binary(const ProductEvent& event) {
  BinaryCounts out;
  for (const Factor& f : event) {
    if (f.count == 0) continue;
    switch (classify(f.set)) {
      case BinaryClass::kBoth:
        break;
      case BinaryClass::kOnes:
        out.ones += f.count;
        break;
      case BinaryClass::kZeros:
        out.zeros += f.count;
        break;
      case BinaryClass::kNone:
        out.impossible = true;
        break;
    }
  }
  return out;
}

ProductEvent box_event(const std::vector<Interval>& box) {
  ProductEvent event;
  for (const Interval& iv : box) event.push_back({OpenIntervalSet::interval(iv.lo, iv.hi), 1});
  return event;
}

Rational power(const Rational& x, unsigned long e) {
  Rational out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= x;
  return out;
}

// Mixtures of i.i.d. Bernoulli laws: E theta^a (1 - theta)^b.
class BinaryOracle : public MarginalOracle {
 public:
  Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const override {
    return event_lower(box_event(box), fuel);
  }
  bool exact() const override { return true; }
  Rational event_lower(const ProductEvent& event, Fuel) const override {
    BinaryCounts c = count_binary(event);
    return c.impossible ? Rational(0) : weight(c.ones, c.zeros);
  }
  std::vector<Rational> power_lower(const OpenIntervalSet& set, const ProductEvent& tail, std::size_t max_power,
                                    Fuel) const override {
    std::vector<Rational> out(max_power + 1, Rational(0));
    BinaryCounts c = count_binary(tail);
    if (c.impossible) return out;
    switch (classify(set)) {
      case BinaryClass::kBoth:
        out.assign(max_power + 1, weight(c.ones, c.zeros));
        break;
      case BinaryClass::kNone:
        out[0] = weight(c.ones, c.zeros);
        break;
      case BinaryClass::kOnes:
        sequence(c.ones, c.zeros, true, out);
        break;
      case BinaryClass::kZeros:
        sequence(c.ones, c.zeros, false, out);
        break;
    }
    return out;
  }

 protected:
  virtual Rational weight(unsigned long ones, unsigned long zeros) const = 0;
  // out[j] = weight with j extra ones (or zeros).
  virtual void sequence(unsigned long ones, unsigned long zeros, bool add_ones, std::vector<Rational>& out) const = 0;
};

class PolyaOracle : public BinaryOracle {
 public:
  PolyaOracle(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

 protected:
  Rational weight(unsigned long ones, unsigned long zeros) const override {
    return rising(alpha_, ones) * rising(beta_, zeros) / rising(alpha_ + beta_, ones + zeros);
  }
  void sequence(unsigned long ones, unsigned long zeros, bool add_ones, std::vector<Rational>& out) const override {
    Rational v = weight(ones, zeros);
    Rational base = (add_ones ? alpha_ + ones : beta_ + zeros);
    Rational total = alpha_ + beta_ + ones + zeros;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = v;
      v *= (base + j) / (total + j);
    }
  }

 private:
  Rational alpha_, beta_;
};

class MixtureOracle : public BinaryOracle {
 public:
  explicit MixtureOracle(std::vector<MixtureComponent> components) : components_(std::move(components)) {}

 protected:
  Rational weight(unsigned long ones, unsigned long zeros) const override {
    Rational total = 0;
    for (const MixtureComponent& c : components_) total += c.weight * power(c.p, ones) * power(1 - c.p, zeros);
    return total;
  }
  void sequence(unsigned long ones, unsigned long zeros, bool add_ones, std::vector<Rational>& out) const override {
    std::fill(out.begin(), out.end(), Rational(0));
    for (const MixtureComponent& c : components_) {
      Rational v = c.weight * power(c.p, ones) * power(1 - c.p, zeros);
      Rational step = add_ones ? c.p : 1 - c.p;
      for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] += v;
        v *= step;
      }
    }
  }

 private:
  std::vector<MixtureComponent> components_;
};

class IidUniformOracle : public MarginalOracle {
 public:
  Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const override {
    return event_lower(box_event(box), fuel);
  }
  bool exact() const override { return true; }
  Rational event_lower(const ProductEvent& event, Fuel) const override {
    Rational out = 1;
    for (const Factor& f : event) out *= power(f.set.length(), f.count);
    return out;
  }
  std::vector<Rational> power_lower(const OpenIntervalSet& set, const ProductEvent& tail, std::size_t max_power,
                                    Fuel fuel) const override {
    std::vector<Rational> out;
    out.reserve(max_power + 1);
    Rational v = event_lower(tail, fuel);
    Rational len = set.length();
    for (std::size_t j = 0; j <= max_power; ++j) {
      out.push_back(v);
      v *= len;
    }
    return out;
  }
};

class ConstantUniformOracle : public MarginalOracle {
 public:
  Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const override {
    return event_lower(box_event(box), fuel);
  }
  bool exact() const override { return true; }
  Rational event_lower(const ProductEvent& event, Fuel) const override {
    OpenIntervalSet common = OpenIntervalSet::full();
    for (const Factor& f : event) {
      if (f.count > 0) common = common.intersect(f.set);
    }
    return common.length();
  }
  std::vector<Rational> power_lower(const OpenIntervalSet& set, const ProductEvent& tail, std::size_t max_power,
                                    Fuel fuel) const override {
    Rational base = event_lower(tail, fuel);
    ProductEvent more = tail;
    more.push_back({set, 1});
    std::vector<Rational> out(max_power + 1, event_lower(more, fuel));
    out[0] = base;
    return out;
  }
};

class ConstantAtomOracle : public MarginalOracle {
 public:
  explicit ConstantAtomOracle(Rational atom) : atom_(std::move(atom)) {}
  Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const override {
    return event_lower(box_event(box), fuel);
  }
  bool exact() const override { return true; }
  Rational event_lower(const ProductEvent& event, Fuel) const override {
    for (const Factor& f : event) {
      if (f.count > 0 && !f.set.contains(atom_)) return 0;
    }
    return 1;
  }
  std::vector<Rational> power_lower(const OpenIntervalSet& set, const ProductEvent& tail, std::size_t max_power,
                                    Fuel fuel) const override {
    Rational base = event_lower(tail, fuel);
    std::vector<Rational> out(max_power + 1, set.contains(atom_) ? base : Rational(0));
    out[0] = base;
    return out;
  }

 private:
  Rational atom_;
};

// Beta(alpha, beta) CDF for positive integer parameters.
Rational beta_cdf(unsigned long alpha, unsigned long beta, const Rational& x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  unsigned long n = alpha + beta - 1;
  Rational total = 0;
  for (unsigned long j = alpha; j <= n; ++j) total += Rational(binomial(n, j)) * power(x, j) * power(1 - x, n - j);
  return total;
}

// V_tau = theta [1 in tau] + (1 - theta) [0 in tau] with theta ~ Beta.
class BetaBernoulliMu : public RightOrderOracle {
 public:
  BetaBernoulliMu(unsigned long alpha, unsigned long beta) : alpha_(alpha), beta_(beta) {}

  Rational upset_lower(const ConstraintMatrix& c, const SetTuple& labels, Fuel) const override {
    std::vector<Interval> pieces;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      Rational lo = kLowSentinel, hi = kHighSentinel;
      bool possible = true;
      for (std::size_t j = 0; j < c.cols() && possible; ++j) {
        const Rational& t = c.at(i, j);
        switch (classify(labels[j])) {
          case BinaryClass::kBoth:
            possible = t < 1;
            break;
          case BinaryClass::kNone:
            possible = t < 0;
            break;
          case BinaryClass::kOnes:
            if (t >= 1) possible = false;
            lo = max_of(lo, t);
            break;
          case BinaryClass::kZeros:
            if (t >= 1) possible = false;
            hi = min_of(hi, 1 - t);
            break;
        }
      }
      if (possible) pieces.push_back({lo, hi});
    }
    Rational total = 0;
    OpenIntervalSet thetas = normalize(std::move(pieces));
    for (const Interval& iv : thetas.intervals()) {
      total += beta_cdf(alpha_, beta_, iv.closure_hi()) - beta_cdf(alpha_, beta_, iv.closure_lo());
    }
    return total;
  }

 private:
  unsigned long alpha_, beta_;
};

class DiracAtUniformMu : public RightOrderOracle {
 public:
  Rational upset_lower(const ConstraintMatrix& c, const SetTuple& labels, Fuel) const override {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      bool holds = true;
      for (std::size_t j = 0; j < c.cols() && holds; ++j) holds = labels[j].length() > c.at(i, j);
      if (holds) return 1;
    }
    return 0;
  }
};

class UniformOnDiracsMu : public RightOrderOracle {
 public:
  Rational upset_lower(const ConstraintMatrix& c, const SetTuple& labels, Fuel) const override {
    OpenIntervalSet hit;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      OpenIntervalSet where = OpenIntervalSet::full();
      bool possible = true;
      for (std::size_t j = 0; j < c.cols() && possible; ++j) {
        const Rational& t = c.at(i, j);
        if (t >= 1) {
          possible = false;
        } else if (t >= 0) {
          where = where.intersect(labels[j]);
        }
      }
      if (possible) hit = hit.unite(where);
    }
    return hit.length();
  }
};

class DiracAtAtomMu : public RightOrderOracle {
 public:
  explicit DiracAtAtomMu(Rational atom) : atom_(std::move(atom)) {}
  Rational upset_lower(const ConstraintMatrix& c, const SetTuple& labels, Fuel) const override {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      bool holds = true;
      for (std::size_t j = 0; j < c.cols() && holds; ++j) {
        Rational v = labels[j].contains(atom_) ? 1 : 0;
        holds = v > c.at(i, j);
      }
      if (holds) return 1;
    }
    return 0;
  }

 private:
  Rational atom_;
};

class BernoulliMixtureMu : public RightOrderOracle {
 public:
  explicit BernoulliMixtureMu(std::vector<MixtureComponent> components) : components_(std::move(components)) {}
  Rational upset_lower(const ConstraintMatrix& c, const SetTuple& labels, Fuel) const override {
    Rational total = 0;
    for (const MixtureComponent& comp : components_) {
      bool any = false;
      for (std::size_t i = 0; i < c.rows() && !any; ++i) {
        bool holds = true;
        for (std::size_t j = 0; j < c.cols() && holds; ++j) {
          Rational v = 0;
          if (labels[j].contains(1)) v += comp.p;
          if (labels[j].contains(0)) v += 1 - comp.p;
          holds = v > c.at(i, j);
        }
        any = holds;
      }
      if (any) total += comp.weight;
    }
    return total;
  }

 private:
  std::vector<MixtureComponent> components_;
};

bool positive_integer(const Rational& r) { return r.get_den() == 1 && r > 0 && r.get_num().fits_ulong_p(); }

}  // namespace

std::shared_ptr<const MarginalOracle> as_marginal_oracle(const ProcessSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ProcessKind::kPolya:
      return std::make_shared<PolyaOracle>(spec.alpha, spec.beta);
    case ProcessKind::kIidUniform:
      return std::make_shared<IidUniformOracle>();
    case ProcessKind::kConstantUniform:
      return std::make_shared<ConstantUniformOracle>();
    case ProcessKind::kConstantAtom:
      return std::make_shared<ConstantAtomOracle>(spec.atom);
    case ProcessKind::kIidBernoulliMixture:
      return std::make_shared<MixtureOracle>(spec.components);
    case ProcessKind::kTabulated:
      return std::make_shared<TabulatedOracle>(spec.entries, spec.exact);
  }
  throw std::invalid_argument("unknown process kind");
}

DeFinettiMeasureRepr as_mu_oracle(const MeasureSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case MeasureKind::kBetaBernoulli:
      // The closed-form cdf needs integer parameters; otherwise go through
      // the urn with the same exchangeable law.
      if (!positive_integer(spec.alpha) || !positive_integer(spec.beta)) {
        return DeFinettiMeasureRepr(
            std::make_shared<TransformOracle>(as_marginal_oracle(ProcessSpec::polya(spec.alpha, spec.beta))));
      }
      return DeFinettiMeasureRepr(
          std::make_shared<BetaBernoulliMu>(spec.alpha.get_num().get_ui(), spec.beta.get_num().get_ui()));
    case MeasureKind::kDiracAtUniform:
      return DeFinettiMeasureRepr(std::make_shared<DiracAtUniformMu>());
    case MeasureKind::kUniformOnDiracs:
      return DeFinettiMeasureRepr(std::make_shared<UniformOnDiracsMu>());
    case MeasureKind::kDiracAtAtom:
      return DeFinettiMeasureRepr(std::make_shared<DiracAtAtomMu>(spec.atom));
    case MeasureKind::kBernoulliMixture:
      return DeFinettiMeasureRepr(std::make_shared<BernoulliMixtureMu>(spec.components));
    case MeasureKind::kDefinettiOracle:
      return DeFinettiMeasureRepr(std::make_shared<TransformOracle>(as_marginal_oracle(*spec.process)));
  }
  throw std::invalid_argument("unknown measure kind");
}

std::optional<Rational> measure_box_probability(const MeasureSpec& spec, const SetTuple& sigma) {
  ProductEvent event = to_event(sigma);
  switch (spec.kind) {
    case MeasureKind::kBetaBernoulli:
      return PolyaOracle(spec.alpha, spec.beta).event_lower(event, 1);
    case MeasureKind::kDiracAtUniform:
      return IidUniformOracle().event_lower(event, 1);
    case MeasureKind::kUniformOnDiracs:
      return ConstantUniformOracle().event_lower(event, 1);
    case MeasureKind::kDiracAtAtom:
      return ConstantAtomOracle(spec.atom).event_lower(event, 1);
    case MeasureKind::kBernoulliMixture:
      return MixtureOracle(spec.components).event_lower(event, 1);
    case MeasureKind::kDefinettiOracle:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace definetti
