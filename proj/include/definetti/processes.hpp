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

// Built-in exchangeable processes, their mixing measures, a seeded sampler,
// and the rewrite of urn-style processes into their mixing-measure form.
//
// Binary processes take values in {0,1}; a set "sees" the outcome 1 when it
// contains the point 1, and likewise for 0.

#ifndef DEFINETTI_PROCESSES_HPP_
#define DEFINETTI_PROCESSES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "definetti/interval_algebra.hpp"
#include "definetti/measure_oracles.hpp"
#include "definetti/numbers.hpp"

namespace definetti {

struct MixtureComponent {
  Rational weight;
  Rational p;  // probability of a 1

  friend bool operator==(const MixtureComponent& a, const MixtureComponent& b) {
    return a.weight == b.weight && a.p == b.p;
  }
};

enum class ProcessKind { kPolya, kIidUniform, kConstantUniform, kConstantAtom, kIidBernoulliMixture, kTabulated };

struct ProcessSpec {
  ProcessKind kind = ProcessKind::kIidUniform;
  Rational alpha = 1;  // polya
  Rational beta = 1;   // polya
  Rational atom = 0;   // constant_atom
  std::vector<MixtureComponent> components;       // iid_bernoulli_mixture
  std::vector<TabulatedOracle::Entry> entries;    // tabulated
  bool exact = false;                             // tabulated

  static ProcessSpec polya(const Rational& alpha, const Rational& beta);
  static ProcessSpec iid_uniform();
  static ProcessSpec constant_uniform();
  static ProcessSpec constant_atom(const Rational& atom);
  static ProcessSpec bernoulli_mixture(std::vector<MixtureComponent> components);

  // Throws std::invalid_argument when the parameters are out of range.
  void validate() const;
  bool binary() const { return kind == ProcessKind::kPolya || kind == ProcessKind::kIidBernoulliMixture; }
};

std::string process_name(ProcessKind kind);

enum class MeasureKind {
  kBetaBernoulli,
  kDiracAtUniform,
  kUniformOnDiracs,
  kDiracAtAtom,
  kBernoulliMixture,
  kDefinettiOracle,
};

struct MeasureSpec {
  MeasureKind kind = MeasureKind::kDiracAtUniform;
  Rational alpha = 1;  // beta_bernoulli
  Rational beta = 1;   // beta_bernoulli
  Rational atom = 0;   // dirac_at_atom
  std::vector<MixtureComponent> components;    // bernoulli_mixture
  std::shared_ptr<const ProcessSpec> process;  // definetti_oracle

  static MeasureSpec beta_bernoulli(const Rational& alpha, const Rational& beta);
  static MeasureSpec dirac_at_uniform();
  static MeasureSpec uniform_on_diracs();
  static MeasureSpec dirac_at_atom(const Rational& atom);
  static MeasureSpec bernoulli_mixture(std::vector<MixtureComponent> components);
  static MeasureSpec definetti_oracle(ProcessSpec process);

  void validate() const;
};

std::string measure_name(MeasureKind kind);

// Pr(X_1 = x_1, ..., X_n = x_n) for the urn with initial weights alpha (ones)
// and beta (zeros), as a ratio of rising factorials. pattern holds '0'/'1'.
Rational polya_marginal(const Rational& alpha, const Rational& beta, const std::string& pattern);

// prod_{i<n} (x + i).
Rational rising(const Rational& x, unsigned long n);

std::shared_ptr<const MarginalOracle> as_marginal_oracle(const ProcessSpec& spec);
// Non-integer beta_bernoulli laws are served by the transform-backed oracle
// of polya(alpha, beta).
DeFinettiMeasureRepr as_mu_oracle(const MeasureSpec& spec);

// E prod_j V_{sigma[j]} in closed form; nullopt for definetti_oracle.
std::optional<Rational> measure_box_probability(const MeasureSpec& spec, const SetTuple& sigma);

// The box of a binary pattern: (1/2,1] for '1' and [0,1/2) for '0'.
SetTuple pattern_box(const std::string& pattern);

struct Recognition {
  std::optional<MeasureSpec> measure;
  unsigned verified_depth = 0;
  std::string message;  // why the Beta fit failed, when it did
};

// Fits a Beta mixing law to Pr(1) and Pr(11) and checks every pattern up to
// `depth` exactly. Falls back to an i.i.d. Bernoulli law, then gives up.
Recognition recognize_beta_bernoulli(const MarginalOracle& oracle, unsigned depth);

struct TransformResult {
  ProcessSpec input;
  MeasureSpec output;
  unsigned verified_depth = 0;
  std::string status;  // "closed-form" or "oracle"
  std::vector<std::string> notes;
};

// Rewrites a process into its mixing measure: a closed form when one is
// recognized and verified, otherwise the oracle built from the process.
TransformResult transform_process(const ProcessSpec& spec, unsigned depth = 8);

// SplitMix64 over a 64-bit counter.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform on [0,1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

struct SamplerState {
  ProcessSpec process;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;           // generator outputs consumed
  std::vector<double> history;
  std::uint64_t ones = 0;            // binary processes: number of 1s drawn
  std::optional<double> latent;      // constant_uniform: the shared value
  std::optional<std::size_t> component;  // mixtures: the chosen component

  SamplerState(ProcessSpec p, std::uint64_t s) : process(std::move(p)), seed(s) {}
};

// Extends the history by n draws. Throws std::invalid_argument for n == 0
// or for tabulated processes.
std::vector<double> sample_sequence(SamplerState& state, std::size_t n);

}  // namespace definetti

#endif  // DEFINETTI_PROCESSES_HPP_
