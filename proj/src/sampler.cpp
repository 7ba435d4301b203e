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

// Sequential samplers. Floating point is fine here: samples are only used
// for statistical cross-checks, never for certified bounds.

#include <stdexcept>

#include "definetti/processes.hpp"

namespace definetti {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

// The draws-th output of the generator seeded with seed.
double uniform_at(std::uint64_t seed, std::uint64_t draws) {
  SplitMix64 gen(seed + draws * 0x9e3779b97f4a7c15ULL);
  return gen.uniform();
}

}  // namespace

std::vector<double> sample_sequence(SamplerState& state, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample_sequence: n must be positive");
  const ProcessSpec& p = state.process;
  p.validate();
  if (p.kind == ProcessKind::kTabulated) throw std::invalid_argument("sample_sequence: tabulated processes have no sampler");
  auto draw = [&state]() { return uniform_at(state.seed, state.draws++); };
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = 0;
    switch (p.kind) {
      case ProcessKind::kPolya: {
        double total = static_cast<double>(state.history.size());
        double ones = static_cast<double>(state.ones);
        double chance = (p.alpha.get_d() + ones) / (p.alpha.get_d() + p.beta.get_d() + total);
        x = draw() < chance ? 1 : 0;
        break;
      }
      case ProcessKind::kIidUniform:
        x = draw();
        break;
      case ProcessKind::kConstantUniform:
        if (!state.latent) state.latent = draw();
        x = *state.latent;
        break;
      case ProcessKind::kConstantAtom:
        x = p.atom.get_d();
        break;
      case ProcessKind::kIidBernoulliMixture: {
        if (!state.component) {
          double u = draw();
          double acc = 0;
          std::size_t pick = p.components.size() - 1;
          for (std::size_t c = 0; c < p.components.size(); ++c) {
            acc += p.components[c].weight.get_d();
            if (u < acc) {
              pick = c;
              break;
            }
          }
          state.component = pick;
        }
        x = draw() < p.components[*state.component].p.get_d() ? 1 : 0;
        break;
      }
      case ProcessKind::kTabulated:
        break;
    }
    if (x == 1 && p.binary()) ++state.ones;
    state.history.push_back(x);
    out.push_back(x);
  }
  return out;
}

}  // namespace definetti
