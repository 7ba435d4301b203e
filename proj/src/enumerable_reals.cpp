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

#include <stdexcept>

namespace definetti {

namespace internal {

MemoStream::MemoStream(Bound bound) : state_(std::make_shared<State>()) {
  state_->bound = std::move(bound);
}

Rational MemoStream::at(Fuel fuel) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(fuel);
    if (it != state_->memo.end()) return it->second;
  }
  // Computed outside the lock so nested streams can evaluate concurrently;
  // a racing duplicate computes the same value.
  Rational value = state_->bound(fuel);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->memo.emplace(fuel, std::move(value)).first->second;
}

}  // namespace internal

LowerReal::LowerReal(const Rational& exact) : stream_([exact](Fuel) { return exact; }) {}

UpperReal::UpperReal(const Rational& exact) : stream_([exact](Fuel) { return exact; }) {}

LowerReal lower_sup(LowerFamily family, Rational floor) {
  struct Members {
    LowerFamily family;
    std::mutex mu;
    std::vector<LowerReal> known;
    bool finished = false;
  };
  auto members = std::make_shared<Members>();
  members->family = std::move(family);
  return LowerReal([members, floor](Fuel fuel) {
    std::vector<LowerReal> prefix;
    {
      std::lock_guard<std::mutex> lock(members->mu);
      while (!members->finished && members->known.size() < fuel) {
        std::optional<LowerReal> next = members->family(members->known.size() + 1);
        if (!next) {
          members->finished = true;
        } else {
          members->known.push_back(std::move(*next));
        }
      }
      std::size_t count = std::min<std::size_t>(fuel, members->known.size());
      prefix.assign(members->known.begin(), members->known.begin() + count);
    }
    Rational best = floor;
    for (const LowerReal& member : prefix) {
      Rational v = member.bound_at(fuel);
      if (v > best) best = v;
    }
    return best;
  });
}

LowerReal lower_sup(std::vector<LowerReal> members, Rational floor) {
  auto shared = std::make_shared<std::vector<LowerReal>>(std::move(members));
  return lower_sup(
      [shared](std::size_t i) -> std::optional<LowerReal> {
        if (i > shared->size()) return std::nullopt;
        return (*shared)[i - 1];
      },
      std::move(floor));
}

LowerReal signed_sum(std::vector<SignedTerm> terms) {
  for (const SignedTerm& t : terms) {
    if (t.coefficient > 0 && !std::holds_alternative<LowerReal>(t.bound)) {
      throw std::invalid_argument("signed_sum: positive coefficient paired with an upper stream");
    }
    if (t.coefficient < 0 && !std::holds_alternative<UpperReal>(t.bound)) {
      throw std::invalid_argument("signed_sum: negative coefficient paired with a lower stream");
    }
  }
  auto shared = std::make_shared<std::vector<SignedTerm>>(std::move(terms));
  return LowerReal([shared](Fuel fuel) {
    std::vector<Rational> coefficients;
    std::vector<Rational> bounds;
    for (const SignedTerm& t : *shared) {
      if (t.coefficient == 0) continue;
      coefficients.push_back(t.coefficient);
      bounds.push_back(std::visit([fuel](const auto& s) { return s.bound_at(fuel); }, t.bound));
    }
    return weighted_sum(coefficients, bounds);
  });
}

UpperReal upper_from_complement(const Rational& total, LowerReal lower_of_complement) {
  return UpperReal([total, lower_of_complement](Fuel fuel) -> Rational {
    return total - lower_of_complement.bound_at(fuel);
  });
}

Rational weighted_sum(const std::vector<Rational>& coefficients, const std::vector<Rational>& bounds) {
  if (coefficients.size() != bounds.size()) throw std::invalid_argument("weighted_sum: length mismatch");
  std::vector<Rational> products;
  products.reserve(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0 || bounds[i] == 0) continue;
    products.push_back(coefficients[i] * bounds[i]);
  }
  return exact_sum(std::move(products));
}

}  // namespace definetti
