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

// Reals given by fuel-indexed rational bound streams.

#ifndef DEFINETTI_ENUMERABLE_REALS_HPP_
#define DEFINETTI_ENUMERABLE_REALS_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "definetti/numbers.hpp"

namespace definetti {

namespace internal {

// Memoizing wrapper around a pure bound function. Copies share the memo.
class MemoStream {
 public:
  using Bound = std::function<Rational(Fuel)>;

  explicit MemoStream(Bound bound);
  Rational at(Fuel fuel) const;

 private:
  struct State {
    Bound bound;
    std::mutex mu;
    std::map<Fuel, Rational> memo;
  };
  std::shared_ptr<State> state_;
};

}  // namespace internal

// Nondecreasing in fuel; every value is at most the represented real.
class LowerReal {
 public:
  using Bound = internal::MemoStream::Bound;

  LowerReal() : LowerReal(Rational(0)) {}
  explicit LowerReal(Bound bound) : stream_(std::move(bound)) {}
  explicit LowerReal(const Rational& exact);

  Rational bound_at(Fuel fuel) const { return stream_.at(fuel); }

 private:
  internal::MemoStream stream_;
};

// Nonincreasing in fuel; every value is at least the represented real.
class UpperReal {
 public:
  using Bound = internal::MemoStream::Bound;

  UpperReal() : UpperReal(Rational(1)) {}
  explicit UpperReal(Bound bound) : stream_(std::move(bound)) {}
  explicit UpperReal(const Rational& exact);

  Rational bound_at(Fuel fuel) const { return stream_.at(fuel); }

 private:
  internal::MemoStream stream_;
};

struct BracketReal {
  LowerReal lower;
  UpperReal upper;

  static BracketReal exact(const Rational& value) { return {LowerReal(value), UpperReal(value)}; }
};

// Family member i (i >= 1), or nullopt past the end of a finite family.
using LowerFamily = std::function<std::optional<LowerReal>(std::size_t)>;

// bound_at(N) = max over i <= N of family(i).bound_at(N). An empty prefix
// yields the trivial bound `floor`.
LowerReal lower_sup(LowerFamily family, Rational floor = 0);
LowerReal lower_sup(std::vector<LowerReal> members, Rational floor = 0);

struct SignedTerm {
  Rational coefficient;
  // Positive coefficients need a lower stream, negative ones an upper stream.
  std::variant<LowerReal, UpperReal> bound;
};

// Throws std::invalid_argument when a coefficient's sign does not match its
// stream kind.
LowerReal signed_sum(std::vector<SignedTerm> terms);

UpperReal upper_from_complement(const Rational& total, LowerReal lower_of_complement);

// Fixed-fuel arithmetic behind signed_sum: sum of coefficient * bound.
Rational weighted_sum(const std::vector<Rational>& coefficients, const std::vector<Rational>& bounds);

}  // namespace definetti

#endif  // DEFINETTI_ENUMERABLE_REALS_HPP_
