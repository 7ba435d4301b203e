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

// From the law of an exchangeable sequence to its mixing measure and back.
//
// A mixing-measure query asks for Pr(U_i cap_j {V_{pi_j} > c_ij}), where
// V_tau is the directing random measure evaluated on tau. Lower bounds are
// E q_{n,C}(V_sigma, V_closure(sigma)) over refinements sigma of pi, with
// q_{n,C}(x, y) = p_plus(x) - p_minus(y) and p = p_plus - p_minus the
// polynomial lying under the indicator of the up-set of C.

#ifndef DEFINETTI_DEFINETTI_CORE_HPP_
#define DEFINETTI_DEFINETTI_CORE_HPP_

#include <cstddef>
#include <memory>
#include <optional>

#include "definetti/enumerable_reals.hpp"
#include "definetti/interval_algebra.hpp"
#include "definetti/measure_oracles.hpp"
#include "definetti/moments.hpp"
#include "definetti/numbers.hpp"

namespace definetti {

struct DeFinettiQuery {
  SetTuple pi;
  ConstraintMatrix c;
};

struct ContinuityAssumption {
  bool flag = false;
};

struct EngineOptions {
  // (n, sigma) pairs whose polynomial has more monomials are skipped.
  std::size_t max_monomials = 300'000;
};

// A query reduced with the trivial facts about V: rows that cannot hold are
// dropped, columns that every row satisfies are removed.
struct ReducedQuery {
  UpsetSimplification::Kind kind = UpsetSimplification::Kind::kReduced;
  DeFinettiQuery query;
};
ReducedQuery reduce_query(const DeFinettiQuery& q);

enum class ClosurePricing {
  kClosed,  // negative part priced on the closures (the sound choice)
  kOpen,    // negative part priced on sigma itself, from its lower moments
};

// E q_{n,C}(V_sigma, V_closure(sigma)) priced from below at one (n, sigma).
// kOpen is not a lower bound in general; it exists to compare the two
// pricings on continuity sets.
MomentPricing q_pricing(const MarginalOracle& chi, const SetTuple& sigma, const ConstraintMatrix& c, unsigned n,
                        Fuel fuel, ClosurePricing mode = ClosurePricing::kClosed,
                        std::size_t max_terms = BernsteinApprox::kDefaultMaxTerms);

// max over 2 <= n <= fuel and sigma in enumerate_refinements(pi, fuel) of
// q_pricing, clamped to [0,1].
Rational definetti_lower(const MarginalOracle& chi, const DeFinettiQuery& q, Fuel fuel, EngineOptions options = {});
LowerReal definetti_lower_stream(std::shared_ptr<const MarginalOracle> chi, DeFinettiQuery q,
                                 EngineOptions options = {});

// Two-sided bounds for mixing measures that are a.s. continuous. Throws
// std::invalid_argument unless assume.flag is set.
Bracket definetti_bracket(const MarginalOracle& chi, const DeFinettiQuery& q, ContinuityAssumption assume, Fuel fuel,
                          EngineOptions options = {});

// The open down-set cap_i U_j {x_j < c_ij} as a union of boxes.
BoxUnion open_down_set(const ConstraintMatrix& c);

// Lower bound on Pr(X_j in sigma[j] for all j) = E prod V_{sigma[j]}, from
// layer-cake sums of up-set queries on the mixing measure.
Rational chi_from_mu(const DeFinettiMeasureRepr& mu, const SetTuple& sigma, Fuel fuel);

// Minimal vectors c in {1/N, ..., (N-1)/N}^k with prod c >= level (the row
// set of the up-set queries above).
std::vector<std::vector<Rational>> product_threshold_rows(std::size_t k, unsigned grid, const Rational& level);

// A mixing-measure oracle backed by definetti_lower on a sequence oracle.
class TransformOracle : public RightOrderOracle {
 public:
  explicit TransformOracle(std::shared_ptr<const MarginalOracle> chi, EngineOptions options = {})
      : chi_(std::move(chi)), options_(options) {}

  Rational upset_lower(const ConstraintMatrix& thresholds, const SetTuple& labels, Fuel fuel) const override;

 private:
  std::shared_ptr<const MarginalOracle> chi_;
  EngineOptions options_;
};

}  // namespace definetti

#endif  // DEFINETTI_DEFINETTI_CORE_HPP_
