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

// Oracle interfaces for exchangeable sequences on [0,1] and for the joint
// law of the directing-measure masses V_tau.

#ifndef DEFINETTI_MEASURE_ORACLES_HPP_
#define DEFINETTI_MEASURE_ORACLES_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "definetti/interval_algebra.hpp"
#include "definetti/numbers.hpp"

namespace definetti {

// `count` fresh coordinates, each constrained to `set`.
struct Factor {
  OpenIntervalSet set;
  std::size_t count = 1;

  friend bool operator==(const Factor& a, const Factor& b) { return a.count == b.count && a.set == b.set; }
};

// Intersection of the factor events over disjoint blocks of coordinates.
// Exchangeability makes the block order irrelevant.
using ProductEvent = std::vector<Factor>;

// Groups equal coordinates of a tuple (first-appearance order).
ProductEvent to_event(const SetTuple& sigma);

// Drops full-domain and zero-count factors and merges equal sets.
ProductEvent simplify(const ProductEvent& event);

bool has_empty_factor(const ProductEvent& event);

class MarginalOracle {
 public:
  virtual ~MarginalOracle() = default;

  // Sound lower bound on Pr(X_i in box[i] for all i), nondecreasing in fuel.
  virtual Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const = 0;

  // True when every answer is exact already at fuel 1.
  virtual bool exact() const { return false; }

  // Lower bound for an algebra event. The default expands every coordinate
  // into its disjoint intervals and sums box_lower over the product boxes
  // (at most kMaxExpandedBoxes of them; the partial sum is still sound).
  virtual Rational event_lower(const ProductEvent& event, Fuel fuel) const;

  // v[j] = lower bound for `tail` together with j further coordinates in
  // `set`, for j = 0..max_power.
  virtual std::vector<Rational> power_lower(const OpenIntervalSet& set, const ProductEvent& tail,
                                            std::size_t max_power, Fuel fuel) const;

  static constexpr std::size_t kMaxExpandedBoxes = 1 << 16;
};

Rational algebra_lower(const MarginalOracle& oracle, const SetTuple& sigma, Fuel fuel);

// Upper bound on Pr(X_i in closure(sigma[i]) for all i).
Rational closed_upper(const MarginalOracle& oracle, const SetTuple& sigma, Fuel fuel);
Rational closed_upper(const MarginalOracle& oracle, const ProductEvent& event, Fuel fuel);

// Inner approximations T of an open set tau used by the cut search: tau
// itself, then tau with finite endpoints pulled strictly inside onto the
// denominator-N grid for N = 1..fuel. Duplicates and empty sets removed.
std::vector<OpenIntervalSet> inner_cut_candidates(const OpenIntervalSet& tau, Fuel fuel);
// The n-th candidate before deduplication (n = 0 is tau itself).
OpenIntervalSet inner_cut(const OpenIntervalSet& tau, Fuel n);

// Lower bound on the probability that some coordinate leaves the closure,
// Pr(U_g U_i {X_gi in T_g}), from one choice of inner sets T (one per
// factor, same order as `closed`, which must be simplified and free of
// empty sets). Sums the disjoint pieces "first exit happens at coordinate
// i"; the earlier coordinates sit in complement_of_closure(T).
Rational first_exit_lower(const MarginalOracle& oracle, const ProductEvent& closed,
                          const std::vector<OpenIntervalSet>& inner, Fuel fuel);

// Lower bounds on Pr(U_{w in rows} cap_j {V_{labels[j]} > c_wj}).
class RightOrderOracle {
 public:
  virtual ~RightOrderOracle() = default;
  virtual Rational upset_lower(const ConstraintMatrix& thresholds, const SetTuple& labels, Fuel fuel) const = 0;
};

// A right-order oracle over the variables V_tau = nu(tau). Queries are
// simplified with V_tau in [0,1], V_{empty} = 0 and V_{[0,1]} = 1 before the
// oracle sees them.
class DeFinettiMeasureRepr {
 public:
  explicit DeFinettiMeasureRepr(std::shared_ptr<const RightOrderOracle> oracle) : oracle_(std::move(oracle)) {}
  const RightOrderOracle& oracle() const { return *oracle_; }

 private:
  std::shared_ptr<const RightOrderOracle> oracle_;
};

// Outcome of simplifying an up-set query using only that each V lies in
// [0,1] (and, when labels are given, the values of V on empty/full sets).
struct UpsetSimplification {
  enum class Kind { kImpossible, kCertain, kReduced } kind = Kind::kReduced;
  std::vector<std::vector<Rational>> rows;  // surviving rows, kReduced only
};
UpsetSimplification simplify_upset(const ConstraintMatrix& c, const SetTuple* labels);

Rational query_upset(const RightOrderOracle& oracle, const SetTuple& labels, const ConstraintMatrix& c, Fuel fuel);
Rational query_upset(const DeFinettiMeasureRepr& mu, const SetTuple& labels, const ConstraintMatrix& c, Fuel fuel);

// Box lower bounds read from a table (external processes). An entry answers
// a query whose non-full coordinates match it as a multiset, once fuel has
// reached the entry's fuel; the best matching entry wins, else 0.
class TabulatedOracle : public MarginalOracle {
 public:
  struct Entry {
    std::vector<Interval> box;
    Fuel fuel = 1;
    Rational lower;
  };

  TabulatedOracle(std::vector<Entry> entries, bool exact);

  Rational box_lower(const std::vector<Interval>& box, Fuel fuel) const override;
  bool exact() const override { return exact_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  bool exact_;
};

}  // namespace definetti

#endif  // DEFINETTI_MEASURE_ORACLES_HPP_
