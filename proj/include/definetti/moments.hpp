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

// Mixed moments E prod_j x_j^{e_j} of a distribution on [0,1]^k, in both
// directions: read off a sequence oracle, and turned back into lower bounds
// on the probability of open sets.

#ifndef DEFINETTI_MOMENTS_HPP_
#define DEFINETTI_MOMENTS_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "definetti/interval_algebra.hpp"
#include "definetti/measure_oracles.hpp"
#include "definetti/numbers.hpp"
#include "definetti/poly_approx.hpp"

namespace definetti {

// Values indexed by exponent vectors 0 <= e <= max, last coordinate fastest.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(Exponents max, std::vector<Rational> values);

  const Exponents& max() const { return max_; }
  const Rational& at(const Exponents& e) const { return values_[index(e)]; }
  Rational& at(const Exponents& e) { return values_[index(e)]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  std::vector<Rational>& values() { return values_; }

  static std::size_t cell_count(const Exponents& max);

 private:
  std::size_t index(const Exponents& e) const;

  Exponents max_;
  std::vector<Rational> values_;
};

class MomentOracle {
 public:
  virtual ~MomentOracle() = default;

  virtual std::size_t arity() const = 0;
  // Lower bound on E prod x_j^{e_j}; nondecreasing in fuel.
  virtual Rational moment_lower(const Exponents& e, Fuel fuel) const = 0;
  // Upper bound, when the oracle has one; nonincreasing in fuel.
  virtual std::optional<Rational> moment_upper(const Exponents& e, Fuel fuel) const;
  virtual bool has_upper() const { return false; }

  // Whole tables at once; the defaults loop over moment_lower/moment_upper.
  virtual MomentTable lower_table(const Exponents& max, Fuel fuel) const;
  virtual std::optional<MomentTable> upper_table(const Exponents& max, Fuel fuel) const;
};

// Moments of (V_{labels[0]}, ..., V_{labels[k-1]}) read from a sequence
// oracle: E prod V_j^{e_j} is the probability that e_j fresh coordinates lie
// in labels[j] for every j. Lower bounds use the open sets, upper bounds the
// closures, so the upper bound also covers E prod V_{closure}^{e}.
class ChiMoments : public MomentOracle {
 public:
  ChiMoments(std::shared_ptr<const MarginalOracle> chi, SetTuple labels);

  std::size_t arity() const override { return labels_.size(); }
  const SetTuple& labels() const { return labels_; }

  Rational moment_lower(const Exponents& e, Fuel fuel) const override;
  std::optional<Rational> moment_upper(const Exponents& e, Fuel fuel) const override;
  bool has_upper() const override { return true; }
  MomentTable lower_table(const Exponents& max, Fuel fuel) const override;
  std::optional<MomentTable> upper_table(const Exponents& max, Fuel fuel) const override;

 private:
  ProductEvent event_for(const Exponents& e) const;

  std::shared_ptr<const MarginalOracle> chi_;
  SetTuple labels_;
};

// Moments known in closed form, indexed by coordinate exponents.
class ExactMoments : public MomentOracle {
 public:
  using Formula = std::function<Rational(const Exponents&)>;

  ExactMoments(std::size_t arity, Formula formula) : arity_(arity), formula_(std::move(formula)) {}

  // Uniform on [0,1]^k: prod 1/(e_j + 1).
  static ExactMoments uniform(std::size_t arity);
  // Point mass at x.
  static ExactMoments point_mass(std::vector<Rational> x);

  std::size_t arity() const override { return arity_; }
  Rational moment_lower(const Exponents& e, Fuel) const override { return formula_(e); }
  std::optional<Rational> moment_upper(const Exponents& e, Fuel) const override { return formula_(e); }
  bool has_upper() const override { return true; }

 private:
  std::size_t arity_;
  Formula formula_;
};

struct MomentBounds {
  Rational lower;
  Rational upper;
};

// Bounds on E prod V_{labels[j]}^{exponents[j]}.
MomentBounds moments_from_chi(const MarginalOracle& chi, const SetTuple& labels,
                              const std::vector<unsigned>& exponents, Fuel fuel);

struct MomentPricing {
  Rational value;      // E p(x) priced from below
  bool slack = false;  // a missing upper bound was replaced by 1
};

// Lower bound on E p(x): positive coefficients use lower moments, negative
// ones upper moments (1 when the oracle has none).
MomentPricing price_polynomial(const MomentOracle& oracle, const Polynomial& p, Fuel fuel);

struct DistBound {
  Rational lower;
  bool slack = false;
};

// max over 2 <= n <= fuel of E p_{n,region}(x), clamped to [0,1]. Terms
// whose monomial expansion exceeds max_terms are skipped.
DistBound dist_from_moments(const MomentOracle& oracle, const BoxUnion& region, Fuel fuel,
                            std::size_t max_terms = BernsteinApprox::kDefaultMaxTerms);
DistBound dist_from_moments(const MomentOracle& oracle, const SetTuple& sigma, Fuel fuel);

// The single-n term of dist_from_moments (unclamped).
MomentPricing indicator_pricing(const MomentOracle& oracle, const BoxUnion& region, unsigned n, Fuel fuel,
                                std::size_t max_terms = BernsteinApprox::kDefaultMaxTerms);

struct Bracket {
  Rational lower;
  Rational upper;
};

// Bounds on E prod X_j^{e_j} for the first k = exponents.size() coordinates
// of the sequence, from lower Darboux sums over open grid cells and upper
// sums over closed cells, grids of denominator N <= fuel.
Bracket integrate_continuous(const MarginalOracle& oracle, const std::vector<unsigned>& exponents, Fuel fuel);

}  // namespace definetti

#endif  // DEFINETTI_MOMENTS_HPP_
