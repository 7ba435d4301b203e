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

#include "definetti/definetti_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace definetti {

namespace {

// Non-owning handle for APIs that hold shared oracles.
std::shared_ptr<const MarginalOracle> borrow(const MarginalOracle& chi) {
  return std::shared_ptr<const MarginalOracle>(std::shared_ptr<const MarginalOracle>(), &chi);
}

// Prices every monomial from lower moments of the open sets.
class OpenSideMoments : public MomentOracle {
 public:
  explicit OpenSideMoments(const ChiMoments& inner) : inner_(inner) {}
  std::size_t arity() const override { return inner_.arity(); }
  Rational moment_lower(const Exponents& e, Fuel fuel) const override { return inner_.moment_lower(e, fuel); }
  std::optional<Rational> moment_upper(const Exponents& e, Fuel fuel) const override {
    return inner_.moment_lower(e, fuel);
  }
  bool has_upper() const override { return true; }
  MomentTable lower_table(const Exponents& max, Fuel fuel) const override { return inner_.lower_table(max, fuel); }
  std::optional<MomentTable> upper_table(const Exponents& max, Fuel fuel) const override {
    return inner_.lower_table(max, fuel);
  }

 private:
  const ChiMoments& inner_;
};

}  // namespace

ReducedQuery reduce_query(const DeFinettiQuery& q) {
  if (q.pi.size() != q.c.cols()) throw std::invalid_argument("query: pi arity does not match constraint columns");
  ReducedQuery out;
  UpsetSimplification s = simplify_upset(q.c, &q.pi);
  out.kind = s.kind;
  if (s.kind != UpsetSimplification::Kind::kReduced) return out;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < q.pi.size(); ++j) {
    bool all_true = std::all_of(s.rows.begin(), s.rows.end(), [&](const std::vector<Rational>& r) { return r[j] < 0; });
    if (!all_true) keep.push_back(j);
  }
  std::vector<std::vector<Rational>> rows;
  for (const std::vector<Rational>& r : s.rows) {
    std::vector<Rational> row;
    for (std::size_t j : keep) row.push_back(r[j]);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(std::move(row));
  }
  for (std::size_t j : keep) out.query.pi.push_back(q.pi[j]);
  out.query.c = ConstraintMatrix(std::move(rows));
  return out;
}

MomentPricing q_pricing(const MarginalOracle& chi, const SetTuple& sigma, const ConstraintMatrix& c, unsigned n,
                        Fuel fuel, ClosurePricing mode, std::size_t max_terms) {
  if (sigma.size() != c.cols()) throw std::invalid_argument("q_pricing: arity mismatch");
  if (n < 2) return {};
  std::shared_ptr<const Polynomial> p = indicator_poly_for_constraints(n, c);
  if (p->size() > max_terms) throw std::length_error("q_pricing: polynomial over budget");
  ChiMoments moments(borrow(chi), sigma);
  if (mode == ClosurePricing::kOpen) return price_polynomial(OpenSideMoments(moments), *p, fuel);
  return price_polynomial(moments, *p, fuel);
}

Rational definetti_lower(const MarginalOracle& chi, const DeFinettiQuery& q, Fuel fuel, EngineOptions options) {
  ReducedQuery r = reduce_query(q);
  if (r.kind == UpsetSimplification::Kind::kImpossible) return 0;
  if (r.kind == UpsetSimplification::Kind::kCertain) return 1;
  BoxUnion region = BoxUnion::from_constraints(r.query.c);
  Rational best = 0;
  for (unsigned n = 2; n <= fuel; ++n) {
    // The certified degree tells the size without expanding.
    if (bernstein_for(n, region)->monomial_count() > options.max_monomials) continue;
    for (const SetTuple& sigma : enumerate_refinements(r.query.pi, fuel)) {
      MomentPricing v = q_pricing(chi, sigma, r.query.c, n, fuel, ClosurePricing::kClosed, options.max_monomials);
      if (v.value > best) best = v.value;
    }
  }
  return clamp_unit(best);
}

LowerReal definetti_lower_stream(std::shared_ptr<const MarginalOracle> chi, DeFinettiQuery q, EngineOptions options) {
  return LowerReal([chi = std::move(chi), q = std::move(q), options](Fuel fuel) {
    return definetti_lower(*chi, q, fuel, options);
  });
}

BoxUnion open_down_set(const ConstraintMatrix& c) {
  std::size_t k = c.cols();
  std::size_t rows = c.rows();
  std::vector<Box> boxes;
  std::vector<std::size_t> choice(rows, 0);
  while (true) {
    std::vector<Rational> bound(k, kHighSentinel);
    bool empty = false;
    for (std::size_t i = 0; i < rows && !empty; ++i) {
      const Rational& t = c.at(i, choice[i]);
      if (t <= 0) empty = true;
      if (t < bound[choice[i]]) bound[choice[i]] = t;
    }
    if (!empty) {
      Box b;
      for (std::size_t j = 0; j < k; ++j) b.sides.push_back({kLowSentinel, bound[j] > 1 ? kHighSentinel : bound[j]});
      boxes.push_back(std::move(b));
    }
    std::size_t pos = 0;
    while (pos < rows && ++choice[pos] == k) choice[pos++] = 0;
    if (pos == rows) break;
  }
  return BoxUnion(k, std::move(boxes));
}

Bracket definetti_bracket(const MarginalOracle& chi, const DeFinettiQuery& q, ContinuityAssumption assume, Fuel fuel,
                          EngineOptions options) {
  if (!assume.flag) throw std::invalid_argument("definetti_bracket: requires the continuity assumption");
  ReducedQuery r = reduce_query(q);
  if (r.kind == UpsetSimplification::Kind::kImpossible) return {0, 0};
  if (r.kind == UpsetSimplification::Kind::kCertain) return {1, 1};
  Rational lower = definetti_lower(chi, q, fuel, options);
  ChiMoments moments(borrow(chi), r.query.pi);
  DistBound down = dist_from_moments(moments, open_down_set(r.query.c), fuel, options.max_monomials);
  Rational upper = clamp_unit(1 - down.lower);
  return {lower, upper};
}

std::vector<std::vector<Rational>> product_threshold_rows(std::size_t k, unsigned grid, const Rational& level) {
  std::vector<std::vector<Rational>> rows;
  if (grid < 2 || k == 0) return rows;
  std::vector<unsigned> idx(k, 1);
  while (true) {
    Rational prod = 1;
    for (unsigned v : idx) prod *= rational(v, grid);
    if (prod >= level) {
      bool minimal = true;
      for (std::size_t j = 0; j < k && minimal; ++j) {
        if (idx[j] == 1) continue;
        Rational lowered = prod / idx[j] * (idx[j] - 1);
        if (lowered >= level) minimal = false;
      }
      if (minimal) {
        std::vector<Rational> row;
        for (unsigned v : idx) {
          Rational r(v, grid);
          r.canonicalize();
          row.push_back(r);
        }
        rows.push_back(std::move(row));
      }
    }
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++idx[pos] < grid) break;
      idx[pos] = 1;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return rows;
}

Rational chi_from_mu(const DeFinettiMeasureRepr& mu, const SetTuple& sigma, Fuel fuel) {
  SetTuple labels;
  for (const OpenIntervalSet& s : sigma) {
    if (s.size() > 1) throw std::invalid_argument("chi_from_mu: sigma must be a box (single intervals)");
    if (s.empty()) return 0;
    if (!s.is_full()) labels.push_back(s);
  }
  if (labels.empty()) return 1;
  std::size_t k = labels.size();
  Rational best = 0;
  for (unsigned grid = 2; grid <= fuel; ++grid) {
    std::vector<Rational> parts;
    for (unsigned l = 1; l < grid; ++l) {
      std::vector<std::vector<Rational>> rows = product_threshold_rows(k, grid, rational(l, grid));
      if (rows.empty()) continue;
      Rational p = query_upset(mu, labels, ConstraintMatrix(std::move(rows)), fuel);
      parts.push_back(p / grid);
    }
    Rational total = exact_sum(std::move(parts));
    if (total > best) best = total;
  }
  return clamp_unit(best);
}

Rational TransformOracle::upset_lower(const ConstraintMatrix& thresholds, const SetTuple& labels, Fuel fuel) const {
  return definetti_lower(*chi_, DeFinettiQuery{labels, thresholds}, fuel, options_);
}

}  // namespace definetti
