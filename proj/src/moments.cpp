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

#include "definetti/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace definetti {

namespace {

// Steps a mixed-radix counter over [0..max_0] x ... (last digit fastest).
bool advance(Exponents& e, const Exponents& max, std::size_t digits) {
  for (std::size_t i = digits; i-- > 0;) {
    if (++e[i] <= max[i]) return true;
    e[i] = 0;
  }
  return false;
}

Rational power(const Rational& x, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

MomentTable::MomentTable(Exponents max, std::vector<Rational> values) : max_(std::move(max)), values_(std::move(values)) {
  if (values_.size() != cell_count(max_)) throw std::invalid_argument("MomentTable: size does not match shape");
}

std::size_t MomentTable::cell_count(const Exponents& max) {
  std::size_t n = 1;
  for (unsigned m : max) n *= m + 1;
  return n;
}

std::size_t MomentTable::index(const Exponents& e) const {
  if (e.size() != max_.size()) throw std::invalid_argument("MomentTable: exponent arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > max_[i]) throw std::out_of_range("MomentTable: exponent outside table");
    idx = idx * (max_[i] + 1) + e[i];
  }
  return idx;
}

std::optional<Rational> MomentOracle::moment_upper(const Exponents&, Fuel) const { return std::nullopt; }

MomentTable MomentOracle::lower_table(const Exponents& max, Fuel fuel) const {
  std::vector<Rational> values;
  values.reserve(MomentTable::cell_count(max));
  Exponents e(max.size(), 0);
  do {
    values.push_back(moment_lower(e, fuel));
  } while (advance(e, max, max.size()));
  return MomentTable(max, std::move(values));
}

std::optional<MomentTable> MomentOracle::upper_table(const Exponents& max, Fuel fuel) const {
  if (!has_upper()) return std::nullopt;
  std::vector<Rational> values;
  values.reserve(MomentTable::cell_count(max));
  Exponents e(max.size(), 0);
  do {
    std::optional<Rational> u = moment_upper(e, fuel);
    if (!u) return std::nullopt;
    values.push_back(*u);
  } while (advance(e, max, max.size()));
  return MomentTable(max, std::move(values));
}

ChiMoments::ChiMoments(std::shared_ptr<const MarginalOracle> chi, SetTuple labels)
    : chi_(std::move(chi)), labels_(std::move(labels)) {
  if (!chi_) throw std::invalid_argument("ChiMoments: null oracle");
  if (labels_.empty()) throw std::invalid_argument("ChiMoments: empty label tuple");
}

ProductEvent ChiMoments::event_for(const Exponents& e) const {
  if (e.size() != labels_.size()) throw std::invalid_argument("ChiMoments: exponent arity mismatch");
  ProductEvent event;
  for (std::size_t j = 0; j < e.size(); ++j) event.push_back({labels_[j], e[j]});
  return event;
}

Rational ChiMoments::moment_lower(const Exponents& e, Fuel fuel) const {
  return clamp_unit(chi_->event_lower(event_for(e), fuel));
}

std::optional<Rational> ChiMoments::moment_upper(const Exponents& e, Fuel fuel) const {
  return closed_upper(*chi_, event_for(e), fuel);
}

MomentTable ChiMoments::lower_table(const Exponents& max, Fuel fuel) const {
  std::size_t k = labels_.size();
  if (max.size() != k) throw std::invalid_argument("ChiMoments: exponent arity mismatch");
  std::vector<Rational> values;
  values.reserve(MomentTable::cell_count(max));
  Exponents prefix(k, 0);
  do {
    ProductEvent tail;
    for (std::size_t j = 0; j + 1 < k; ++j) tail.push_back({labels_[j], prefix[j]});
    std::vector<Rational> seq = chi_->power_lower(labels_[k - 1], tail, max[k - 1], fuel);
    for (Rational& v : seq) values.push_back(clamp_unit(v));
  } while (advance(prefix, max, k - 1));
  return MomentTable(max, std::move(values));
}

// For each cut N, L_N(e) = sum over groups g of the first-exit pieces at g:
// the earlier groups stay in A_h = complement_of_closure(T_h), group g has i
// coordinates in A_g and then one in T_g. The upper bound is 1 - max_N L_N.
std::optional<MomentTable> ChiMoments::upper_table(const Exponents& max, Fuel fuel) const {
  std::size_t k = labels_.size();
  if (max.size() != k) throw std::invalid_argument("ChiMoments: exponent arity mismatch");
  std::size_t cells = MomentTable::cell_count(max);
  std::vector<OpenIntervalSet> taus;
  for (const OpenIntervalSet& s : labels_) taus.push_back(complement_of_closure(s));
  std::vector<Rational> best(cells, Rational(0));
  std::vector<std::vector<OpenIntervalSet>> tried;
  for (Fuel n = 0; n <= fuel; ++n) {
    std::vector<OpenIntervalSet> cut;
    for (const OpenIntervalSet& tau : taus) cut.push_back(inner_cut(tau, n));
    if (std::find(tried.begin(), tried.end(), cut) != tried.end()) continue;
    std::vector<OpenIntervalSet> keep;
    for (const OpenIntervalSet& t : cut) keep.push_back(complement_of_closure(t));
    std::vector<Rational> exit(cells, Rational(0));
    for (std::size_t g = 0; g < k; ++g) {
      if (cut[g].empty() || max[g] == 0) continue;
      // cum[(e_0..e_g)] over the first g+1 digits.
      Exponents head(max.begin(), max.begin() + static_cast<std::ptrdiff_t>(g + 1));
      std::vector<Rational> cum;
      cum.reserve(MomentTable::cell_count(head));
      Exponents prefix(g + 1, 0);
      do {
        ProductEvent tail;
        for (std::size_t h = 0; h < g; ++h) tail.push_back({keep[h], prefix[h]});
        tail.push_back({cut[g], 1});
        std::vector<Rational> seq = chi_->power_lower(keep[g], tail, max[g] - 1, fuel);
        Rational acc = 0;
        cum.push_back(acc);
        for (unsigned i = 0; i < max[g]; ++i) {
          acc += seq[i];
          cum.push_back(acc);
        }
      } while (advance(prefix, head, g));
      std::size_t suffix = cells / cum.size();
      for (std::size_t idx = 0; idx < cells; ++idx) exit[idx] += cum[idx / suffix];
    }
    for (std::size_t idx = 0; idx < cells; ++idx) {
      if (exit[idx] > best[idx]) best[idx] = exit[idx];
    }
    tried.push_back(std::move(cut));
  }
  std::vector<Rational> values;
  values.reserve(cells);
  for (const Rational& b : best) values.push_back(clamp_unit(1 - b));
  return MomentTable(max, std::move(values));
}

ExactMoments ExactMoments::uniform(std::size_t arity) {
  return ExactMoments(arity, [](const Exponents& e) {
    Rational out = 1;
    for (unsigned v : e) out /= v + 1;
    return out;
  });
}

ExactMoments ExactMoments::point_mass(std::vector<Rational> x) {
  std::size_t k = x.size();
  return ExactMoments(k, [x = std::move(x)](const Exponents& e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e.size(); ++i) out *= power(x[i], e[i]);
    return out;
  });
}

MomentBounds moments_from_chi(const MarginalOracle& chi, const SetTuple& labels,
                              const std::vector<unsigned>& exponents, Fuel fuel) {
  if (labels.size() != exponents.size()) throw std::invalid_argument("moments_from_chi: length mismatch");
  ProductEvent event;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (exponents[j] == 0) throw std::invalid_argument("moments_from_chi: exponents must be positive");
    event.push_back({labels[j], exponents[j]});
  }
  return {clamp_unit(chi.event_lower(event, fuel)), closed_upper(chi, event, fuel)};
}

MomentPricing price_polynomial(const MomentOracle& oracle, const Polynomial& p, Fuel fuel) {
  if (p.arity() != oracle.arity()) throw std::invalid_argument("price_polynomial: arity mismatch");
  MomentPricing out;
  if (p.is_zero()) return out;
  Exponents max = p.max_degrees();
  bool any_plus = false, any_minus = false;
  for (const auto& [e, c] : p.terms()) (c > 0 ? any_plus : any_minus) = true;
  MomentTable lower;
  std::optional<MomentTable> upper;
  if (any_plus) lower = oracle.lower_table(max, fuel);
  if (any_minus) {
    upper = oracle.upper_table(max, fuel);
    if (!upper) out.slack = true;
  }
  std::vector<Rational> parts;
  parts.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (c > 0) {
      parts.push_back(c * lower.at(e));
    } else {
      parts.push_back(upper ? c * upper->at(e) : c);
    }
  }
  out.value = exact_sum(std::move(parts));
  return out;
}

MomentPricing indicator_pricing(const MomentOracle& oracle, const BoxUnion& region, unsigned n, Fuel fuel,
                                std::size_t max_terms) {
  if (region.arity() != oracle.arity()) throw std::invalid_argument("dist_from_moments: arity mismatch");
  if (n < 2) return {};
  return price_polynomial(oracle, *indicator_poly(n, region, max_terms), fuel);
}

DistBound dist_from_moments(const MomentOracle& oracle, const BoxUnion& region, Fuel fuel, std::size_t max_terms) {
  if (region.arity() != oracle.arity()) throw std::invalid_argument("dist_from_moments: arity mismatch");
  DistBound out{0, false};
  for (unsigned n = 2; n <= fuel; ++n) {
    MomentPricing p;
    try {
      p = indicator_pricing(oracle, region, n, fuel, max_terms);
    } catch (const std::length_error&) {
      continue;
    }
    out.slack = out.slack || p.slack;
    if (p.value > out.lower) out.lower = p.value;
  }
  out.lower = clamp_unit(out.lower);
  return out;
}

DistBound dist_from_moments(const MomentOracle& oracle, const SetTuple& sigma, Fuel fuel) {
  return dist_from_moments(oracle, BoxUnion::from_tuple(sigma), fuel);
}

Bracket integrate_continuous(const MarginalOracle& oracle, const std::vector<unsigned>& exponents, Fuel fuel) {
  std::size_t k = exponents.size();
  if (k == 0) throw std::invalid_argument("integrate_continuous: no coordinates");
  Bracket out{0, 1};
  for (Fuel grid = 1; grid <= fuel; ++grid) {
    Exponents cell(k, 0), last(k, grid - 1);
    std::vector<Rational> low_parts, high_parts;
    do {
      SetTuple open, closed;
      Rational inf = 1, sup = 1;
      for (std::size_t i = 0; i < k; ++i) {
        Rational a(cell[i], grid), b(cell[i] + 1, grid);
        a.canonicalize();
        b.canonicalize();
        open.push_back(OpenIntervalSet::interval(cell[i] == 0 ? kLowSentinel : a, cell[i] + 1 == grid ? kHighSentinel : b));
        closed.push_back(OpenIntervalSet::interval(a, b));
        inf *= power(a, exponents[i]);
        sup *= power(b, exponents[i]);
      }
      if (inf > 0) low_parts.push_back(inf * algebra_lower(oracle, open, fuel));
      high_parts.push_back(sup * closed_upper(oracle, closed, fuel));
    } while (advance(cell, last, k));
    Rational low = exact_sum(std::move(low_parts));
    Rational high = exact_sum(std::move(high_parts));
    if (low > out.lower) out.lower = low;
    if (high < out.upper) out.upper = high;
  }
  return out;
}

}  // namespace definetti
