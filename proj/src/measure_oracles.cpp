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

#include "definetti/measure_oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace definetti {

namespace {

bool closure_is_full(const OpenIntervalSet& s) {
  std::vector<ClosedInterval> c = s.closure();
  return c.size() == 1 && c[0].lo == 0 && c[0].hi == 1;
}

std::vector<Interval> sorted_key(const std::vector<Interval>& box) {
  std::vector<Interval> key;
  for (const Interval& iv : box) {
    OpenIntervalSet s = OpenIntervalSet::interval(iv.lo, iv.hi);
    if (s.is_full()) continue;
    key.push_back(s.empty() ? Interval{0, 0} : s.intervals().front());
  }
  std::sort(key.begin(), key.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  return key;
}

}  // namespace

ProductEvent to_event(const SetTuple& sigma) {
  ProductEvent event;
  for (const OpenIntervalSet& s : sigma) event.push_back({s, 1});
  return simplify(event);
}

ProductEvent simplify(const ProductEvent& event) {
  ProductEvent out;
  for (const Factor& f : event) {
    if (f.count == 0 || f.set.is_full()) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& g) { return g.set == f.set; });
    if (it != out.end()) {
      it->count += f.count;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

bool has_empty_factor(const ProductEvent& event) {
  return std::any_of(event.begin(), event.end(), [](const Factor& f) { return f.count > 0 && f.set.empty(); });
}

Rational MarginalOracle::event_lower(const ProductEvent& raw, Fuel fuel) const {
  ProductEvent event = simplify(raw);
  if (has_empty_factor(event)) return 0;
  std::vector<const std::vector<Interval>*> coords;
  for (const Factor& f : event) {
    for (std::size_t i = 0; i < f.count; ++i) coords.push_back(&f.set.intervals());
  }
  if (coords.empty()) return box_lower({}, fuel);
  std::vector<std::size_t> choice(coords.size(), 0);
  std::vector<Rational> pieces;
  std::vector<Interval> box(coords.size());
  for (std::size_t visited = 0; visited < kMaxExpandedBoxes; ++visited) {
    for (std::size_t i = 0; i < coords.size(); ++i) box[i] = (*coords[i])[choice[i]];
    pieces.push_back(box_lower(box, fuel));
    std::size_t pos = 0;
    while (pos < coords.size() && ++choice[pos] == coords[pos]->size()) choice[pos++] = 0;
    if (pos == coords.size()) break;
  }
  return exact_sum(std::move(pieces));
}

std::vector<Rational> MarginalOracle::power_lower(const OpenIntervalSet& set, const ProductEvent& tail,
                                                  std::size_t max_power, Fuel fuel) const {
  std::vector<Rational> out;
  out.reserve(max_power + 1);
  ProductEvent event = tail;
  event.push_back({set, 0});
  for (std::size_t j = 0; j <= max_power; ++j) {
    event.back().count = j;
    out.push_back(event_lower(event, fuel));
  }
  return out;
}

Rational algebra_lower(const MarginalOracle& oracle, const SetTuple& sigma, Fuel fuel) {
  return clamp_unit(oracle.event_lower(to_event(sigma), fuel));
}

Rational closed_upper(const MarginalOracle& oracle, const SetTuple& sigma, Fuel fuel) {
  return closed_upper(oracle, to_event(sigma), fuel);
}

OpenIntervalSet inner_cut(const OpenIntervalSet& tau, Fuel n) { return n == 0 ? tau : shrink_to_grid(tau, n); }

std::vector<OpenIntervalSet> inner_cut_candidates(const OpenIntervalSet& tau, Fuel fuel) {
  std::vector<OpenIntervalSet> out;
  for (Fuel n = 0; n <= fuel; ++n) {
    OpenIntervalSet t = inner_cut(tau, n);
    if (t.empty()) continue;
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

Rational first_exit_lower(const MarginalOracle& oracle, const ProductEvent& closed,
                          const std::vector<OpenIntervalSet>& inner, Fuel fuel) {
  std::vector<Rational> pieces;
  ProductEvent stay;
  for (std::size_t g = 0; g < closed.size(); ++g) {
    OpenIntervalSet keep = complement_of_closure(inner[g]);
    if (!inner[g].empty() && closed[g].count > 0) {
      ProductEvent tail = stay;
      tail.push_back({inner[g], 1});
      std::vector<Rational> seq = oracle.power_lower(keep, tail, closed[g].count - 1, fuel);
      for (Rational& v : seq) pieces.push_back(std::move(v));
    }
    stay.push_back({keep, closed[g].count});
  }
  return exact_sum(std::move(pieces));
}

Rational closed_upper(const MarginalOracle& oracle, const ProductEvent& raw, Fuel fuel) {
  ProductEvent closed;
  for (const Factor& f : simplify(raw)) {
    if (f.set.empty()) return 0;
    if (!closure_is_full(f.set)) closed.push_back(f);
  }
  if (closed.empty()) return 1;
  std::vector<OpenIntervalSet> taus;
  for (const Factor& f : closed) taus.push_back(complement_of_closure(f.set));
  Rational best = 0;
  std::vector<std::vector<OpenIntervalSet>> tried;
  for (Fuel n = 0; n <= fuel; ++n) {
    std::vector<OpenIntervalSet> inner;
    for (const OpenIntervalSet& tau : taus) inner.push_back(inner_cut(tau, n));
    if (std::find(tried.begin(), tried.end(), inner) != tried.end()) continue;
    Rational l = first_exit_lower(oracle, closed, inner, fuel);
    if (l > best) best = l;
    tried.push_back(std::move(inner));
  }
  return clamp_unit(1 - best);
}

UpsetSimplification simplify_upset(const ConstraintMatrix& c, const SetTuple* labels) {
  if (labels != nullptr && labels->size() != c.cols()) {
    throw std::invalid_argument("up-set query: label count does not match constraint columns");
  }
  UpsetSimplification out;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    bool possible = true;
    bool certain = true;
    std::vector<Rational> row;
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const Rational& t = c.at(i, j);
      enum { kTrue, kFalse, kOpen } state = kOpen;
      if (t >= 1) {
        state = kFalse;
      } else if (t < 0) {
        state = kTrue;
      } else if (labels != nullptr && (*labels)[j].empty()) {
        state = kFalse;
      } else if (labels != nullptr && (*labels)[j].is_full()) {
        state = kTrue;
      }
      if (state == kFalse) possible = false;
      if (state != kTrue) certain = false;
      row.push_back(state == kTrue ? Rational(-1) : t);
    }
    if (!possible) continue;
    if (certain) {
      out.kind = UpsetSimplification::Kind::kCertain;
      out.rows.clear();
      return out;
    }
    if (std::find(out.rows.begin(), out.rows.end(), row) == out.rows.end()) out.rows.push_back(std::move(row));
  }
  if (out.rows.empty()) out.kind = UpsetSimplification::Kind::kImpossible;
  return out;
}

namespace {

Rational run_upset(const RightOrderOracle& oracle, const SetTuple& labels, const ConstraintMatrix& c, Fuel fuel,
                   bool use_labels) {
  if (labels.size() != c.cols()) throw std::invalid_argument("query_upset: arity mismatch");
  UpsetSimplification s = simplify_upset(c, use_labels ? &labels : nullptr);
  switch (s.kind) {
    case UpsetSimplification::Kind::kImpossible:
      return 0;
    case UpsetSimplification::Kind::kCertain:
      return 1;
    case UpsetSimplification::Kind::kReduced:
      break;
  }
  return clamp_unit(oracle.upset_lower(ConstraintMatrix(std::move(s.rows)), labels, fuel));
}

}  // namespace

Rational query_upset(const RightOrderOracle& oracle, const SetTuple& labels, const ConstraintMatrix& c, Fuel fuel) {
  return run_upset(oracle, labels, c, fuel, false);
}

Rational query_upset(const DeFinettiMeasureRepr& mu, const SetTuple& labels, const ConstraintMatrix& c, Fuel fuel) {
  return run_upset(mu.oracle(), labels, c, fuel, true);
}

TabulatedOracle::TabulatedOracle(std::vector<Entry> entries, bool exact) : exact_(exact) {
  for (Entry& e : entries) {
    if (e.lower < 0 || e.lower > 1) throw std::invalid_argument("tabulated oracle: bound outside [0,1]");
    if (e.fuel == 0) throw std::invalid_argument("tabulated oracle: fuel must be positive");
    e.box = sorted_key(e.box);
    entries_.push_back(std::move(e));
  }
}

Rational TabulatedOracle::box_lower(const std::vector<Interval>& box, Fuel fuel) const {
  std::vector<Interval> key = sorted_key(box);
  for (const Interval& iv : key) {
    if (iv.lo >= iv.hi) return 0;
  }
  if (key.empty()) return 1;
  Rational best = 0;
  for (const Entry& e : entries_) {
    if (e.fuel <= fuel && e.box == key && e.lower > best) best = e.lower;
  }
  return best;
}

}  // namespace definetti
