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

#include "definetti/interval_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace definetti {

namespace {

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::string endpoint_text(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

}  // namespace

OpenIntervalSet normalize(std::vector<Interval> intervals) {
  std::vector<Interval> kept;
  kept.reserve(intervals.size());
  for (Interval& iv : intervals) {
    if (iv.lo >= iv.hi || iv.hi <= 0 || iv.lo >= 1) continue;
    if (iv.lo < 0) iv.lo = kLowSentinel;
    if (iv.hi > 1) iv.hi = kHighSentinel;
    kept.push_back(std::move(iv));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  OpenIntervalSet out;
  for (Interval& iv : kept) {
    if (!out.parts_.empty() && iv.lo < out.parts_.back().hi) {
      if (iv.hi > out.parts_.back().hi) out.parts_.back().hi = iv.hi;
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

OpenIntervalSet OpenIntervalSet::full() { return normalize({{kLowSentinel, kHighSentinel}}); }

OpenIntervalSet OpenIntervalSet::interval(const Rational& lo, const Rational& hi) {
  return normalize({{lo, hi}});
}

bool OpenIntervalSet::is_full() const {
  return parts_.size() == 1 && parts_[0].lo < 0 && parts_[0].hi > 1;
}

bool OpenIntervalSet::contains(const Rational& x) const {
  if (x < 0 || x > 1) return false;
  for (const Interval& iv : parts_) {
    if (iv.contains(x)) return true;
  }
  return false;
}

Rational OpenIntervalSet::length() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

std::vector<ClosedInterval> OpenIntervalSet::closure() const {
  std::vector<ClosedInterval> out;
  for (const Interval& iv : parts_) {
    Rational lo = iv.closure_lo();
    Rational hi = iv.closure_hi();
    if (!out.empty() && lo <= out.back().hi) {
      if (hi > out.back().hi) out.back().hi = hi;
    } else {
      out.push_back({lo, hi});
    }
  }
  return out;
}

bool OpenIntervalSet::closure_contains(const Rational& x) const {
  for (const ClosedInterval& c : closure()) {
    if (c.lo <= x && x <= c.hi) return true;
  }
  return false;
}

OpenIntervalSet OpenIntervalSet::intersect(const OpenIntervalSet& other) const {
  std::vector<Interval> pieces;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) {
      pieces.push_back({max_of(a.lo, b.lo), min_of(a.hi, b.hi)});
    }
  }
  return normalize(std::move(pieces));
}

OpenIntervalSet OpenIntervalSet::unite(const OpenIntervalSet& other) const {
  std::vector<Interval> pieces = parts_;
  pieces.insert(pieces.end(), other.parts_.begin(), other.parts_.end());
  return normalize(std::move(pieces));
}

std::string OpenIntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const Interval& iv : parts_) {
    if (!out.empty()) out += '|';
    out += iv.lo < 0 ? "[0" : "(" + endpoint_text(iv.lo);
    out += ',';
    out += iv.hi > 1 ? "1]" : endpoint_text(iv.hi) + ")";
  }
  return out;
}

std::strong_ordering operator<=>(const OpenIntervalSet& a, const OpenIntervalSet& b) {
  std::size_t n = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.parts_[i].lo, b.parts_[i].lo);
    if (c == 0) c = cmp(a.parts_[i].hi, b.parts_[i].hi);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.parts_.size() <=> b.parts_.size();
}

ConstraintMatrix::ConstraintMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw std::invalid_argument("constraint matrix needs at least one row and one column");
  }
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw std::invalid_argument("ragged constraint matrix");
  }
}

bool refines(const SetTuple& sigma, const SetTuple& pi) {
  if (sigma.size() != pi.size()) throw std::invalid_argument("refines: arity mismatch");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (const ClosedInterval& c : sigma[i].closure()) {
      bool inside = false;
      for (const Interval& iv : pi[i].intervals()) {
        if (iv.lo < c.lo && c.hi < iv.hi) {
          inside = true;
          break;
        }
      }
      if (!inside) return false;
    }
  }
  return true;
}

std::vector<SetTuple> enumerate_refinements(const SetTuple& pi, Fuel fuel) {
  std::vector<SetTuple> out;
  for (Fuel m = 1; m <= fuel; ++m) {
    Rational step(1, m);
    SetTuple sigma;
    bool usable = true;
    for (const OpenIntervalSet& coord : pi) {
      std::vector<Interval> pieces;
      for (const Interval& iv : coord.intervals()) {
        Rational lo = iv.lo < 0 ? kLowSentinel : Rational(ceil_of((iv.lo + step) * m), m);
        Rational hi = iv.hi > 1 ? kHighSentinel : Rational(floor_of((iv.hi - step) * m), m);
        lo.canonicalize();
        hi.canonicalize();
        pieces.push_back({lo, hi});
      }
      OpenIntervalSet shrunk = normalize(std::move(pieces));
      if (shrunk.empty() && !coord.empty()) {
        usable = false;
        break;
      }
      sigma.push_back(std::move(shrunk));
    }
    if (!usable) continue;
    if (std::find(out.begin(), out.end(), sigma) == out.end()) out.push_back(std::move(sigma));
  }
  return out;
}

OpenIntervalSet complement_of_closure(const OpenIntervalSet& sigma) {
  std::vector<Interval> gaps;
  Rational cursor = kLowSentinel;
  for (const ClosedInterval& c : sigma.closure()) {
    gaps.push_back({cursor, c.lo});
    cursor = c.hi;
  }
  gaps.push_back({cursor, kHighSentinel});
  return normalize(std::move(gaps));
}

OpenIntervalSet shrink_to_grid(const OpenIntervalSet& set, unsigned n) {
  if (n == 0) throw std::invalid_argument("shrink_to_grid: zero denominator");
  std::vector<Interval> pieces;
  for (const Interval& iv : set.intervals()) {
    Rational lo = iv.lo < 0 ? kLowSentinel : Rational(floor_of(iv.lo * n) + 1, n);
    Rational hi = iv.hi > 1 ? kHighSentinel : Rational(ceil_of(iv.hi * n) - 1, n);
    lo.canonicalize();
    hi.canonicalize();
    pieces.push_back({lo, hi});
  }
  return normalize(std::move(pieces));
}

std::string to_string(const SetTuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += "; ";
    out += tuple[i].to_string();
  }
  return out + ")";
}

}  // namespace definetti
