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

// Finite unions of open rational intervals, read relative to [0,1].
//
// An interval (a, b) stands for (a, b) ∩ [0,1]. In canonical form every
// lower endpoint below 0 is stored as kLowSentinel (the set contains 0) and
// every upper endpoint above 1 as kHighSentinel (the set contains 1), so
// [0, 1/4) is (-1, 1/4) and (1/2, 1] is (1/2, 2).

#ifndef DEFINETTI_INTERVAL_ALGEBRA_HPP_
#define DEFINETTI_INTERVAL_ALGEBRA_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "definetti/numbers.hpp"

namespace definetti {

inline const Rational kLowSentinel{-1};
inline const Rational kHighSentinel{2};

struct Interval {
  Rational lo;
  Rational hi;

  bool includes_zero() const { return lo < 0; }
  bool includes_one() const { return hi > 1; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  // Lower and upper ends of the closure inside [0,1].
  Rational closure_lo() const { return lo < 0 ? Rational(0) : lo; }
  Rational closure_hi() const { return hi > 1 ? Rational(1) : hi; }
  Rational length() const { return closure_hi() - closure_lo(); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct ClosedInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

class OpenIntervalSet;
OpenIntervalSet normalize(std::vector<Interval> intervals);

class OpenIntervalSet {
 public:
  OpenIntervalSet() = default;

  static OpenIntervalSet empty_set() { return {}; }
  static OpenIntervalSet full();
  static OpenIntervalSet interval(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_full() const;
  std::size_t size() const { return parts_.size(); }

  bool contains(const Rational& x) const;
  bool contains_zero() const { return contains(0); }
  bool contains_one() const { return contains(1); }
  Rational length() const;

  // Relative closure, touching pieces merged.
  std::vector<ClosedInterval> closure() const;
  bool closure_contains(const Rational& x) const;

  OpenIntervalSet intersect(const OpenIntervalSet& other) const;
  OpenIntervalSet unite(const OpenIntervalSet& other) const;

  // Bracket notation, e.g. "[0,1/4)|(1/2,1]"; "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const OpenIntervalSet& a, const OpenIntervalSet& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const OpenIntervalSet& a, const OpenIntervalSet& b);

 private:
  friend OpenIntervalSet normalize(std::vector<Interval> intervals);
  std::vector<Interval> parts_;
};

using SetTuple = std::vector<OpenIntervalSet>;

class ConstraintMatrix {
 public:
  ConstraintMatrix() = default;
  // Throws std::invalid_argument on ragged or empty input.
  explicit ConstraintMatrix(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Rational>>& row_data() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

bool refines(const SetTuple& sigma, const SetTuple& pi);

// One maximal grid refinement per denominator M <= fuel; see README.
std::vector<SetTuple> enumerate_refinements(const SetTuple& pi, Fuel fuel);

OpenIntervalSet complement_of_closure(const OpenIntervalSet& sigma);

// Each finite endpoint of `set` moved strictly inward to the nearest point
// of the denominator-n grid; sentinel ends are kept. Components that vanish
// are dropped.
OpenIntervalSet shrink_to_grid(const OpenIntervalSet& set, unsigned n);

std::string to_string(const SetTuple& tuple);

}  // namespace definetti

#endif  // DEFINETTI_INTERVAL_ALGEBRA_HPP_
