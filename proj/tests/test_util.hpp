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

// Generators for property tests and reference formulas shared by tests.

#ifndef DEFINETTI_TESTS_TEST_UTIL_HPP_
#define DEFINETTI_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <vector>

#include "definetti/interval_algebra.hpp"
#include "definetti/numbers.hpp"

namespace definetti::testing_util {

// SplitMix64 with helpers for small rationals and interval sets.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

  // Uniform over {p/q : lo <= p/q <= hi, 1 <= q <= max_den}, roughly.
  Rational rational(long lo, long hi, unsigned long max_den) {
    unsigned long den = 1 + below(max_den);
    long span = (hi - lo) * static_cast<long>(den);
    long num = lo * static_cast<long>(den) + static_cast<long>(below(static_cast<std::size_t>(span) + 1));
    return definetti::rational(num, den);
  }

  // Endpoint on the grid {0, 1/d, ..., 1}, or a sentinel at the ends.
  Rational endpoint(unsigned d) {
    std::size_t j = below(d + 1);
    if (j == 0) return kLowSentinel;
    if (j == d) return kHighSentinel;
    return definetti::rational(static_cast<long>(j), d);
  }

  OpenIntervalSet set(unsigned d, std::size_t max_parts) {
    std::vector<Interval> parts;
    std::size_t count = below(max_parts + 1);
    for (std::size_t i = 0; i < count; ++i) {
      Rational a = endpoint(d), b = endpoint(d);
      if (b < a) std::swap(a, b);
      parts.push_back({a, b});
    }
    return normalize(std::move(parts));
  }

  // A nonempty single interval.
  OpenIntervalSet interval(unsigned d) {
    while (true) {
      Rational a = endpoint(d), b = endpoint(d);
      if (b < a) std::swap(a, b);
      OpenIntervalSet s = OpenIntervalSet::interval(a, b);
      if (!s.empty()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

// Points of the denominator-d grid on [0,1], plus midpoints.
inline std::vector<Rational> probe_points(unsigned d) {
  std::vector<Rational> out;
  for (unsigned i = 0; i <= 2 * d; ++i) out.push_back(definetti::rational(i, 2 * d));
  return out;
}

// Pr(X_1..X_n = pattern) for the urn, drawing one ball at a time.
inline Rational urn_sequential(const Rational& alpha, const Rational& beta, const std::vector<int>& pattern) {
  Rational ones = alpha, zeros = beta, out = 1;
  for (int x : pattern) {
    out *= (x ? ones : zeros) / (ones + zeros);
    (x ? ones : zeros) += 1;
  }
  return out;
}

}  // namespace definetti::testing_util

#endif  // DEFINETTI_TESTS_TEST_UTIL_HPP_
