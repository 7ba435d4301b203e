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

#ifndef DEFINETTI_NUMBERS_HPP_
#define DEFINETTI_NUMBERS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace definetti {

using Rational = mpq_class;
using Integer = mpz_class;

// The single enumeration index shared by every bound stream.
using Fuel = std::uint32_t;

// Accepts "p/q", "p", with optional sign and surrounding blanks. Decimal
// notation is rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Always "p/q" (integers print as "p/1").
std::string to_fraction_string(const Rational& r);

// Decimal expansion truncated toward zero.
std::string to_decimal_string(const Rational& r, int places = 10);

Rational rational(long num, unsigned long den = 1);
Rational rational(const Integer& num, const Integer& den);

Integer binomial(unsigned long n, unsigned long k);

// Pairwise summation; much cheaper than left folds when terms carry
// unrelated large denominators.
Rational exact_sum(std::vector<Rational> terms);

// A rational s with s >= sqrt(r) and s - sqrt(r) <= 2^-precision_bits
// (relative to r's scale). r must be nonnegative.
Rational sqrt_upper(const Rational& r, unsigned precision_bits = 64);

Integer lcm_of_denominators(const std::vector<Rational>& values);

inline const Rational& min_of(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Clamps into [0, 1].
Rational clamp_unit(const Rational& r);

}  // namespace definetti

#endif  // DEFINETTI_NUMBERS_HPP_
