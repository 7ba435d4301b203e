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

#include "definetti/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace definetti {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int places) {
  Integer num = abs(r.get_num());
  const Integer& den = r.get_den();
  Integer whole = num / den;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Integer frac = ((num - whole * den) * scale) / den;
  std::string out;
  if (r < 0 && (whole != 0 || frac != 0)) out += '-';
  out += whole.get_str();
  if (places > 0) {
    std::string digits = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

Rational rational(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational exact_sum(std::vector<Rational> terms) {
  if (terms.empty()) return 0;
  while (terms.size() > 1) {
    std::size_t half = terms.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
      terms[i] = terms[2 * i] + terms[2 * i + 1];
    }
    if (terms.size() % 2 == 1) {
      terms[half] = std::move(terms.back());
      terms.resize(half + 1);
    } else {
      terms.resize(half);
    }
  }
  return terms.front();
}

Rational sqrt_upper(const Rational& r, unsigned precision_bits) {
  if (r < 0) throw std::domain_error("sqrt_upper of a negative number");
  if (r == 0) return 0;
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^b before the integer root.
  Integer scaled = r.get_num() * r.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * precision_bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  root += 1;
  Integer den = r.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), precision_bits);
  Rational out(root, den);
  out.canonicalize();
  return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer out = 1;
  for (const Rational& v : values) {
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den().get_mpz_t());
  }
  return out;
}

Rational clamp_unit(const Rational& r) {
  if (r < 0) return 0;
  if (r > 1) return 1;
  return r;
}

}  // namespace definetti
