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

// Polynomials that approximate indicators of box unions from below.
//
// For n >= 2 and a region S (finite union of boxes in [0,1]^k) the target is
// the piecewise-linear function
//
//   f(x) = min(1, n * d(x)) - 1/n,
//
// where d(x) is the largest, over the boxes of S, max-norm distance from x to
// the complement of that box (faces lying on the boundary of [0,1]^k do not
// count). A tensor-product Bernstein polynomial of f with a certified error of
// at most 1/(2n) then satisfies -1 <= p <= 1_S.

#ifndef DEFINETTI_POLY_APPROX_HPP_
#define DEFINETTI_POLY_APPROX_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "definetti/interval_algebra.hpp"
#include "definetti/numbers.hpp"

namespace definetti {

using Exponents = std::vector<unsigned>;

class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 1) : arity_(arity) {}
  static Polynomial constant(std::size_t arity, const Rational& c);

  std::size_t arity() const { return arity_; }
  // Adds c to the coefficient of x^e; zero coefficients are erased.
  void add_term(const Exponents& e, const Rational& c);
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  Exponents max_degrees() const;

  Rational evaluate(const std::vector<Rational>& x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // One line per term: exponents separated by spaces, a tab, then "p/q".
  std::string dump() const;

 private:
  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

// A nonempty open box; sides are canonical single intervals.
struct Box {
  std::vector<Interval> sides;
  friend bool operator==(const Box& a, const Box& b) { return a.sides == b.sides; }
};

class BoxUnion {
 public:
  explicit BoxUnion(std::size_t arity = 1) : arity_(arity) {}
  // Drops empty boxes and boxes contained in another one.
  BoxUnion(std::size_t arity, std::vector<Box> boxes);

  // Product expansion of a tuple of interval unions.
  static BoxUnion from_tuple(const SetTuple& sigma);
  // U_i prod_j (c_ij, 2): the widened up-set of a constraint matrix.
  static BoxUnion from_constraints(const ConstraintMatrix& c);

  std::size_t arity() const { return arity_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }
  bool contains(const std::vector<Rational>& x) const;
  // Canonical text, used as a cache key.
  std::string key() const;

 private:
  std::size_t arity_;
  std::vector<Box> boxes_;
};

class UrysohnPL {
 public:
  // Throws std::invalid_argument for n < 2.
  UrysohnPL(unsigned n, BoxUnion region);

  unsigned n() const { return n_; }
  const BoxUnion& region() const { return region_; }

  // The surrogate distance, capped at 1.
  Rational distance(const std::vector<Rational>& x) const;
  Rational operator()(const std::vector<Rational>& x) const;
  // Value as a function of the capped distance.
  Rational profile(const Rational& d) const;

  // Coordinates on which f actually depends.
  std::vector<bool> active_coordinates() const;

 private:
  unsigned n_;
  BoxUnion region_;
};

UrysohnPL urysohn(unsigned n, const SetTuple& sigma);

struct BernsteinCertificate {
  enum class Method { kConstant, kKinks, kJensen };

  std::vector<unsigned> degrees;  // per coordinate, 0 where f is constant
  Method method = Method::kConstant;
  Rational error_bound;           // certified bound on sup |B f - f|
  Rational budget;                // 1/(2n)
  unsigned escalations = 0;       // degree doublings after the first attempt

  bool passed() const { return error_bound <= budget; }
};

// The Bernstein polynomial of an UrysohnPL with a certified degree.
class BernsteinApprox {
 public:
  // Throws std::runtime_error if certification does not succeed within
  // kMaxEscalations doublings (a bug, never a valid outcome).
  explicit BernsteinApprox(UrysohnPL f);

  const UrysohnPL& target() const { return f_; }
  const BernsteinCertificate& certificate() const { return cert_; }
  const std::vector<unsigned>& degrees() const { return cert_.degrees; }

  // f at the node (j_1/m_1, ..., j_k/m_k); inactive coordinates ignored.
  Rational node_value(const std::vector<unsigned>& j) const;

  // Exact value at one point, computed from the Bernstein form.
  Rational evaluate(const std::vector<Rational>& x) const;
  // Values on the tensor grid axes[0] x ... x axes[k-1], last axis fastest.
  std::vector<Rational> evaluate_grid(const std::vector<std::vector<Rational>>& axes) const;

  // Number of monomials of the expanded polynomial (product of m_i + 1).
  std::size_t monomial_count() const;
  // Monomial expansion; throws std::length_error above max_terms.
  Polynomial monomials(std::size_t max_terms = kDefaultMaxTerms) const;

  static constexpr unsigned kMaxEscalations = 8;
  static constexpr std::size_t kDefaultMaxTerms = 4'000'000;

 private:
  struct Level {
    Rational s;      // threshold on the capped distance
    Rational jump;   // profile(s) - profile(previous s)
  };
  std::vector<Level> levels() const;

  UrysohnPL f_;
  BernsteinCertificate cert_;
};

BernsteinApprox bernstein_under(const UrysohnPL& f);

std::pair<Polynomial, Polynomial> split_signs(const Polynomial& p);

// q(x, y) = p_plus(x) - p_minus(y), arity 2k.
Polynomial q_polynomial(const Polynomial& p);

// The array member p_{n,S}: zero for n = 1, the expanded Bernstein
// polynomial otherwise. Memoized with a memory budget.
std::shared_ptr<const Polynomial> indicator_poly(unsigned n, const BoxUnion& region,
                                                 std::size_t max_terms = BernsteinApprox::kDefaultMaxTerms);
std::shared_ptr<const Polynomial> indicator_poly(unsigned n, const SetTuple& sigma);
std::shared_ptr<const Polynomial> indicator_poly_for_constraints(unsigned n, const ConstraintMatrix& c);

// Certified degree data without expanding (cheap; memoized).
std::shared_ptr<const BernsteinApprox> bernstein_for(unsigned n, const BoxUnion& region);

void clear_polynomial_cache();

}  // namespace definetti

#endif  // DEFINETTI_POLY_APPROX_HPP_
