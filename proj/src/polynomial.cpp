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

#include <algorithm>
#include <cstdint>
#include <list>
#include <mutex>
#include <stdexcept>

#include "definetti/poly_approx.hpp"

namespace definetti {

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Exponents Polynomial::max_degrees() const {
  Exponents out(arity_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

// With x_i = a_i / b_i and D a common denominator of the coefficients,
// p(x) = sum_e (D c_e) prod_i a_i^{e_i} b_i^{M_i - e_i} / (D prod_i b_i^{M_i}),
// so the sum runs over integers and no term pays for a gcd.
Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != arity_) throw std::invalid_argument("Polynomial: point arity mismatch");
  Exponents top = max_degrees();
  std::vector<std::vector<Integer>> weights(arity_);
  Integer point_den = 1;
  for (std::size_t i = 0; i < arity_; ++i) {
    const Integer& a = x[i].get_num();
    const Integer& b = x[i].get_den();
    std::vector<Integer>& w = weights[i];
    w.resize(top[i] + 1);
    Integer bp = 1;
    for (unsigned d = top[i] + 1; d-- > 0;) {
      w[d] = bp;
      bp *= b;
    }
    Integer ap = 1;
    for (unsigned d = 0; d <= top[i]; ++d) {
      w[d] *= ap;
      ap *= a;
    }
    Integer bm;
    mpz_pow_ui(bm.get_mpz_t(), b.get_mpz_t(), top[i]);
    point_den *= bm;
  }
  Integer common = 1;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(common.get_mpz_t(), c.get_den_mpz_t())) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  Integer sum = 0, t;
  for (const auto& [e, c] : terms_) {
    mpz_divexact(t.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    t *= c.get_num();
    for (std::size_t i = 0; i < arity_; ++i) t *= weights[i][e[i]];
    sum += t;
  }
  return rational(sum, common * point_den);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("Polynomial: arity mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("Polynomial: arity mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("Polynomial: arity mismatch");
  Polynomial out(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < arity_; ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::dump() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\t';
    out += to_fraction_string(c);
    out += '\n';
  }
  return out;
}

std::pair<Polynomial, Polynomial> split_signs(const Polynomial& p) {
  Polynomial plus(p.arity());
  Polynomial minus(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (c > 0) {
      plus.add_term(e, c);
    } else {
      minus.add_term(e, -c);
    }
  }
  return {plus, minus};
}

Polynomial q_polynomial(const Polynomial& p) {
  std::size_t k = p.arity();
  Polynomial q(2 * k);
  for (const auto& [e, c] : p.terms()) {
    Exponents wide(2 * k, 0);
    std::copy(e.begin(), e.end(), c > 0 ? wide.begin() : wide.begin() + static_cast<std::ptrdiff_t>(k));
    q.add_term(wide, c);
  }
  return q;
}

namespace {

bool side_within(const Interval& inner, const Interval& outer) { return outer.lo <= inner.lo && inner.hi <= outer.hi; }

bool box_less(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.sides.size(); ++i) {
    int c = cmp(a.sides[i].lo, b.sides[i].lo);
    if (c == 0) c = cmp(a.sides[i].hi, b.sides[i].hi);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

BoxUnion::BoxUnion(std::size_t arity, std::vector<Box> boxes) : arity_(arity) {
  std::vector<Box> clean;
  for (Box& b : boxes) {
    if (b.sides.size() != arity) throw std::invalid_argument("BoxUnion: box arity mismatch");
    bool empty = false;
    for (Interval& side : b.sides) {
      OpenIntervalSet s = OpenIntervalSet::interval(side.lo, side.hi);
      if (s.empty()) {
        empty = true;
        break;
      }
      side = s.intervals().front();
    }
    if (!empty) clean.push_back(std::move(b));
  }
  std::sort(clean.begin(), clean.end(), box_less);
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  for (std::size_t i = 0; i < clean.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < clean.size() && !covered; ++j) {
      if (i == j) continue;
      bool inside = true;
      for (std::size_t d = 0; d < arity && inside; ++d) inside = side_within(clean[i].sides[d], clean[j].sides[d]);
      covered = inside;
    }
    if (!covered) boxes_.push_back(clean[i]);
  }
}

BoxUnion BoxUnion::from_tuple(const SetTuple& sigma) {
  if (sigma.empty()) throw std::invalid_argument("BoxUnion: empty tuple");
  std::vector<Box> boxes{Box{}};
  for (const OpenIntervalSet& coord : sigma) {
    std::vector<Box> next;
    for (const Box& b : boxes) {
      for (const Interval& iv : coord.intervals()) {
        Box wider = b;
        wider.sides.push_back(iv);
        next.push_back(std::move(wider));
      }
    }
    boxes = std::move(next);
  }
  return BoxUnion(sigma.size(), std::move(boxes));
}

BoxUnion BoxUnion::from_constraints(const ConstraintMatrix& c) {
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    Box b;
    for (std::size_t j = 0; j < c.cols(); ++j) b.sides.push_back({c.at(i, j), kHighSentinel});
    boxes.push_back(std::move(b));
  }
  return BoxUnion(c.cols(), std::move(boxes));
}

bool BoxUnion::contains(const std::vector<Rational>& x) const {
  if (x.size() != arity_) throw std::invalid_argument("BoxUnion: point arity mismatch");
  for (const Box& b : boxes_) {
    bool in = true;
    for (std::size_t i = 0; i < arity_ && in; ++i) in = x[i] >= 0 && x[i] <= 1 && b.sides[i].contains(x[i]);
    if (in) return true;
  }
  return false;
}

std::string BoxUnion::key() const {
  std::string out = std::to_string(arity_) + ":";
  for (const Box& b : boxes_) {
    out += '[';
    for (const Interval& s : b.sides) out += s.lo.get_str() + "," + s.hi.get_str() + ";";
    out += ']';
  }
  return out;
}

namespace {

std::size_t footprint(const Polynomial& p) {
  std::size_t bytes = 0;
  for (const auto& [e, c] : p.terms()) {
    bytes += 96 + e.size() * sizeof(unsigned);
    bytes += 8 * (mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t()));
  }
  return bytes;
}

class PolynomialCache {
 public:
  static PolynomialCache& instance() {
    static PolynomialCache cache;
    return cache;
  }

  std::shared_ptr<const Polynomial> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
      if (it->key == key) {
        entries_.splice(entries_.begin(), entries_, it);
        return entries_.front().poly;
      }
    }
    return nullptr;
  }

  void store(const std::string& key, std::shared_ptr<const Polynomial> poly) {
    std::size_t bytes = footprint(*poly);
    if (bytes > kBudget / 2) return;
    std::lock_guard<std::mutex> lock(mu_);
    entries_.push_front({key, std::move(poly), bytes});
    used_ += bytes;
    while (used_ > kBudget && !entries_.empty()) {
      used_ -= entries_.back().bytes;
      entries_.pop_back();
    }
  }

  std::shared_ptr<const BernsteinApprox> approx(unsigned n, const BoxUnion& region) {
    std::string key = std::to_string(n) + "|" + region.key();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = approx_.find(key);
      if (it != approx_.end()) return it->second;
    }
    auto made = std::make_shared<const BernsteinApprox>(UrysohnPL(n, region));
    std::lock_guard<std::mutex> lock(mu_);
    return approx_.emplace(key, std::move(made)).first->second;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
    approx_.clear();
    used_ = 0;
  }

 private:
  struct Entry {
    std::string key;
    std::shared_ptr<const Polynomial> poly;
    std::size_t bytes;
  };
  static constexpr std::size_t kBudget = std::size_t{1} << 30;

  std::mutex mu_;
  std::list<Entry> entries_;
  std::map<std::string, std::shared_ptr<const BernsteinApprox>> approx_;
  std::size_t used_ = 0;
};

}  // namespace

std::shared_ptr<const BernsteinApprox> bernstein_for(unsigned n, const BoxUnion& region) {
  if (n < 2) throw std::invalid_argument("bernstein_for: n must be at least 2");
  return PolynomialCache::instance().approx(n, region);
}

std::shared_ptr<const Polynomial> indicator_poly(unsigned n, const BoxUnion& region, std::size_t max_terms) {
  if (n == 0) throw std::invalid_argument("indicator_poly: n must be positive");
  if (n == 1) return std::make_shared<const Polynomial>(region.arity());
  std::string key = std::to_string(n) + "|" + region.key();
  PolynomialCache& cache = PolynomialCache::instance();
  if (auto hit = cache.find(key)) return hit;
  auto poly = std::make_shared<const Polynomial>(bernstein_for(n, region)->monomials(max_terms));
  cache.store(key, poly);
  return poly;
}

std::shared_ptr<const Polynomial> indicator_poly(unsigned n, const SetTuple& sigma) {
  return indicator_poly(n, BoxUnion::from_tuple(sigma));
}

std::shared_ptr<const Polynomial> indicator_poly_for_constraints(unsigned n, const ConstraintMatrix& c) {
  return indicator_poly(n, BoxUnion::from_constraints(c));
}

void clear_polynomial_cache() { PolynomialCache::instance().clear(); }

}  // namespace definetti
