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

#include <stdexcept>

#include "definetti/poly_approx.hpp"

namespace definetti {

UrysohnPL::UrysohnPL(unsigned n, BoxUnion region) : n_(n), region_(std::move(region)) {
  if (n < 2) throw std::invalid_argument("urysohn: n must be at least 2 (use the zero polynomial for n = 1)");
}

Rational UrysohnPL::distance(const std::vector<Rational>& x) const {
  if (x.size() != region_.arity()) throw std::invalid_argument("urysohn: point arity mismatch");
  Rational best = 0;
  for (const Box& b : region_.boxes()) {
    Rational d = 1;
    bool inside = true;
    for (std::size_t i = 0; i < x.size() && inside; ++i) {
      const Interval& side = b.sides[i];
      if (x[i] < 0 || x[i] > 1 || !side.contains(x[i])) {
        inside = false;
        break;
      }
      if (side.lo >= 0 && x[i] - side.lo < d) d = x[i] - side.lo;
      if (side.hi <= 1 && side.hi - x[i] < d) d = side.hi - x[i];
    }
    if (inside && d > best) best = d;
  }
  return best;
}

Rational UrysohnPL::profile(const Rational& d) const {
  Rational scaled = d * n_;
  if (scaled > 1) scaled = 1;
  if (scaled < 0) scaled = 0;
  return scaled - Rational(1, n_);
}

Rational UrysohnPL::operator()(const std::vector<Rational>& x) const { return profile(distance(x)); }

std::vector<bool> UrysohnPL::active_coordinates() const {
  std::vector<bool> active(region_.arity(), false);
  for (const Box& b : region_.boxes()) {
    for (std::size_t i = 0; i < b.sides.size(); ++i) {
      if (b.sides[i].lo >= 0 || b.sides[i].hi <= 1) active[i] = true;
    }
  }
  return active;
}

UrysohnPL urysohn(unsigned n, const SetTuple& sigma) { return UrysohnPL(n, BoxUnion::from_tuple(sigma)); }

}  // namespace definetti
