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

// Degree certification, exact evaluation and monomial expansion of the
// Bernstein polynomials B_m f.
//
// Certification. With one active coordinate, f = f(0) + s x + sum_t w_t (x-t)_+
// and Bernstein operators reproduce affine functions, so
// B_m f - f = sum_t w_t h_t with h_t(x) = E(Z-t)_+ - (x-t)_+, Z = Bin(m,x)/m.
// Each h_t lies in [0, min(s/2, s^2/(4|x-t|))] where s^2 = x(1-x)/m; the
// positive and negative kinks are bounded separately on a partition of
// [0,1]. With several active coordinates f is n-Lipschitz in the max norm
// and Jensen gives |B f - f| <= n sqrt(sum_i 1/(4 m_i)).

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "definetti/poly_approx.hpp"

namespace definetti {

namespace {

constexpr unsigned kCells = 512;

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

// Exact square root when r is a perfect square, else a tight upper bound.
Rational sqrt_bound(const Rational& r) {
  if (mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t())) {
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
    return Rational(a, b);
  }
  return sqrt_upper(r, 96);
}

struct Kink {
  Rational t;
  Rational w;
};

// Affine-plus-hinges decomposition of f along the single active coordinate.
struct Profile1d {
  Rational value_at_zero;
  Rational slope_at_zero;
  std::vector<Kink> kinks;
};

Profile1d profile_1d(const UrysohnPL& f, std::size_t axis) {
  const BoxUnion& region = f.region();
  Rational step(1, f.n());
  std::vector<Rational> lows, highs;
  for (const Box& b : region.boxes()) {
    const Interval& side = b.sides[axis];
    if (side.lo >= 0) lows.push_back(side.lo);
    if (side.hi <= 1) highs.push_back(side.hi);
  }
  std::vector<Rational> cand{0, 1};
  for (const Rational& a : lows) {
    cand.push_back(a);
    cand.push_back(a + step);
  }
  for (const Rational& b : highs) {
    cand.push_back(b);
    cand.push_back(b - step);
  }
  for (const Rational& a : lows) {
    for (const Rational& b : highs) cand.push_back((a + b) / 2);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> pts;
  for (const Rational& c : cand) {
    if (c >= 0 && c <= 1) pts.push_back(c);
  }
  std::vector<Rational> x(region.arity(), Rational(1, 2));
  auto eval = [&](const Rational& t) {
    x[axis] = t;
    return f(x);
  };
  std::vector<Rational> vals;
  for (const Rational& p : pts) vals.push_back(eval(p));
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational mid = (pts[i] + pts[i + 1]) / 2;
    if (eval(mid) != (vals[i] + vals[i + 1]) / 2) {
      throw std::logic_error("urysohn profile: missed breakpoint");
    }
    slopes.push_back((vals[i + 1] - vals[i]) / (pts[i + 1] - pts[i]));
  }
  Profile1d out;
  out.value_at_zero = vals.front();
  out.slope_at_zero = slopes.front();
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    Rational w = slopes[i] - slopes[i - 1];
    if (w != 0) out.kinks.push_back({pts[i], w});
  }
  return out;
}

// Rigorous bound on sup_x |B_m f - f| from the hinge decomposition.
Rational kink_bound(const std::vector<Kink>& kinks, unsigned long m) {
  Rational worst = 0;
  Rational half(1, 2);
  for (unsigned c = 0; c < kCells; ++c) {
    Rational u = rational(c, kCells), v = rational(c + 1, kCells);
    Rational peak = half < u ? u : (half > v ? v : half);
    Rational s2 = peak * (1 - peak) / m;
    Rational s = sqrt_bound(s2);
    Rational pos = 0, neg = 0;
    for (const Kink& k : kinks) {
      Rational dist = k.t < u ? u - k.t : (k.t > v ? k.t - v : Rational(0));
      Rational h = s / 2;
      if (dist > 0) {
        Rational tail = s2 / (4 * dist);
        if (tail < h) h = tail;
      }
      if (k.w > 0) {
        pos += k.w * h;
      } else {
        neg -= k.w * h;
      }
    }
    worst = max_of(worst, max_of(pos, neg));
  }
  return worst;
}

double kink_bound_estimate(const std::vector<Kink>& kinks, double m) {
  double worst = 0;
  for (unsigned c = 0; c < kCells; ++c) {
    double u = double(c) / kCells, v = double(c + 1) / kCells;
    double peak = std::clamp(0.5, u, v);
    double s2 = peak * (1 - peak) / m;
    double s = std::sqrt(s2);
    double pos = 0, neg = 0;
    for (const Kink& k : kinks) {
      double t = k.t.get_d();
      double dist = t < u ? u - t : (t > v ? t - v : 0.0);
      double h = s / 2;
      if (dist > 0) h = std::min(h, s2 / (4 * dist));
      (k.w > 0 ? pos : neg) += std::abs(k.w.get_d()) * h;
    }
    worst = std::max({worst, pos, neg});
  }
  return worst;
}

unsigned long round_up(unsigned long m, unsigned long multiple) { return (m + multiple - 1) / multiple * multiple; }

unsigned long endpoint_lcm(const UrysohnPL& f, const std::vector<bool>& active) {
  std::vector<Rational> ends;
  for (const Box& b : f.region().boxes()) {
    for (std::size_t i = 0; i < b.sides.size(); ++i) {
      if (!active[i]) continue;
      if (b.sides[i].lo >= 0) ends.push_back(b.sides[i].lo);
      if (b.sides[i].hi <= 1) ends.push_back(b.sides[i].hi);
    }
  }
  Integer l = lcm_of_denominators(ends);
  if (!l.fits_ulong_p()) throw std::overflow_error("bernstein: endpoint denominators too large");
  return l.get_ui();
}

Rational jensen_bound(unsigned n, std::size_t active, unsigned long m) {
  return Rational(n) * sqrt_bound(rational(static_cast<long>(active), 4 * m));
}

// Integer Bernstein weights C(m,j) p^j (q-p)^(m-j) as prefix sums, for the
// point p/q; the common denominator is q^m.
std::vector<Integer> prefix_weights(const Rational& x, unsigned m) {
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer r = q - p;
  std::vector<Integer> pw(m + 1), rw(m + 1);
  pw[0] = 1;
  rw[0] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    pw[j] = pw[j - 1] * p;
    rw[j] = rw[j - 1] * r;
  }
  std::vector<Integer> out(m + 1);
  Integer binom = 1;
  Integer acc = 0;
  for (unsigned j = 0; j <= m; ++j) {
    if (j > 0) {
      binom *= (m - j + 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
    }
    acc += binom * pw[j] * rw[m - j];
    out[j] = acc;
  }
  return out;
}

}  // namespace

BernsteinApprox::BernsteinApprox(UrysohnPL f) : f_(std::move(f)) {
  unsigned n = f_.n();
  std::size_t k = f_.region().arity();
  std::vector<bool> active = f_.active_coordinates();
  std::size_t active_count = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  cert_.budget = Rational(1, 2 * n);
  cert_.degrees.assign(k, 0);
  if (active_count == 0) {
    cert_.method = BernsteinCertificate::Method::kConstant;
    cert_.error_bound = 0;
    return;
  }
  unsigned long multiple = endpoint_lcm(f_, active);
  unsigned long m = 0;
  std::vector<Kink> kinks;
  if (active_count == 1) {
    cert_.method = BernsteinCertificate::Method::kKinks;
    std::size_t axis = static_cast<std::size_t>(std::find(active.begin(), active.end(), true) - active.begin());
    kinks = profile_1d(f_, axis).kinks;
    // Smallest degree the floating-point estimate accepts; the exact check
    // below decides.
    double target = cert_.budget.get_d() * (1 - 1e-9);
    unsigned long hi = 2;
    while (kink_bound_estimate(kinks, double(hi)) > target) hi *= 2;
    unsigned long lo = hi / 2;
    while (hi - lo > 1) {
      unsigned long mid = lo + (hi - lo) / 2;
      (kink_bound_estimate(kinks, double(mid)) > target ? lo : hi) = mid;
    }
    m = round_up(std::max(hi, 2UL), multiple);
  } else {
    cert_.method = BernsteinCertificate::Method::kJensen;
    unsigned long n4 = static_cast<unsigned long>(n) * n * n * n;
    m = round_up(active_count * n4, multiple);
  }
  for (unsigned attempt = 0; attempt <= kMaxEscalations; ++attempt) {
    Rational bound = jensen_bound(n, active_count, m);
    if (active_count == 1) bound = min_of(bound, kink_bound(kinks, m));
    if (bound <= cert_.budget) {
      cert_.error_bound = bound;
      cert_.escalations = attempt;
      if (m > 0xffffffffUL) throw std::overflow_error("bernstein: degree overflow");
      for (std::size_t i = 0; i < k; ++i) cert_.degrees[i] = active[i] ? static_cast<unsigned>(m) : 0;
      return;
    }
    m *= 2;
  }
  throw std::runtime_error("bernstein: certification failed after maximal degree escalation");
}

BernsteinApprox bernstein_under(const UrysohnPL& f) { return BernsteinApprox(f); }

Rational BernsteinApprox::node_value(const std::vector<unsigned>& j) const {
  const std::vector<unsigned>& m = cert_.degrees;
  std::vector<Rational> x(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) x[i] = m[i] == 0 ? Rational(1, 2) : rational(j[i], m[i]);
  for (Rational& v : x) v.canonicalize();
  return f_(x);
}

std::vector<BernsteinApprox::Level> BernsteinApprox::levels() const {
  unsigned n = f_.n();
  Rational cap(1, n);
  std::vector<Rational> s{cap};
  const std::vector<unsigned>& m = cert_.degrees;
  for (const Box& b : f_.region().boxes()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const Interval& side = b.sides[i];
      if (side.lo >= 0) {
        for (Integer j = floor_of(side.lo * m[i]) + 1;; ++j) {
          Rational v = rational(j, m[i]) - side.lo;
          v.canonicalize();
          if (v >= cap) break;
          s.push_back(v);
        }
      }
      if (side.hi <= 1) {
        for (Integer j = ceil_of(side.hi * m[i]) - 1;; --j) {
          Rational v = side.hi - rational(j, m[i]);
          v.canonicalize();
          if (v >= cap) break;
          s.push_back(v);
        }
      }
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<Level> out;
  Rational prev_value = f_.profile(0);
  for (Rational& v : s) {
    Rational value = f_.profile(v);
    out.push_back({v, value - prev_value});
    prev_value = value;
  }
  return out;
}

Rational BernsteinApprox::evaluate(const std::vector<Rational>& x) const {
  std::vector<std::vector<Rational>> axes;
  for (const Rational& v : x) axes.push_back({v});
  return evaluate_grid(axes).front();
}

std::vector<Rational> BernsteinApprox::evaluate_grid(const std::vector<std::vector<Rational>>& axes) const {
  const std::vector<unsigned>& m = cert_.degrees;
  std::size_t k = m.size();
  if (axes.size() != k) throw std::invalid_argument("evaluate_grid: axis count mismatch");
  std::size_t total = 1;
  for (const auto& a : axes) {
    for (const Rational& v : a) {
      if (v < 0 || v > 1) throw std::domain_error("evaluate_grid: point outside [0,1]");
    }
    total *= a.size();
  }
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i] > 0) act.push_back(i);
  }
  if (act.empty()) {
    std::vector<Rational> anywhere(k, Rational(1, 2));
    return std::vector<Rational>(total, f_(anywhere));
  }

  const std::vector<Box>& boxes = f_.region().boxes();
  std::size_t nb = boxes.size();
  if (nb > 12) throw std::length_error("evaluate_grid: too many boxes for inclusion-exclusion");
  std::size_t subsets = (std::size_t{1} << nb) - 1;
  std::vector<Level> lv = levels();

  // Jumps as integers over a common denominator.
  std::vector<Rational> jumps;
  for (const Level& l : lv) jumps.push_back(l.jump);
  Integer jump_den = lcm_of_denominators(jumps);
  std::vector<Integer> jump_num;
  for (const Rational& j : jumps) jump_num.push_back(j.get_num() * (jump_den / j.get_den()));

  // Index window per (active axis, level, subset).
  struct Window {
    long lo, hi;
  };
  std::vector<std::vector<Window>> windows(act.size());
  for (std::size_t a = 0; a < act.size(); ++a) {
    std::size_t i = act[a];
    long mi = static_cast<long>(m[i]);
    windows[a].resize(lv.size() * subsets);
    for (std::size_t l = 0; l < lv.size(); ++l) {
      std::vector<Window> per_box(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        const Interval& side = boxes[b].sides[i];
        long lo = 0, hi = mi;
        if (side.lo >= 0) lo = std::max(lo, ceil_of((side.lo + lv[l].s) * m[i]).get_si());
        if (side.hi <= 1) hi = std::min(hi, floor_of((side.hi - lv[l].s) * m[i]).get_si());
        per_box[b] = {lo, hi};
      }
      for (std::size_t s = 1; s <= subsets; ++s) {
        Window w{0, mi};
        for (std::size_t b = 0; b < nb; ++b) {
          if (s >> b & 1) {
            w.lo = std::max(w.lo, per_box[b].lo);
            w.hi = std::min(w.hi, per_box[b].hi);
          }
        }
        windows[a][l * subsets + (s - 1)] = w;
      }
    }
  }

  // Window weights per (active axis, axis value).
  std::vector<std::vector<std::vector<Integer>>> mass(act.size());
  std::vector<std::vector<Integer>> denom(act.size());
  for (std::size_t a = 0; a < act.size(); ++a) {
    std::size_t i = act[a];
    for (const Rational& v : axes[i]) {
      std::vector<Integer> pre = prefix_weights(v, m[i]);
      std::vector<Integer> sums(windows[a].size());
      for (std::size_t w = 0; w < windows[a].size(); ++w) {
        const Window& win = windows[a][w];
        if (win.lo > win.hi) continue;
        sums[w] = pre[static_cast<std::size_t>(win.hi)];
        if (win.lo > 0) sums[w] -= pre[static_cast<std::size_t>(win.lo - 1)];
      }
      mass[a].push_back(std::move(sums));
      Integer q;
      mpz_pow_ui(q.get_mpz_t(), v.get_den_mpz_t(), m[i]);
      denom[a].push_back(q);
    }
  }

  // Values over the active sub-grid.
  std::vector<std::size_t> dims;
  std::size_t act_total = 1;
  for (std::size_t i : act) {
    dims.push_back(axes[i].size());
    act_total *= axes[i].size();
  }
  Rational base = f_.profile(0);
  std::vector<Rational> act_values(act_total);
  std::vector<std::size_t> idx(act.size(), 0);
  Integer acc, term, prod;
  for (std::size_t flat = 0; flat < act_total; ++flat) {
    acc = 0;
    for (std::size_t l = 0; l < lv.size(); ++l) {
      term = 0;
      for (std::size_t s = 1; s <= subsets; ++s) {
        std::size_t w = l * subsets + (s - 1);
        prod = mass[0][idx[0]][w];
        for (std::size_t a = 1; a < act.size() && prod != 0; ++a) prod *= mass[a][idx[a]][w];
        if (__builtin_popcountll(s) % 2 == 1) {
          term += prod;
        } else {
          term -= prod;
        }
      }
      if (term != 0) acc += jump_num[l] * term;
    }
    Integer den = jump_den;
    for (std::size_t a = 0; a < act.size(); ++a) den *= denom[a][idx[a]];
    Rational v(acc, den);
    v.canonicalize();
    act_values[flat] = base + v;
    for (std::size_t a = act.size(); a-- > 0;) {
      if (++idx[a] < dims[a]) break;
      idx[a] = 0;
    }
  }

  // Broadcast over inactive axes.
  std::vector<Rational> out(total);
  std::vector<std::size_t> full_idx(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t af = 0;
    for (std::size_t a = 0; a < act.size(); ++a) af = af * dims[a] + full_idx[act[a]];
    out[flat] = act_values[af];
    for (std::size_t i = k; i-- > 0;) {
      if (++full_idx[i] < axes[i].size()) break;
      full_idx[i] = 0;
    }
  }
  return out;
}

std::size_t BernsteinApprox::monomial_count() const {
  std::size_t count = 1;
  for (unsigned d : cert_.degrees) {
    if (count > (std::size_t{1} << 40) / (d + 1)) return std::size_t{1} << 40;
    count *= d + 1;
  }
  return count;
}

Polynomial BernsteinApprox::monomials(std::size_t max_terms) const {
  const std::vector<unsigned>& m = cert_.degrees;
  std::size_t k = m.size();
  if (monomial_count() > max_terms) throw std::length_error("bernstein: monomial expansion over budget");
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i] > 0) act.push_back(i);
  }
  Polynomial out(k);
  if (act.empty()) {
    std::vector<Rational> anywhere(k, Rational(1, 2));
    out.add_term(Exponents(k, 0), f_(anywhere));
    return out;
  }
  unsigned long lcm_mn = f_.n();
  for (std::size_t i : act) {
    Integer l;
    mpz_lcm_ui(l.get_mpz_t(), Integer(lcm_mn).get_mpz_t(), m[i]);
    lcm_mn = l.get_ui();
  }
  Integer scale(lcm_mn);
  auto scaled = [&](const Rational& v) {
    Rational s = v * scale;
    if (s.get_den() != 1) throw std::logic_error("bernstein: node value off the expected grid");
    return s.get_num();
  };

  if (act.size() == 1) {
    // c_0 = b_0, c_1 = m (b_1 - b_0), and for i >= 2
    // c_i = C(m,i) sum_j (-1)^(i-2-j) C(i-2,j) D2_j with D2_j = b_{j+2} - 2 b_{j+1} + b_j,
    // which vanishes unless a kink lies in (j/m, (j+2)/m).
    std::size_t axis = act.front();
    unsigned mm = m[axis];
    std::vector<unsigned> node(k, 0);
    auto b = [&](unsigned j) {
      node[axis] = j;
      return scaled(node_value(node));
    };
    Profile1d prof = profile_1d(f_, axis);
    std::vector<unsigned> spots;
    for (const Kink& kk : prof.kinks) {
      long base_j = floor_of(kk.t * mm).get_si();
      for (long j = base_j - 1; j <= base_j; ++j) {
        if (j >= 0 && j + 2 <= static_cast<long>(mm)) spots.push_back(static_cast<unsigned>(j));
      }
    }
    std::sort(spots.begin(), spots.end());
    spots.erase(std::unique(spots.begin(), spots.end()), spots.end());
    struct Second {
      unsigned j;
      Integer d2;
      Integer binom;  // C(i-2, j) for the current i
    };
    std::vector<Second> seconds;
    for (unsigned j : spots) {
      Integer d2 = b(j + 2) - 2 * b(j + 1) + b(j);
      if (d2 != 0) seconds.push_back({j, d2, 0});
    }
    Integer b0 = b(0);
    Exponents e(k, 0);
    out.add_term(e, rational(b0, scale));
    if (mm >= 1) {
      e[axis] = 1;
      out.add_term(e, Rational(Integer(mm) * (b(1) - b0), scale));
    }
    Integer outer = mm;  // C(m, i), starting from C(m, 1)
    Integer sum;
    for (unsigned i = 2; i <= mm; ++i) {
      outer *= (mm - i + 1);
      mpz_divexact_ui(outer.get_mpz_t(), outer.get_mpz_t(), i);
      sum = 0;
      for (Second& s : seconds) {
        if (s.j + 2 > i) break;
        if (s.j + 2 == i) {
          s.binom = 1;
        } else {
          // C(i-2, j) = C(i-3, j) (i-2) / (i-2-j)
          s.binom *= (i - 2);
          mpz_divexact_ui(s.binom.get_mpz_t(), s.binom.get_mpz_t(), i - 2 - s.j);
        }
        if ((i - 2 - s.j) % 2 == 0) {
          sum += s.binom * s.d2;
        } else {
          sum -= s.binom * s.d2;
        }
      }
      if (sum == 0) continue;
      Rational c(outer * sum, scale);
      c.canonicalize();
      e[axis] = i;
      out.add_term(e, c);
    }
    return out;
  }

  // Dense tensor of node values, then forward differences along each axis.
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (std::size_t i : act) {
    dims.push_back(m[i] + 1);
    total *= m[i] + 1;
  }
  std::vector<Integer> grid(total);
  {
    std::vector<unsigned> node(k, 0);
    std::vector<std::size_t> idx(act.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      for (std::size_t a = 0; a < act.size(); ++a) node[act[a]] = static_cast<unsigned>(idx[a]);
      grid[flat] = scaled(node_value(node));
      for (std::size_t a = act.size(); a-- > 0;) {
        if (++idx[a] < dims[a]) break;
        idx[a] = 0;
      }
    }
  }
  std::size_t stride = total;
  for (std::size_t a = 0; a < act.size(); ++a) {
    std::size_t len = dims[a];
    stride /= len;
    std::size_t block = len * stride;
    unsigned mi = m[act[a]];
    std::vector<Integer> binoms(len);
    for (unsigned e = 0; e <= mi; ++e) binoms[e] = binomial(mi, e);
    for (std::size_t start = 0; start < total; start += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        std::size_t base = start + off;
        for (std::size_t e = 1; e < len; ++e) {
          for (std::size_t j = len - 1; j >= e; --j) {
            grid[base + j * stride] -= grid[base + (j - 1) * stride];
          }
        }
        for (std::size_t e = 0; e < len; ++e) grid[base + e * stride] *= binoms[e];
      }
    }
  }
  std::vector<std::size_t> idx(act.size(), 0);
  Exponents e(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (grid[flat] != 0) {
      for (std::size_t a = 0; a < act.size(); ++a) e[act[a]] = static_cast<unsigned>(idx[a]);
      Rational c(grid[flat], scale);
      c.canonicalize();
      out.add_term(e, c);
    }
    for (std::size_t a = act.size(); a-- > 0;) {
      if (++idx[a] < dims[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

}  // namespace definetti
