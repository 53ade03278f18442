// Copyright 2026 The maxvar Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Test-only reference implementations. These stay independent of the library
// paths they certify: pointwise values come from direct window enumeration,
// and the variation oracle sums |differences| over a wide window closed off by
// an observed monotone-tail certificate, with no crossing analysis.

#ifndef MAXVAR_TESTS_ORACLES_HPP
#define MAXVAR_TESTS_ORACLES_HPP

#include "maxvar/maximal_discrete.hpp"
#include "maxvar/rational.hpp"
#include "maxvar/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace maxvar::oracle {

/// Plain sup over all centered windows with radius m <= m_max, together with
/// the window->Z limit. Exact equality with the library requires m_max to
/// reach the straddle radius of n.
inline Rational m_centered_full(const BVSequence& g, long long n, long long m_max) {
  BVSequence h = abs_of(g);
  Rational best = h.value_at(n);
  Rational sum = best;
  for (long long m = 1; m <= m_max; ++m) {
    sum += h.value_at(n - m) + h.value_at(n + m);
    best = std::max(best, Rational(sum / Rational(2 * m + 1)));
  }
  return std::max(best, Rational((h.left_tail + h.right_tail) / 2));
}

inline Rational m_one_sided_full(const BVSequence& g, long long n, long long m_max) {
  BVSequence h = abs_of(g);
  Rational best = h.value_at(n);
  Rational sum = best;
  for (long long m = 1; m <= m_max; ++m) {
    sum += h.value_at(n + m);
    best = std::max(best, Rational(sum / Rational(m + 1)));
  }
  return std::max(best, h.right_tail);
}

inline Rational m_uncentered_full(const BVSequence& g, long long n, long long reach) {
  BVSequence h = abs_of(g);
  Rational best = h.value_at(n);
  for (long long l = n - reach; l <= n; ++l) {
    Rational sum = 0;
    for (long long y = l; y < n; ++y) sum += h.value_at(y);
    for (long long r = n; r <= n + reach; ++r) {
      sum += h.value_at(r);
      best = std::max(best, Rational(sum / Rational(r - l + 1)));
    }
  }
  return std::max({best, h.left_tail, h.right_tail});
}

namespace detail {

struct Frac {
  Integer num;
  long long den = 1;
};

inline bool less(const Frac& x, const Frac& y) {
  return x.num * y.den < y.num * x.den;
}

}  // namespace detail

/// Brute-force Var(MG) for the centered operator: evaluates MG at every
/// integer in [-window, window] by direct window enumeration over scaled
/// integers, sums |differences|, checks that the stretches beyond the core are
/// monotone, and closes the tails with |MG(+-window) - MG(+-inf)|.
inline Rational var_centered_bruteforce(const BVSequence& g, long long window = 10000) {
  BVSequence h = abs_of(g);
  long long cb = h.core_begin(), ce = h.core_end();
  if (h.core.empty() && h.left_tail == h.right_tail) return Rational(0);
  if (window < std::max(int_abs(Integer(cb)), int_abs(Integer(ce))) + 2)
    throw std::invalid_argument("oracle window too small for this core");

  // Scale everything to integers.
  Integer scale = denominator(h.left_tail);
  scale = boost::multiprecision::lcm(scale, denominator(h.right_tail));
  for (const Rational& v : h.core) scale = boost::multiprecision::lcm(scale, denominator(v));
  Integer A = numerator(h.left_tail) * (scale / denominator(h.left_tail));
  Integer B = numerator(h.right_tail) * (scale / denominator(h.right_tail));
  std::vector<Integer> pre(h.core.size() + 1, Integer(0));
  for (std::size_t i = 0; i < h.core.size(); ++i)
    pre[i + 1] = pre[i] + numerator(h.core[i]) * (scale / denominator(h.core[i]));

  auto range_sum = [&](long long lo, long long hi) -> Integer {
    if (lo > hi) return Integer(0);
    Integer total = 0;
    if (lo < cb) total += Integer(std::min(hi, cb - 1) - lo + 1) * A;
    long long i = std::max(lo, cb), j = std::min(hi, ce - 1);
    if (i <= j)
      total += pre[static_cast<std::size_t>(j - cb + 1)] - pre[static_cast<std::size_t>(i - cb)];
    if (hi >= ce) total += Integer(hi - std::max(lo, ce) + 1) * B;
    return total;
  };
  auto value_int = [&](long long n) -> Integer {
    if (n < cb) return A;
    if (n >= ce) return B;
    return pre[static_cast<std::size_t>(n - cb + 1)] - pre[static_cast<std::size_t>(n - cb)];
  };

  auto eval = [&](long long n) -> detail::Frac {
    detail::Frac best{value_int(n), 1};
    auto consider = [&](long long m) {
      if (m < 1) return;
      detail::Frac cand{range_sum(n - m, n + m), 2 * m + 1};
      if (detail::less(best, cand)) best = cand;
    };
    long long m_star = std::max({n - cb + 1, ce - n, 0ll});
    // Every window with an edge in the transition zone, plus the straddle
    // radius; between those the average moves monotonically.
    for (long long e = cb - 1; e <= ce; ++e) {
      if (n - e >= 1 && n - e <= m_star) consider(n - e);
      if (e - n >= 1 && e - n <= m_star) consider(e - n);
    }
    consider(m_star);
    detail::Frac lim{A + B, 2};
    if (detail::less(best, lim)) best = lim;
    return best;
  };

  Rational var = 0;
  detail::Frac prev = eval(-window);
  detail::Frac first = prev;
  int left_dir = 0, right_dir = 0;
  for (long long n = -window + 1; n <= window; ++n) {
    detail::Frac cur = eval(n);
    Integer diff_num = cur.num * prev.den - prev.num * cur.den;
    if (diff_num != 0) var += Rational(int_abs(diff_num), Integer(cur.den) * prev.den);
    // Monotone-tail certificate: a single direction on each beyond-core stretch.
    if (n <= cb - 1) {
      int d = diff_num.sign();
      if (d != 0) {
        if (left_dir == 0)
          left_dir = d;
        else if (left_dir != d)
          throw std::logic_error("monotone-tail certificate failed on the left");
      }
    }
    if (n > ce) {
      int d = diff_num.sign();
      if (d != 0) {
        if (right_dir == 0)
          right_dir = d;
        else if (right_dir != d)
          throw std::logic_error("monotone-tail certificate failed on the right");
      }
    }
    prev = cur;
  }
  Rational scale_rat(scale);
  var /= scale_rat;

  Rational left_lim = std::max(h.left_tail, Rational((h.left_tail + h.right_tail) / 2));
  Rational right_lim = std::max(h.right_tail, Rational((h.left_tail + h.right_tail) / 2));
  var += rat_abs(Rational(first.num, Integer(first.den) * scale) - left_lim);
  var += rat_abs(Rational(prev.num, Integer(prev.den) * scale) - right_lim);
  return var;
}

}  // namespace maxvar::oracle

#endif  // MAXVAR_TESTS_ORACLES_HPP
