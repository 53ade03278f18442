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

#ifndef MAXVAR_MAXIMAL_DISCRETE_HPP
#define MAXVAR_MAXIMAL_DISCRETE_HPP

#include "maxvar/rational.hpp"
#include "maxvar/roots.hpp"
#include "maxvar/sequence.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace maxvar {

enum class MaxVariant { centered, one_sided, uncentered };

/// Maximizing window reported alongside a value; ties break toward the
/// smallest window. `limit` marks an unattained supremum (window -> infinity).
struct DiscreteWindow {
  long long lo = 0;
  long long hi = 0;
  bool limit = false;
};

/// One member of the finite family whose max equals MG(n) beyond the core on
/// one side. Anchored members pin the far window edge at `anchor`; their value
/// at n is the Mobius expression (p n + q) / (r n + s).
struct TailCandidate {
  bool constant = false;
  long long anchor = 0;
  Rational p, q, r, s;

  Rational value_at(long long n) const {
    return (p * n + q) / (r * n + s);
  }
  Rational limit() const { return r == 0 ? q / s : p / r; }
};

/// Exact evaluator for the centered / one-sided / uncentered maximal
/// operators of an eventually-constant sequence. Works on |G| internally.
class DiscreteMaximal {
 public:
  explicit DiscreteMaximal(const BVSequence& g) : h_(abs_of(g)) {
    prefix_.reserve(h_.core.size() + 1);
    prefix_.emplace_back(0);
    for (const Rational& v : h_.core) prefix_.push_back(prefix_.back() + v);
  }

  const BVSequence& abs_sequence() const { return h_; }

  /// Sum of |G| over the integer range [lo, hi]; empty when lo > hi.
  Rational sum_range(long long lo, long long hi) const {
    if (lo > hi) return Rational(0);
    Rational total = 0;
    long long cb = h_.core_begin(), ce = h_.core_end();
    if (lo < cb) total += Rational(std::min(hi, cb - 1) - lo + 1) * h_.left_tail;
    long long i = std::max(lo, cb), j = std::min(hi, ce - 1);
    if (i <= j)
      total += prefix_[static_cast<std::size_t>(j - cb + 1)] -
               prefix_[static_cast<std::size_t>(i - cb)];
    if (hi >= ce) total += Rational(hi - std::max(lo, ce) + 1) * h_.right_tail;
    return total;
  }

  Rational limit_value(Side side, MaxVariant variant = MaxVariant::centered) const {
    const Rational& a = h_.left_tail;
    const Rational& b = h_.right_tail;
    switch (variant) {
      case MaxVariant::centered: {
        Rational mid = (a + b) / 2;
        const Rational& tail = side == Side::left ? a : b;
        return std::max(tail, mid);
      }
      case MaxVariant::one_sided:
        return side == Side::right ? b : std::max(a, b);
      case MaxVariant::uncentered:
        return std::max(a, b);
    }
    return Rational(0);
  }

  Rational at(long long n, MaxVariant variant = MaxVariant::centered) const {
    return at_with_window(n, variant).first;
  }

  std::pair<Rational, DiscreteWindow> at_with_window(
      long long n, MaxVariant variant = MaxVariant::centered) const {
    switch (variant) {
      case MaxVariant::centered:
        return centered_at(n);
      case MaxVariant::one_sided:
        return one_sided_at(n);
      case MaxVariant::uncentered:
        return uncentered_at(n);
    }
    throw std::logic_error("unknown variant");
  }

 private:
  // Candidate radii for the centered sup at n: m = 0, every m that puts a
  // window edge inside the value-transition zone [cb-1, ce], and the straddle
  // radius m_star past which both edges move through constant values. Between
  // consecutive candidates the sum is linear in m, so the average is a
  // monotone Mobius arc and the sup over that stretch sits at its endpoints;
  // the sup over [m_star, inf) adds the limit (a+b)/2.
  std::vector<long long> centered_radii(long long n) const {
    long long cb = h_.core_begin(), ce = h_.core_end();
    long long m_star = std::max({n - cb + 1, ce - n, 0ll});
    std::vector<long long> ms = {0, m_star};
    for (long long e = cb - 1; e <= ce; ++e) {
      if (long long m = n - e; m >= 1 && m <= m_star) ms.push_back(m);  // left edge at e
      if (long long m = e - n; m >= 1 && m <= m_star) ms.push_back(m);  // right edge at e
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
  }

  std::pair<Rational, DiscreteWindow> centered_at(long long n) const {
    Rational best = h_.value_at(n);
    DiscreteWindow win{n, n, false};
    for (long long m : centered_radii(n)) {
      if (m == 0) continue;
      Rational avg = sum_range(n - m, n + m) / Rational(2 * m + 1);
      if (avg > best) {
        best = avg;
        win = {n - m, n + m, false};
      }
    }
    Rational lim = (h_.left_tail + h_.right_tail) / 2;
    if (lim > best) {
      best = lim;
      win = {0, 0, true};
    }
    return {best, win};
  }

  std::pair<Rational, DiscreteWindow> one_sided_at(long long n) const {
    long long cb = h_.core_begin(), ce = h_.core_end();
    long long m_star = std::max(ce - n, 0ll);
    std::vector<long long> ms = {0, m_star};
    for (long long e = cb - 1; e <= ce; ++e)
      if (long long m = e - n; m >= 1 && m <= m_star) ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    Rational best = h_.value_at(n);
    DiscreteWindow win{n, n, false};
    for (long long m : ms) {
      if (m == 0) continue;
      Rational avg = sum_range(n, n + m) / Rational(m + 1);
      if (avg > best) {
        best = avg;
        win = {n, n + m, false};
      }
    }
    if (h_.right_tail > best) {
      best = h_.right_tail;
      win = {0, 0, true};
    }
    return {best, win};
  }

  // Candidate endpoints: the point itself plus the transition zone on each
  // side; stretching an edge further through constant values is a monotone
  // Mobius move, so the far suprema are the constant tails a and b.
  std::pair<Rational, DiscreteWindow> uncentered_at(long long n) const {
    long long cb = h_.core_begin(), ce = h_.core_end();
    std::vector<long long> ls = {n}, rs = {n};
    for (long long e = cb - 1; e <= ce; ++e) {
      if (e <= n) ls.push_back(e);
      if (e >= n) rs.push_back(e);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    Rational best = h_.value_at(n);
    DiscreteWindow win{n, n, false};
    for (long long l : ls) {
      Rational base = sum_range(l, n);
      for (long long r : rs) {
        Rational total = r == n ? base : base + sum_range(n + 1, r);
        Rational avg = total / Rational(r - l + 1);
        if (avg > best || (avg == best && !win.limit && r - l < win.hi - win.lo)) {
          best = avg;
          win = {l, r, false};
        }
      }
    }
    if (h_.left_tail > best) {
      best = h_.left_tail;
      win = {0, 0, true};
    }
    if (h_.right_tail > best) {
      best = h_.right_tail;
      win = {0, 0, true};
    }
    return {best, win};
  }

  BVSequence h_;
  std::vector<Rational> prefix_;
};

inline Rational m_discrete_at(const BVSequence& g, long long n,
                              MaxVariant variant = MaxVariant::centered) {
  return DiscreteMaximal(g).at(n, variant);
}

inline Rational m_limit(const BVSequence& g, Side side,
                        MaxVariant variant = MaxVariant::centered) {
  return DiscreteMaximal(g).limit_value(side, variant);
}

/// Finite candidate family for centered MG on one side of the core: one
/// anchored curve per core position (far window edge there), the resident
/// tail constant, and the all-of-Z limit (a+b)/2. For every n beyond the core
/// on `side`, MG(n) = max over these.
inline std::vector<TailCandidate> tail_candidates(const BVSequence& g, Side side) {
  DiscreteMaximal dm(g);
  const BVSequence& h = dm.abs_sequence();
  long long cb = h.core_begin(), ce = h.core_end();
  const Rational& a = h.left_tail;
  const Rational& b = h.right_tail;
  std::vector<TailCandidate> out;
  auto push_const = [&out](const Rational& v) {
    TailCandidate c;
    c.constant = true;
    c.p = 0;
    c.q = v;
    c.r = 0;
    c.s = 1;
    out.push_back(std::move(c));
  };
  push_const(side == Side::right ? b : a);
  push_const((a + b) / 2);
  if (side == Side::right) {
    // Window [l, 2n-l] with left edge anchored at l: average is
    // b + D(l)/(2n-2l+1), D(l) = sum over [l, ce-1] of (|G|-b).
    for (long long l = cb; l < ce; ++l) {
      Rational D = dm.sum_range(l, ce - 1) - Rational(ce - l) * b;
      TailCandidate c;
      c.anchor = l;
      c.p = 2 * b;
      c.q = D + b * Rational(1 - 2 * l);
      c.r = 2;
      c.s = Rational(1 - 2 * l);
      out.push_back(std::move(c));
    }
  } else {
    // Mirror: right edge anchored at r0, average a + D'(r0)/(2r0-2n+1).
    for (long long r0 = cb; r0 < ce; ++r0) {
      Rational D = dm.sum_range(cb, r0) - Rational(r0 - cb + 1) * a;
      TailCandidate c;
      c.anchor = r0;
      c.p = -2 * a;
      c.q = D + a * Rational(2 * r0 + 1);
      c.r = -2;
      c.s = Rational(2 * r0 + 1);
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace detail {

inline bool same_candidate_function(const TailCandidate& a, const TailCandidate& b) {
  return a.p * b.r == b.p * a.r &&
         a.p * b.s + a.q * b.r == b.p * a.s + b.q * a.r && a.q * b.s == b.q * a.s;
}

/// Winner-chain sweep over the right-side candidates: follows the pointwise
/// maximum from n0 rightward through its envelope switches and returns the
/// smallest integer from which one candidate stays maximal. Pairwise
/// crossings in this family are linear (the anchored curves share leading
/// coefficients), so switch abscissae are rational; a quadratic pair would be
/// handled by the conservative beyond-all-roots bound.
inline long long right_settle_point(const std::vector<TailCandidate>& cands, long long n0) {
  std::vector<const TailCandidate*> cs;
  for (const TailCandidate& c : cands) {
    bool dup = false;
    for (const TailCandidate* u : cs)
      if (same_candidate_function(*u, c)) {
        dup = true;
        break;
      }
    if (!dup) cs.push_back(&c);
  }
  auto value = [](const TailCandidate& c, const Rational& x) {
    return (c.p * x + c.q) / (c.r * x + c.s);
  };
  const TailCandidate* winner = cs.front();
  for (const TailCandidate* c : cs) {
    Rational vc = value(*c, Rational(n0)), vw = value(*winner, Rational(n0));
    if (vc > vw || (vc == vw && value(*c, Rational(n0 + 1)) > value(*winner, Rational(n0 + 1))))
      winner = c;
  }
  Rational x(n0);
  long long settle = n0;
  std::size_t cap = cs.size() * cs.size() + 2;
  for (std::size_t step = 0; step < cap; ++step) {
    std::optional<Rational> best;
    const TailCandidate* next = nullptr;
    for (const TailCandidate* c : cs) {
      if (c == winner) continue;
      Rational A = c->p * winner->r - winner->p * c->r;
      Rational B = c->p * winner->s + c->q * winner->r - winner->p * c->s - c->q * winner->r;
      Rational C = c->q * winner->s - winner->q * c->s;
      if (A == 0 && B == 0) continue;  // never crosses
      if (A == 0) {
        if (B <= 0) continue;  // c stays below the winner eventually
        Rational rho = -C / B;
        if (rho > x &&
            (!best || rho < *best ||
             (rho == *best && value(*c, rho + 1) > value(*next, rho + 1)))) {
          best = rho;
          next = c;
        }
      } else {
        for (const RootDescriptor& r : isolate_roots(A, B, C))
          if (r.hi > x && (!best || r.hi < *best)) {
            best = r.hi;
            next = c;
          }
      }
    }
    if (!best) return settle;
    x = *best;
    winner = next;
    settle = std::max(settle, static_cast<long long>(rat_floor(x)) + 1);
  }
  // Sweep failed to settle (cannot happen for this family): fall back to the
  // bound beyond every pairwise crossing.
  long long far = n0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Rational A = cs[i]->p * cs[j]->r - cs[j]->p * cs[i]->r;
      Rational B = cs[i]->p * cs[j]->s + cs[i]->q * cs[j]->r - cs[j]->p * cs[i]->s -
                   cs[j]->q * cs[i]->r;
      Rational C = cs[i]->q * cs[j]->s - cs[j]->q * cs[i]->s;
      if (A == 0 && B == 0) continue;
      for (const RootDescriptor& r : isolate_roots(A, B, C))
        far = std::max(far, static_cast<long long>(rat_ceil(r.hi)) + 1);
    }
  return far;
}

}  // namespace detail

/// Exact Var(MG) for the centered operator, via the tail-Mobius reduction:
/// beyond the last envelope switch of the tail candidates MG follows a single
/// monotone curve, so only a finite middle window needs pointwise summation.
inline Rational var_of_m_discrete(const BVSequence& g) {
  DiscreteMaximal dm(g);
  const BVSequence& h = dm.abs_sequence();
  if (h.core.empty() && h.left_tail == h.right_tail) return Rational(0);
  long long cb = h.core_begin(), ce = h.core_end();

  long long n_right = detail::right_settle_point(tail_candidates(g, Side::right), ce);
  BVSequence mirrored = reflect(h);
  long long n_left = -detail::right_settle_point(tail_candidates(mirrored, Side::right),
                                                 mirrored.core_end());

  Rational var = 0;
  Rational prev = dm.at(n_left);
  var += rat_abs(prev - dm.limit_value(Side::left));
  for (long long n = n_left + 1; n <= n_right; ++n) {
    Rational cur = dm.at(n);
    var += rat_abs(cur - prev);
    prev = cur;
  }
  var += rat_abs(dm.limit_value(Side::right) - prev);
  return var;
}

/// Var for the one-sided / uncentered variants. Beyond the core every window
/// average that reaches the core is decreasing in the distance, so the
/// function is monotone there and only [cb-1, ce] needs pointwise work.
inline Rational var_of_m_discrete_variant(const BVSequence& g, MaxVariant variant) {
  if (variant == MaxVariant::centered) return var_of_m_discrete(g);
  DiscreteMaximal dm(g);
  const BVSequence& h = dm.abs_sequence();
  if (h.core.empty() && h.left_tail == h.right_tail) return Rational(0);
  long long cb = h.core_begin(), ce = h.core_end();
  Rational var = 0;
  Rational prev = dm.at(cb - 1, variant);
  var += rat_abs(prev - dm.limit_value(Side::left, variant));
  for (long long n = cb; n <= ce; ++n) {
    Rational cur = dm.at(n, variant);
    var += rat_abs(cur - prev);
    prev = cur;
  }
  var += rat_abs(dm.limit_value(Side::right, variant) - prev);
  return var;
}

/// Positions in [window_lo, window_hi] where the maximal function has a
/// (max-def) local maximum: strictly smaller values exist on both sides before
/// any strictly larger one. Relies on monotone tails beyond the core, so the
/// window is clamped to cover the core with padding.
inline std::vector<long long> discrete_local_maxima(const BVSequence& g, MaxVariant variant) {
  DiscreteMaximal dm(g);
  const BVSequence& h = dm.abs_sequence();
  long long cb = h.core_begin(), ce = h.core_end();
  long long span = std::max<long long>(ce - cb, 1);
  long long lo = cb - span - 4, hi = ce + span + 4;
  std::vector<Rational> vals;
  for (long long n = lo; n <= hi; ++n) vals.push_back(dm.at(n, variant));
  Rational ll = dm.limit_value(Side::left, variant);
  Rational rl = dm.limit_value(Side::right, variant);
  std::vector<long long> maxima;
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j + 1 < vals.size() && vals[j + 1] == vals[i]) ++j;
    Rational before = (i == 0) ? ll : vals[i - 1];
    Rational after = (j + 1 == vals.size()) ? rl : vals[j + 1];
    if (before < vals[i] && after < vals[i])
      for (std::size_t k = i; k <= j; ++k) maxima.push_back(lo + static_cast<long long>(k));
    i = j + 1;
  }
  return maxima;
}

}  // namespace maxvar

#endif  // MAXVAR_MAXIMAL_DISCRETE_HPP
