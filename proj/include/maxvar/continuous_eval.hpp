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

#ifndef MAXVAR_CONTINUOUS_EVAL_HPP
#define MAXVAR_CONTINUOUS_EVAL_HPP

#include "maxvar/rational.hpp"
#include "maxvar/step_function.hpp"

#include <algorithm>
#include <vector>

namespace maxvar {

/// Exact pointwise evaluation of the centered (and one-sided / uncentered)
/// maximal operator of a step function. Internally works on |f| normalized.
///
/// The supremum over radii reduces to a max over the kink radii |x - t_k|
/// plus two limit candidates: the window average is Mobius in r between
/// consecutive kinks, hence monotone there, so the sup sits at a kink, at
/// r -> 0 (one-sided mean), or at r -> infinity ((|a|+|b|)/2).
class ContinuousMaximal {
 public:
  explicit ContinuousMaximal(const StepFunction& f) : h_(abs_of(f)) {
    prefix_.reserve(h_.breakpoints.size());
    prefix_.emplace_back(0);
    for (std::size_t k = 0; k < h_.values.size(); ++k)
      prefix_.push_back(prefix_.back() +
                        h_.values[k] * (h_.breakpoints[k + 1] - h_.breakpoints[k]));
  }

  const StepFunction& abs_function() const { return h_; }

  /// Exact integral of |f| over [x, y], x <= y.
  Rational integral(const Rational& x, const Rational& y) const {
    if (!(x <= y)) throw std::invalid_argument("integral: reversed bounds");
    const Rational& t0 = h_.breakpoints.front();
    const Rational& tK = h_.breakpoints.back();
    Rational total = 0;
    if (x < t0) total += h_.left_tail * (std::min(y, t0) - x);
    if (y > tK) total += h_.right_tail * (y - std::max(x, tK));
    Rational u = std::max(x, t0), v = std::min(y, tK);
    if (u < v) total += cumulative(v) - cumulative(u);
    return total;
  }

  Rational window_average(const Rational& center, const Rational& radius) const {
    return integral(center - radius, center + radius) / (2 * radius);
  }

  /// (|f|(x-) + |f|(x+)) / 2, the r -> 0 candidate.
  Rational local_candidate(const Rational& x) const {
    return (h_.one_sided_value(x, Side::left) + h_.one_sided_value(x, Side::right)) / 2;
  }

  Rational global_limit_candidate() const { return (h_.left_tail + h_.right_tail) / 2; }

  Rational limit_value(Side side) const {
    const Rational& tail = side == Side::left ? h_.left_tail : h_.right_tail;
    return std::max(tail, global_limit_candidate());
  }

  Rational at(const Rational& x) const {
    Rational best = std::max(local_candidate(x), global_limit_candidate());
    for (const Rational& t : h_.breakpoints) {
      Rational r = rat_abs(x - t);
      if (r == 0) continue;
      best = std::max(best, window_average(x, r));
    }
    return best;
  }

  /// Restricted operator: only radii r with 2r in (2N-1)/2^level are allowed.
  /// Between kink radii the average is monotone, so only the admissible radii
  /// adjacent to each kink (and the global limit) can attain the sup.
  Rational restricted_at(const Rational& x, unsigned level) const {
    Rational step = pow2(-(static_cast<long long>(level) + 1));  // radii (2j-1)*step
    Rational best = global_limit_candidate();
    auto consider_j = [&](Integer j) {
      if (j < 1) return;
      Rational r = Rational(2 * j - 1) * step;
      best = std::max(best, window_average(x, r));
    };
    consider_j(1);
    for (const Rational& t : h_.breakpoints) {
      Rational rho = rat_abs(x - t);
      // j around (rho/step + 1)/2
      Integer j = rat_floor((rho / step + 1) / 2);
      consider_j(j - 1);
      consider_j(j);
      consider_j(j + 1);
      consider_j(j + 2);
    }
    return best;
  }

  /// One-sided (rightward) operator value.
  Rational one_sided_op_at(const Rational& x) const {
    Rational best = std::max(h_.one_sided_value(x, Side::right), h_.right_tail);
    for (const Rational& t : h_.breakpoints) {
      Rational r = t - x;
      if (r <= 0) continue;
      best = std::max(best, Rational(integral(x, x + r) / r));
    }
    return best;
  }

  /// Uncentered operator value.
  Rational uncentered_op_at(const Rational& x) const {
    Rational best = std::max({h_.one_sided_value(x, Side::left),
                              h_.one_sided_value(x, Side::right), h_.left_tail, h_.right_tail});
    std::vector<Rational> lefts{x}, rights{x};
    for (const Rational& t : h_.breakpoints) {
      if (t < x) lefts.push_back(t);
      if (t > x) rights.push_back(t);
    }
    for (const Rational& u : lefts)
      for (const Rational& v : rights) {
        if (!(u < v)) continue;
        best = std::max(best, Rational(integral(u, v) / (v - u)));
      }
    return best;
  }

 private:
  /// Integral of |f| from t_0 to u, for u in [t_0, t_K].
  Rational cumulative(const Rational& u) const {
    auto it = std::upper_bound(h_.breakpoints.begin(), h_.breakpoints.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - h_.breakpoints.begin());
    if (idx == 0) return Rational(0);
    if (idx > h_.values.size()) return prefix_.back();
    return prefix_[idx - 1] + h_.values[idx - 1] * (u - h_.breakpoints[idx - 1]);
  }

  StepFunction h_;
  std::vector<Rational> prefix_;
};

inline Rational m_at(const StepFunction& f, const Rational& x) {
  return ContinuousMaximal(f).at(x);
}

inline Rational m_restricted_at(const StepFunction& f, const Rational& x, unsigned level) {
  return ContinuousMaximal(f).restricted_at(x, level);
}

}  // namespace maxvar

#endif  // MAXVAR_CONTINUOUS_EVAL_HPP
