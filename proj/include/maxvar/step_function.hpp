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

#ifndef MAXVAR_STEP_FUNCTION_HPP
#define MAXVAR_STEP_FUNCTION_HPP

#include "maxvar/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace maxvar {

/// Piecewise-constant function on R:
///
///   value left_tail on (-inf, t_0), values[k-1] on [t_{k-1}, t_k),
///   right_tail on [t_K, inf),
///
/// with strictly increasing rational breakpoints t_0 < ... < t_K. K = 0 (no
/// pieces, one breakpoint) is the pure two-tail function. Normal form merges
/// equal neighbors and absorbs pieces equal to the adjacent tail.
struct StepFunction {
  Rational left_tail;
  Rational right_tail;
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  std::size_t piece_count() const { return values.size(); }

  void validate() const {
    if (breakpoints.empty())
      throw std::invalid_argument("StepFunction: at least one breakpoint required");
    if (values.size() + 1 != breakpoints.size())
      throw std::invalid_argument("StepFunction: need exactly one more breakpoint than values");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i]))
        throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
  }

  Rational value_at(const Rational& x) const {
    // Half-open convention: pieces are [t_{k-1}, t_k).
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    if (it == breakpoints.begin()) return left_tail;
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    if (idx == breakpoints.size()) return right_tail;
    return values[idx - 1];
  }

  Rational one_sided_value(const Rational& x, Side side) const {
    if (side == Side::right) return value_at(x);  // pieces are right-continuous
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
    if (it == breakpoints.begin()) return left_tail;  // x <= t_0
    if (it == breakpoints.end()) return right_tail;   // x > t_K
    // t_{idx-1} < x <= t_idx: the left limit is piece idx.
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    return values[idx - 1];
  }
};

inline StepFunction normalize(StepFunction f) {
  f.validate();
  // Merge adjacent equal pieces, keeping the outer boundary of each run.
  std::vector<Rational> bps2, vals2;
  bps2.push_back(f.breakpoints.front());
  std::size_t k = 0;
  while (k < f.values.size()) {
    std::size_t j = k;
    while (j + 1 < f.values.size() && f.values[j + 1] == f.values[k]) ++j;
    vals2.push_back(f.values[k]);
    bps2.push_back(f.breakpoints[j + 1]);
    k = j + 1;
  }
  // Absorb edge pieces equal to the tails.
  while (!vals2.empty() && vals2.front() == f.left_tail) {
    vals2.erase(vals2.begin());
    bps2.erase(bps2.begin());
  }
  while (!vals2.empty() && vals2.back() == f.right_tail) {
    vals2.pop_back();
    bps2.pop_back();
  }
  StepFunction out;
  out.left_tail = f.left_tail;
  out.right_tail = f.right_tail;
  if (vals2.empty()) {
    out.breakpoints = {f.left_tail == f.right_tail ? Rational(0) : bps2.front()};
  } else {
    out.breakpoints = std::move(bps2);
    out.values = std::move(vals2);
  }
  return out;
}

inline Rational total_var(const StepFunction& f) {
  StepFunction g = normalize(f);
  Rational v = 0;
  Rational prev = g.left_tail;
  for (const Rational& a : g.values) {
    v += rat_abs(a - prev);
    prev = a;
  }
  v += rat_abs(g.right_tail - prev);
  return v;
}

inline StepFunction abs_of(const StepFunction& f) {
  StepFunction g = f;
  g.left_tail = rat_abs(g.left_tail);
  g.right_tail = rat_abs(g.right_tail);
  for (Rational& v : g.values) v = rat_abs(v);
  return normalize(g);
}

/// Separation condition of the alternating class: adjacent piece values have
/// product zero. Vacuously true for K <= 1.
inline bool is_alternating(const StepFunction& f) {
  StepFunction g = normalize(f);
  for (std::size_t k = 0; k + 1 < g.values.size(); ++k)
    if (g.values[k] * g.values[k + 1] != 0) return false;
  return true;
}

inline StepFunction reflect(const StepFunction& f) {
  StepFunction g;
  g.left_tail = f.right_tail;
  g.right_tail = f.left_tail;
  g.breakpoints.assign(f.breakpoints.rbegin(), f.breakpoints.rend());
  for (Rational& t : g.breakpoints) t = -t;
  g.values.assign(f.values.rbegin(), f.values.rend());
  return g;
}

inline StepFunction scale(const StepFunction& f, const Rational& c) {
  StepFunction g = f;
  g.left_tail *= c;
  g.right_tail *= c;
  for (Rational& v : g.values) v *= c;
  return g;
}

}  // namespace maxvar

#endif  // MAXVAR_STEP_FUNCTION_HPP
