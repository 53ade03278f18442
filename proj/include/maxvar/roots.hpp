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

#ifndef MAXVAR_ROOTS_HPP
#define MAXVAR_ROOTS_HPP

#include "maxvar/quadratic.hpp"
#include "maxvar/rational.hpp"

#include <stdexcept>
#include <vector>

namespace maxvar {

enum class RootIndex { smaller, larger };

/// One real root of A x^2 + B x + C, with a rational isolating interval
/// [lo, hi] containing exactly that root (a point interval when the root is
/// rational) and the root itself as an exact QuadraticValue.
struct RootDescriptor {
  Rational A, B, C;
  RootIndex index = RootIndex::smaller;
  Rational lo, hi;
  QuadraticValue value;

  Rational eval(const Rational& x) const { return (A * x + B) * x + C; }
};

namespace detail {

inline void tighten_interval(RootDescriptor& r, const Rational& width) {
  if (r.value.is_rational()) {
    r.lo = r.hi = r.value.p;
    return;
  }
  unsigned k = 8;
  for (;;) {
    auto [lo, hi] = enclosure(r.value, k);
    if (hi - lo <= width) {
      r.lo = lo;
      r.hi = hi;
      return;
    }
    k *= 2;
    if (k > 1u << 24) throw std::logic_error("root interval refinement stalled");
  }
}

}  // namespace detail

/// Shrinks the isolating interval to at most `width` while keeping the root inside.
inline void refine_root(RootDescriptor& r, const Rational& width) {
  detail::tighten_interval(r, width);
}

/// All distinct real roots of A x^2 + B x + C, ascending. The linear case
/// (A = 0) yields a point interval; all-zero coefficients are rejected.
inline std::vector<RootDescriptor> isolate_roots(const Rational& A, const Rational& B,
                                                 const Rational& C) {
  if (A == 0 && B == 0 && C == 0)
    throw std::invalid_argument("isolate_roots: all coefficients zero");
  std::vector<RootDescriptor> out;
  if (A == 0) {
    if (B == 0) return out;  // nonzero constant, no roots
    RootDescriptor r;
    r.A = A;
    r.B = B;
    r.C = C;
    r.value = QuadraticValue(Rational(-C / B));
    r.lo = r.hi = r.value.p;
    out.push_back(std::move(r));
    return out;
  }
  Rational disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  if (disc == 0) {
    RootDescriptor r;
    r.A = A;
    r.B = B;
    r.C = C;
    r.value = QuadraticValue(Rational(-B / (2 * A)));
    r.lo = r.hi = r.value.p;
    out.push_back(std::move(r));
    return out;
  }
  // Two distinct roots (-B -+ sqrt(disc)) / 2A, normalized so A > 0.
  Rational a = A, b = B;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  Rational base = -b / (2 * a);
  Rational coef = Rational(1) / (2 * a);
  for (int i = 0; i < 2; ++i) {
    RootDescriptor r;
    r.A = A;
    r.B = B;
    r.C = C;
    r.index = (i == 0) ? RootIndex::smaller : RootIndex::larger;
    r.value = QuadraticValue::with_sqrt(base, i == 0 ? -coef : coef, disc);
    out.push_back(std::move(r));
  }
  if (out[0].value.is_rational()) {
    // Perfect-square discriminant: both roots rational, point intervals.
    out[0].lo = out[0].hi = out[0].value.p;
    out[1].lo = out[1].hi = out[1].value.p;
    return out;
  }
  // Irrational pair: shrink enclosures until the two intervals are disjoint,
  // which also forces opposite signs of the quadratic at the endpoints.
  Rational width = Rational(1, 4);
  for (;;) {
    detail::tighten_interval(out[0], width);
    detail::tighten_interval(out[1], width);
    if (out[0].hi < out[1].lo) break;
    width /= 16;
  }
  return out;
}

}  // namespace maxvar

#endif  // MAXVAR_ROOTS_HPP
