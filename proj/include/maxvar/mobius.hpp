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

#ifndef MAXVAR_MOBIUS_HPP
#define MAXVAR_MOBIUS_HPP

#include "maxvar/quadratic.hpp"
#include "maxvar/rational.hpp"

#include <array>

namespace maxvar {

/// Linear-fractional curve x -> (p x + q) / (r x + s). Window averages of
/// step functions are piecewise of this form, in the center as well as in the
/// radius, which is what makes every supremum in this library finite.
struct MobiusCurve {
  Rational p, q, r, s;

  static MobiusCurve constant(const Rational& c) { return {Rational(0), c, Rational(0), Rational(1)}; }

  Rational at(const Rational& x) const {
    Rational den = r * x + s;
    if (den == 0) return p / r;  // removable 0/0 at a window-collapse point
    return (p * x + q) / den;
  }

  QuadraticValue at(const QuadraticValue& x) const {
    if (x.is_rational()) return QuadraticValue(at(x.p));
    QuadraticValue num = QuadraticValue(p) * x + QuadraticValue(q);
    QuadraticValue den = QuadraticValue(r) * x + QuadraticValue(s);
    if (quad_sign(den) == 0) return QuadraticValue(Rational(p / r));
    return num / den;
  }

  /// Limit as x -> +-inf (finite for every curve used here).
  Rational limit_at_infinity() const { return r == 0 ? q / s : p / r; }

  /// Sign of the derivative wherever r x + s > 0.
  int mono_sign() const { return sign(p * s - q * r); }

  /// Coefficients of the crossing quadratic of two curves (numerator of
  /// this - other after cross-multiplication).
  std::array<Rational, 3> crossing_quadratic(const MobiusCurve& o) const {
    return {p * o.r - o.p * r, p * o.s + q * o.r - o.p * s - o.q * r, q * o.s - o.q * s};
  }

  /// True when the two curves agree as rational functions.
  bool same_function(const MobiusCurve& o) const {
    auto c = crossing_quadratic(o);
    return c[0] == 0 && c[1] == 0 && c[2] == 0;
  }

  /// Flips coefficient signs so the denominator is positive at the probe.
  void orient_positive(const Rational& probe) {
    if (r * probe + s < 0) {
      p = -p;
      q = -q;
      r = -r;
      s = -s;
    }
  }
};

}  // namespace maxvar

#endif  // MAXVAR_MOBIUS_HPP
