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

#ifndef MAXVAR_QUADRATIC_HPP
#define MAXVAR_QUADRATIC_HPP

#include "maxvar/rational.hpp"
#include "maxvar/squarefree.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace maxvar {

/// Exact value p + q*sqrt(d).
///
/// Normal form: d is a square-free integer >= 2, or d = 0 with q = 0 when the
/// value is rational. Radicands given as rationals u/w are rewritten as
/// sqrt(u*w)/w before square extraction, so equal quadratic fields always get
/// the same d and same-field comparison is syntactic.
struct QuadraticValue {
  Rational p;
  Rational q;
  Integer d;

  QuadraticValue() : p(0), q(0), d(0) {}
  /*implicit*/ QuadraticValue(Rational rational_value)
      : p(std::move(rational_value)), q(0), d(0) {}
  QuadraticValue(int v) : p(v), q(0), d(0) {}

  bool is_rational() const { return q == 0; }
  const Rational& rational() const {
    if (!is_rational()) throw std::logic_error("QuadraticValue is irrational");
    return p;
  }

  static QuadraticValue with_sqrt(Rational p0, Rational q0, const Rational& radicand) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    QuadraticValue v;
    v.p = std::move(p0);
    if (q0 == 0 || radicand == 0) {
      v.q = 0;
      v.d = 0;
      return v;
    }
    Integer u = numerator(radicand), w = denominator(radicand);
    auto [s, f] = extract_square(u * w);
    if (f == 1) {  // sqrt(radicand) = s/w is rational
      v.p += q0 * Rational(s, w);
      v.q = 0;
      v.d = 0;
      return v;
    }
    v.q = q0 * Rational(s, w);
    v.d = f;
    return v;
  }
};

inline QuadraticValue operator-(const QuadraticValue& a) {
  QuadraticValue r;
  r.p = -a.p;
  r.q = -a.q;
  r.d = a.d;
  return r;
}

namespace detail {

inline void require_same_field(const QuadraticValue& a, const QuadraticValue& b) {
  if (!a.is_rational() && !b.is_rational() && a.d != b.d)
    throw std::logic_error("QuadraticValue field mismatch: sqrt(" + a.d.str() +
                           ") vs sqrt(" + b.d.str() + ")");
}

}  // namespace detail

inline QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b) {
  detail::require_same_field(a, b);
  QuadraticValue r;
  r.p = a.p + b.p;
  r.q = a.q + b.q;
  r.d = a.is_rational() ? b.d : a.d;
  if (r.q == 0) r.d = 0;
  return r;
}

inline QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b) {
  return a + (-b);
}

inline QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b) {
  detail::require_same_field(a, b);
  Integer d = a.is_rational() ? b.d : a.d;
  QuadraticValue r;
  r.p = a.p * b.p + a.q * b.q * Rational(d);
  r.q = a.p * b.q + a.q * b.p;
  r.d = d;
  if (r.q == 0) r.d = 0;
  return r;
}

inline QuadraticValue operator/(const QuadraticValue& a, const QuadraticValue& b) {
  detail::require_same_field(a, b);
  Rational norm = b.p * b.p - b.q * b.q * Rational(b.d);
  if (norm == 0) throw std::domain_error("division by zero QuadraticValue");
  QuadraticValue conj;
  conj.p = b.p;
  conj.q = -b.q;
  conj.d = b.d;
  QuadraticValue num = a * conj;
  num.p /= norm;
  num.q /= norm;
  return num;
}

/// Exact sign of p + q*sqrt(d).
inline int quad_sign(const QuadraticValue& v) {
  if (v.q == 0) return sign(v.p);
  if (v.p == 0) return sign(v.q);
  int sp = sign(v.p), sq = sign(v.q);
  if (sp == sq) return sp;
  Rational p2 = v.p * v.p;
  Rational q2d = v.q * v.q * Rational(v.d);
  if (p2 > q2d) return sp;
  if (p2 < q2d) return sq;
  return 0;  // sqrt(d) rational; unreachable for canonical d
}

namespace detail {

/// Exact sign of r + u*sqrt(D1) + v*sqrt(D2), D1 != D2 square-free >= 2, u,v != 0.
inline int sign_two_surds(const Rational& r, const Rational& u, const Integer& D1,
                          const Rational& v, const Integer& D2) {
  int su = sign(u), sv = sign(v);
  int st;  // sign of T = u*sqrt(D1) + v*sqrt(D2); T != 0 since D1 != D2
  if (su == sv) {
    st = su;
  } else {
    Rational lhs = u * u * Rational(D1), rhs = v * v * Rational(D2);
    if (lhs == rhs) throw std::logic_error("distinct square-free radicands with equal surds");
    st = lhs > rhs ? su : sv;
  }
  if (r == 0) return st;
  int sr = sign(r);
  if (st == sr) return st;
  // |T|^2 - r^2 = (u^2 D1 + v^2 D2 - r^2) + 2uv*sqrt(D1*D2)
  QuadraticValue t2 = QuadraticValue::with_sqrt(
      u * u * Rational(D1) + v * v * Rational(D2) - r * r, 2 * u * v, Rational(D1 * D2));
  int c = quad_sign(t2);
  if (c == 0) throw std::logic_error("two-surd comparison hit impossible tie");
  return c > 0 ? st : sr;
}

}  // namespace detail

/// Exact three-way comparison, fields may differ.
inline Ordering quad_cmp(const QuadraticValue& a, const QuadraticValue& b) {
  int s;
  if (a.is_rational() || b.is_rational() || a.d == b.d) {
    QuadraticValue diff;
    diff.p = a.p - b.p;
    if (a.is_rational()) {
      diff.q = -b.q;
      diff.d = b.d;
    } else if (b.is_rational() || a.d == b.d) {
      diff.q = a.q - b.q;
      diff.d = a.d;
    }
    if (diff.q == 0) diff.d = 0;
    s = quad_sign(diff);
  } else {
    s = detail::sign_two_surds(a.p - b.p, a.q, a.d, -b.q, b.d);
  }
  if (s < 0) return Ordering::less;
  if (s > 0) return Ordering::greater;
  return Ordering::equal;
}

inline bool operator<(const QuadraticValue& a, const QuadraticValue& b) {
  return quad_cmp(a, b) == Ordering::less;
}
inline bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
  return quad_cmp(a, b) == Ordering::equal;
}
inline bool operator<=(const QuadraticValue& a, const QuadraticValue& b) {
  return quad_cmp(a, b) != Ordering::greater;
}

/// Rational enclosure of sqrt(D) with width 2^-k.
inline std::pair<Rational, Rational> sqrt_enclosure(const Integer& D, unsigned k) {
  Integer scaled = D;
  scaled <<= 2 * k;
  Integer s = boost::multiprecision::sqrt(scaled);
  Integer den = Integer(1) << k;
  return {Rational(s, den), Rational(s + 1, den)};
}

/// Rational enclosure [lo, hi] of the value, width shrinking with k.
inline std::pair<Rational, Rational> enclosure(const QuadraticValue& v, unsigned k) {
  if (v.q == 0) return {v.p, v.p};
  auto [lo, hi] = sqrt_enclosure(v.d, k);
  if (v.q > 0) return {v.p + v.q * lo, v.p + v.q * hi};
  return {v.p + v.q * hi, v.p + v.q * lo};
}

/// A rational strictly between a and b (requires a < b exactly).
inline Rational rational_between(const QuadraticValue& a, const QuadraticValue& b) {
  if (a.is_rational() && b.is_rational()) return (a.p + b.p) / 2;
  for (unsigned k = 16;; k *= 2) {
    auto ea = enclosure(a, k);
    auto eb = enclosure(b, k);
    if (ea.second < eb.first) return (ea.second + eb.first) / 2;
    if (k > 1u << 20) throw std::logic_error("rational_between: inputs not separated");
  }
}

inline std::string to_string(const QuadraticValue& v) {
  if (v.is_rational()) return to_string(v.p);
  std::string s = to_string(v.p);
  s += (v.q > 0 ? " + " : " - ");
  Rational aq = rat_abs(v.q);
  if (aq != 1) s += to_string(aq) + "*";
  s += "sqrt(" + v.d.str() + ")";
  return s;
}

inline std::string to_decimal_string(const QuadraticValue& v, unsigned digits = 20) {
  if (v.is_rational()) return to_decimal_string(v.p, digits);
  auto [lo, hi] = enclosure(v, 16 + 4 * digits);
  return to_decimal_string((lo + hi) / 2, digits);
}

/// A finite sum  rat + sum_D coef_D * sqrt(D)  over distinct square-free D.
///
/// Closed under addition of QuadraticValues from any field; this is where
/// variation totals that mix several crossing fields accumulate. Sign queries
/// are exact: the sum is zero iff it is syntactically zero (square roots of
/// distinct square-free integers are linearly independent over Q), and
/// otherwise adaptive-precision enclosures terminate.
class SurdSum {
 public:
  SurdSum() : rat_(0) {}
  /*implicit*/ SurdSum(Rational r) : rat_(std::move(r)) {}
  /*implicit*/ SurdSum(const QuadraticValue& v) : rat_(v.p) { add_term(v.q, v.d); }

  SurdSum& operator+=(const SurdSum& o) {
    rat_ += o.rat_;
    for (const auto& [d, c] : o.terms_) add_term(c, d);
    return *this;
  }
  SurdSum& operator-=(const SurdSum& o) {
    rat_ -= o.rat_;
    for (const auto& [d, c] : o.terms_) add_term(-c, d);
    return *this;
  }
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  SurdSum operator-() const {
    SurdSum r;
    r.rat_ = -rat_;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
  }
  SurdSum& scale(const Rational& c) {
    if (c == 0) {
      rat_ = 0;
      terms_.clear();
      return *this;
    }
    rat_ *= c;
    for (auto& [d, coef] : terms_) coef *= c;
    return *this;
  }

  bool is_rational() const { return terms_.empty(); }
  const Rational& rational_part() const { return rat_; }
  std::optional<Rational> as_rational() const {
    if (terms_.empty()) return rat_;
    return std::nullopt;
  }
  const std::map<Integer, Rational>& surd_terms() const { return terms_; }

  int signum() const {
    if (terms_.empty()) return sign(rat_);
    if (terms_.size() == 1) {
      QuadraticValue v;
      v.p = rat_;
      v.q = terms_.begin()->second;
      v.d = terms_.begin()->first;
      return quad_sign(v);
    }
    if (terms_.size() == 2) {
      auto it = terms_.begin();
      auto jt = std::next(it);
      return detail::sign_two_surds(rat_, it->second, it->first, jt->second, jt->first);
    }
    // Nonzero by linear independence; enclosures must eventually decide.
    for (unsigned k = 32;; k *= 2) {
      auto [lo, hi] = enclose(k);
      if (lo > 0) return 1;
      if (hi < 0) return -1;
      if (k > 1u << 22) throw std::logic_error("SurdSum sign: enclosure failed to separate");
    }
  }

  Ordering compare(const Rational& threshold) const {
    SurdSum diff = *this;
    diff.rat_ -= threshold;
    int s = diff.signum();
    return s < 0 ? Ordering::less : (s > 0 ? Ordering::greater : Ordering::equal);
  }

  std::pair<Rational, Rational> enclose(unsigned k) const {
    Rational lo = rat_, hi = rat_;
    for (const auto& [d, c] : terms_) {
      auto [slo, shi] = sqrt_enclosure(d, k);
      if (c > 0) {
        lo += c * slo;
        hi += c * shi;
      } else {
        lo += c * shi;
        hi += c * slo;
      }
    }
    return {lo, hi};
  }

  std::string to_exact_string() const {
    std::string s = maxvar::to_string(rat_);
    for (const auto& [d, c] : terms_) {
      s += (c > 0 ? " + " : " - ");
      Rational ac = rat_abs(c);
      if (ac != 1) s += maxvar::to_string(ac) + "*";
      s += "sqrt(" + d.str() + ")";
    }
    return s;
  }

  std::string to_decimal_string(unsigned digits = 20) const {
    if (terms_.empty()) return maxvar::to_decimal_string(rat_, digits);
    auto [lo, hi] = enclose(16 + 4 * digits);
    return maxvar::to_decimal_string((lo + hi) / 2, digits);
  }

 private:
  void add_term(const Rational& c, const Integer& d) {
    if (c == 0 || d == 0) {
      return;
    }
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational rat_;
  std::map<Integer, Rational> terms_;
};

}  // namespace maxvar

#endif  // MAXVAR_QUADRATIC_HPP
