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

#ifndef MAXVAR_RATIONAL_HPP
#define MAXVAR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxvar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Ordering { less, equal, greater };
enum class Side { left, right };

/// Exact total order by cross-multiplication.
inline Ordering rat_cmp(const Rational& x, const Rational& y) {
  if (x < y) return Ordering::less;
  if (x > y) return Ordering::greater;
  return Ordering::equal;
}

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Integer& x) { return x.sign(); }

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer floor_div(const Integer& num, const Integer& den) {
  // den > 0; cpp_int division truncates toward zero.
  Integer q = num / den;
  if (num % den != 0 && num.sign() < 0) --q;
  return q;
}

inline Integer rat_floor(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

inline Integer rat_ceil(const Rational& x) { return -rat_floor(-x); }

/// 2^n for signed n.
inline Rational pow2(long long n) {
  Integer p = 1;
  p <<= static_cast<unsigned>(n < 0 ? -n : n);
  return n >= 0 ? Rational(p) : Rational(Integer(1), p);
}

/// Serialized form used on all JSON/CSV surfaces: "p/q", "/q" omitted when q = 1.
inline std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// Parses "p" or "p/q". Rejects anything else (whitespace, empty, q <= 0).
inline Rational parse_rational(std::string_view s) {
  auto bad = [&] {
    return std::runtime_error("invalid rational literal: '" + std::string(s) + "'");
  };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto check_int = [&](std::string_view t, bool allow_sign) {
    if (t.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  if (slash == std::string_view::npos) {
    check_int(s, true);
    return Rational(Integer(std::string(s)));
  }
  std::string_view p = s.substr(0, slash);
  std::string_view q = s.substr(slash + 1);
  check_int(p, true);
  check_int(q, false);
  Integer den{std::string(q)};
  if (den == 0) throw bad();
  return Rational(Integer(std::string(p)), den);
}

/// Nearest integer to num/den, ties to even. den > 0.
inline Integer round_half_even(const Integer& num, const Integer& den) {
  Integer q = floor_div(num, den);
  Integer r = num - q * den;  // 0 <= r < den
  Integer twice = r * 2;
  if (twice < den) return q;
  if (twice > den) return q + 1;
  return (q % 2 == 0) ? q : q + 1;
}

/// Decimal rendering with `digits` significant digits, round-half-even.
/// Used for the explicitly-approximate CSV/JSON columns.
inline std::string to_decimal_string(const Rational& x, unsigned digits = 20) {
  if (x == 0) return "0";
  Integer num = int_abs(numerator(x));
  Integer den = denominator(x);
  // e = floor(log10(|x|)): scale until 10^e <= |x| < 10^(e+1).
  long long e = 0;
  if (num >= den) {
    Integer t = den;
    while (t * 10 <= num) {
      t *= 10;
      ++e;
    }
  } else {
    Integer t = num;
    while (t < den) {
      t *= 10;
      --e;
    }
  }
  long long shift = static_cast<long long>(digits) - 1 - e;
  Integer scaled_num = num, scaled_den = den;
  if (shift >= 0)
    scaled_num *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift));
  else
    scaled_den *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-shift));
  Integer m = round_half_even(scaled_num, scaled_den);
  std::string ds = m.str();
  if (ds.size() > digits) {  // rounding carried into one more digit
    ++e;
    ds.pop_back();
  }
  std::string out;
  if (x < 0) out += '-';
  if (e >= 0 && e <= 24) {
    while (ds.size() < static_cast<std::size_t>(e) + 1) ds += '0';
    out += ds.substr(0, static_cast<std::size_t>(e) + 1);
    std::string frac = ds.substr(static_cast<std::size_t>(e) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e < 0 && e >= -6) {
    out += "0.";
    out += std::string(static_cast<std::size_t>(-e - 1), '0');
    std::string frac = ds;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += frac;
  } else {
    out += ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  }
  return out;
}

}  // namespace maxvar

#endif  // MAXVAR_RATIONAL_HPP
