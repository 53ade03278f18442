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

#ifndef MAXVAR_SQUAREFREE_HPP
#define MAXVAR_SQUAREFREE_HPP

#include "maxvar/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace maxvar {
namespace detail {

inline Integer mulmod(const Integer& a, const Integer& b, const Integer& m) {
  return (a * b) % m;
}

inline Integer powmod(Integer base, Integer exp, const Integer& m) {
  Integer r = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool miller_rabin(const Integer& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3e24 with these witnesses.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Integer x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1; c < 64; ++c) {
    Integer x = 2, y = 2, d = 1;
    long long iter = 0, cap = 1 << 22;
    while (d == 1 && iter++ < cap) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = boost::multiprecision::gcd(int_abs(x - y), n);
    }
    if (d != 1 && d != n) return d;
  }
  throw std::runtime_error("factorization failed for " + n.str());
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n <= 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  Integer rem;
  Integer root = boost::multiprecision::sqrt(n, rem);
  if (rem == 0) {
    std::map<Integer, unsigned> sub;
    factor_into(root, sub);
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Writes n = square * squarefree and returns {square_root, squarefree}.
/// n must be positive.
inline std::pair<Integer, Integer> extract_square(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("extract_square: positive input required");
  Integer s = 1, f = 1, m = n;
  // Small-prime pass covers everything the corpus actually produces.
  static const std::vector<int> small_primes = [] {
    std::vector<int> ps;
    std::vector<bool> sieve(4096, true);
    for (int i = 2; i < 4096; ++i) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (int j = 2 * i; j < 4096; j += i) sieve[j] = false;
    }
    return ps;
  }();
  for (int p : small_primes) {
    if (Integer(p) * p > m) break;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2) s *= boost::multiprecision::pow(Integer(p), e / 2);
    if (e % 2 == 1) f *= p;
  }
  if (m > 1) {
    Integer rem;
    Integer root = boost::multiprecision::sqrt(m, rem);
    if (rem == 0) {
      s *= root;
    } else if (detail::miller_rabin(m)) {
      f *= m;
    } else {
      std::map<Integer, unsigned> fac;
      detail::factor_into(m, fac);
      for (auto& [p, e] : fac) {
        if (e >= 2) s *= boost::multiprecision::pow(p, e / 2);
        if (e % 2 == 1) f *= p;
      }
    }
  }
  return {s, f};
}

}  // namespace maxvar

#endif  // MAXVAR_SQUAREFREE_HPP
