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

#ifndef MAXVAR_SEQUENCE_HPP
#define MAXVAR_SEQUENCE_HPP

#include "maxvar/rational.hpp"

#include <utility>
#include <vector>

namespace maxvar {

/// Eventually-constant function on Z: left_tail for n < offset, core values at
/// offset .. offset+len-1, right_tail for n >= offset+len. An empty core is a
/// pure two-tail sequence with transition at `offset`.
struct BVSequence {
  Rational left_tail;
  Rational right_tail;
  long long offset = 0;
  std::vector<Rational> core;

  long long core_begin() const { return offset; }
  long long core_end() const { return offset + static_cast<long long>(core.size()); }

  Rational value_at(long long n) const {
    if (n < offset) return left_tail;
    long long i = n - offset;
    if (i >= static_cast<long long>(core.size())) return right_tail;
    return core[static_cast<std::size_t>(i)];
  }
};

inline BVSequence normalize(BVSequence g) {
  std::size_t lo = 0, hi = g.core.size();
  while (lo < hi && g.core[lo] == g.left_tail) ++lo;
  while (hi > lo && g.core[hi - 1] == g.right_tail) --hi;
  BVSequence out;
  out.left_tail = g.left_tail;
  out.right_tail = g.right_tail;
  out.core.assign(g.core.begin() + static_cast<long>(lo), g.core.begin() + static_cast<long>(hi));
  out.offset = g.offset + static_cast<long long>(lo);
  if (out.core.empty() && out.left_tail == out.right_tail) out.offset = 0;
  return out;
}

inline Rational total_var(const BVSequence& g) {
  Rational v = 0;
  Rational prev = g.left_tail;
  for (const Rational& a : g.core) {
    v += rat_abs(a - prev);
    prev = a;
  }
  v += rat_abs(g.right_tail - prev);
  return v;
}

inline BVSequence abs_of(const BVSequence& g) {
  BVSequence h = g;
  h.left_tail = rat_abs(h.left_tail);
  h.right_tail = rat_abs(h.right_tail);
  for (Rational& v : h.core) v = rat_abs(v);
  return normalize(h);
}

/// Maximal constant runs of the core, in order.
inline std::vector<std::pair<Rational, std::size_t>> runs(const BVSequence& g) {
  std::vector<std::pair<Rational, std::size_t>> rs;
  for (const Rational& v : g.core) {
    if (!rs.empty() && rs.back().first == v)
      ++rs.back().second;
    else
      rs.emplace_back(v, 1);
  }
  return rs;
}

inline bool is_alternating(const BVSequence& g) {
  auto rs = runs(normalize(g));
  for (std::size_t k = 0; k + 1 < rs.size(); ++k)
    if (rs[k].first * rs[k + 1].first != 0) return false;
  return true;
}

inline BVSequence reflect(const BVSequence& g) {
  BVSequence h;
  h.left_tail = g.right_tail;
  h.right_tail = g.left_tail;
  h.core.assign(g.core.rbegin(), g.core.rend());
  h.offset = -(g.offset + static_cast<long long>(g.core.size()) - 1);
  if (g.core.empty()) h.offset = -g.offset + 1;  // transition mirrors to 1 - offset
  return h;
}

inline BVSequence scale(const BVSequence& g, const Rational& c) {
  BVSequence h = g;
  h.left_tail *= c;
  h.right_tail *= c;
  for (Rational& v : h.core) v *= c;
  return h;
}

}  // namespace maxvar

#endif  // MAXVAR_SEQUENCE_HPP
