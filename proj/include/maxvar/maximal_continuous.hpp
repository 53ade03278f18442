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

#ifndef MAXVAR_MAXIMAL_CONTINUOUS_HPP
#define MAXVAR_MAXIMAL_CONTINUOUS_HPP

#include "maxvar/envelope.hpp"
#include "maxvar/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxvar {

/// Raised when an operation that is only guaranteed on the alternating class
/// (adjacent piece products zero) receives something else.
class ClassViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Var(Mf), exact. Rational whenever no irrational crossing contributes an
/// extremum; otherwise a SurdSum with exact sign queries.
inline SurdSum var_of_m(const Envelope& env) {
  const auto& chain = env.chain();
  SurdSum var;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Ordering ord = quad_cmp(chain[i - 1].value, chain[i].value);
    if (ord == Ordering::equal) continue;
    SurdSum d = SurdSum(chain[i].value) - SurdSum(chain[i - 1].value);
    var += ord == Ordering::less ? d : -d;
  }
  return var;
}

inline SurdSum var_of_m(const StepFunction& f) { return var_of_m(Envelope(f)); }

inline Rational m_one_sided(const StepFunction& f, const Rational& x, Side side) {
  return Envelope(f).one_sided(x, side);
}

/// Anchored local-maximum witness of Lemma-2 type: x_star is the center of a
/// window spanning piece k1's left end to piece k2's right end (1-based
/// pieces), and Mf(x_star) is attained by that window.
struct Representative {
  Rational x_star;
  std::size_t k1 = 0, k2 = 0;
  Rational window_lo, window_hi;
  Rational value;
};

inline std::vector<Representative> representatives(const Envelope& env) {
  const StepFunction& h = env.eval().abs_function();
  if (!is_alternating(h))
    throw ClassViolationError(
        "representatives: input is outside the alternating class; use the envelope extrema "
        "directly");
  std::vector<Representative> reps;
  std::size_t K = h.values.size();
  for (const ExtremumNode& node : env.extrema()) {
    if (!node.is_max) continue;
    bool found = false;
    for (std::size_t k1 = 1; k1 <= K && !found; ++k1) {
      for (std::size_t k2 = k1; k2 <= K && !found; ++k2) {
        Rational lo = h.breakpoints[k1 - 1];
        Rational hi = h.breakpoints[k2];
        Rational x_star = (lo + hi) / 2;
        if (quad_cmp(QuadraticValue(x_star), node.x_lo) == Ordering::less) continue;
        if (quad_cmp(QuadraticValue(x_star), node.x_hi) == Ordering::greater) continue;
        Rational avg = env.eval().integral(lo, hi) / (hi - lo);
        if (quad_cmp(QuadraticValue(avg), node.value) != Ordering::equal) continue;
        if (env.eval().at(x_star) != avg) continue;
        reps.push_back({x_star, k1, k2, lo, hi, avg});
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("local maximum without an anchored representative window");
  }
  return reps;
}

inline std::vector<Representative> representatives(const StepFunction& f) {
  return representatives(Envelope(f));
}

/// The tent-like comparison curve T_I(x) = |I| / |J_I(x)| where J_I(x) is the
/// smallest interval containing I and centered at x.
struct TCurve {
  Rational lo, hi;

  Rational length() const { return hi - lo; }
  Rational center() const { return (lo + hi) / 2; }
};

inline Rational t_value(const TCurve& I, const Rational& x) {
  Rational len = I.length();
  if (len <= 0) throw std::invalid_argument("TCurve: empty interval");
  Rational left = 2 * (x - I.lo);
  Rational right = 2 * (I.hi - x);
  Rational J = len;
  if (left > J) J = left;
  if (right > J) J = right;
  return len / J;
}

inline QuadraticValue t_value(const TCurve& I, const QuadraticValue& x) {
  if (x.is_rational()) return QuadraticValue(t_value(I, x.p));
  Rational len = I.length();
  if (len <= 0) throw std::invalid_argument("TCurve: empty interval");
  QuadraticValue c1 = (x - QuadraticValue(I.lo)) * QuadraticValue(Rational(2));
  QuadraticValue c2 = (QuadraticValue(I.hi) - x) * QuadraticValue(Rational(2));
  QuadraticValue J{Rational(len)};
  if (quad_cmp(c1, J) == Ordering::greater) J = c1;
  if (quad_cmp(c2, J) == Ordering::greater) J = c2;
  return QuadraticValue(Rational(len)) / J;
}

/// Variation of T_I over [lo, hi] (nullopt bound = corresponding infinity),
/// from unimodality: T_I rises to 1 at the center of I and falls back to 0.
inline SurdSum var_t_over(const TCurve& I, const std::optional<QuadraticValue>& lo,
                          const std::optional<QuadraticValue>& hi) {
  QuadraticValue c(I.center());
  SurdSum t_lo = lo ? SurdSum(t_value(I, *lo)) : SurdSum(Rational(0));
  SurdSum t_hi = hi ? SurdSum(t_value(I, *hi)) : SurdSum(Rational(0));
  if (hi && quad_cmp(*hi, c) != Ordering::greater) return t_hi - t_lo;
  if (lo && quad_cmp(*lo, c) != Ordering::less) return t_lo - t_hi;
  return SurdSum(Rational(2)) - t_lo - t_hi;
}

inline Rational var_t(const TCurve& I) { return 2; }

struct AuditInequality {
  std::string label;
  SurdSum lhs, rhs;
  bool holds = false;
};

struct Lemma3Report {
  bool applicable = false;  // at least one representative
  bool all_hold = false;
  std::vector<AuditInequality> items;
};

namespace auditdetail {

/// Interlacing minima: the unique minimum node strictly between consecutive
/// representatives, reported as (leftmost point, value).
inline std::vector<std::pair<QuadraticValue, QuadraticValue>> interlacing_minima(
    const Envelope& env, const std::vector<Representative>& reps) {
  std::vector<std::pair<QuadraticValue, QuadraticValue>> ys;
  for (std::size_t n = 1; n < reps.size(); ++n) {
    QuadraticValue left(reps[n - 1].x_star), right(reps[n].x_star);
    const ExtremumNode* pick = nullptr;
    for (const ExtremumNode& node : env.extrema()) {
      if (node.is_max) continue;
      if (quad_cmp(node.x_lo, left) != Ordering::greater) continue;
      if (quad_cmp(node.x_hi, right) != Ordering::less) continue;
      if (pick) throw std::logic_error("multiple minima between consecutive representatives");
      pick = &node;
    }
    if (!pick) throw std::logic_error("no minimum between consecutive representatives");
    ys.emplace_back(pick->x_lo, pick->value);
  }
  return ys;
}

}  // namespace auditdetail

/// Checks every Lemma-3 style control of Mf increments by the alpha-weighted
/// variations of the tent curves T_{I_k}, including the sharpened form that
/// omits the k = 1 term when alpha_1 <= a.
inline Lemma3Report lemma3_audit(const StepFunction& f) {
  Envelope env(f);
  const StepFunction& h = env.eval().abs_function();
  if (!is_alternating(h))
    throw ClassViolationError("lemma3_audit: alternating-class input required");
  Lemma3Report report;
  auto reps = representatives(env);
  if (reps.empty()) {
    report.applicable = false;
    report.all_hold = true;
    return report;
  }
  report.applicable = true;
  auto ys = auditdetail::interlacing_minima(env, reps);

  std::size_t K = h.values.size();
  bool sharpen = K >= 1 && h.values[0] <= h.left_tail;
  auto rhs_sum = [&](const std::optional<QuadraticValue>& lo,
                     const std::optional<QuadraticValue>& hi, bool omit_first) {
    SurdSum s;
    for (std::size_t k = omit_first ? 1 : 0; k < K; ++k) {
      TCurve I{h.breakpoints[k], h.breakpoints[k + 1]};
      SurdSum v = var_t_over(I, lo, hi);
      v.scale(h.values[k]);
      s += v;
    }
    return s;
  };
  auto add_item = [&](std::string label, SurdSum lhs, SurdSum rhs) {
    bool ok = (rhs - lhs).signum() >= 0;
    report.items.push_back({std::move(label), std::move(lhs), std::move(rhs), ok});
  };

  for (std::size_t n = 1; n < reps.size(); ++n) {
    QuadraticValue xp(reps[n - 1].x_star), xn(reps[n].x_star);
    const auto& [y, my] = ys[n - 1];
    for (bool omit : {false, sharpen}) {
      std::string tag = omit ? " (sharpened)" : "";
      add_item("Mf(x_" + std::to_string(n - 1) + ") - Mf(y_" + std::to_string(n) + ")" + tag,
               SurdSum(QuadraticValue(reps[n - 1].value)) - SurdSum(my),
               rhs_sum(xp, y, omit));
      add_item("Mf(x_" + std::to_string(n) + ") - Mf(y_" + std::to_string(n) + ")" + tag,
               SurdSum(QuadraticValue(reps[n].value)) - SurdSum(my), rhs_sum(y, xn, omit));
      if (!sharpen) break;
    }
  }
  for (bool omit : {false, sharpen}) {
    std::string tag = omit ? " (sharpened)" : "";
    add_item("Mf(x_first) bound" + tag, SurdSum(reps.front().value),
             rhs_sum(std::nullopt, QuadraticValue(reps.front().x_star), omit));
    add_item("Mf(x_last) bound" + tag, SurdSum(reps.back().value),
             rhs_sum(QuadraticValue(reps.back().x_star), std::nullopt, omit));
    if (!sharpen) break;
  }

  report.all_hold = true;
  for (const auto& it : report.items) report.all_hold = report.all_hold && it.holds;
  return report;
}

struct VarSplitReport {
  bool applicable = false;
  bool holds = false;
  SurdSum total;
  SurdSum left_piece;
  SurdSum right_piece;
  std::vector<SurdSum> middle_terms;
  SurdSum recombined;
};

namespace auditdetail {

/// Variation of Mf over a half line ending (resp. starting) at a
/// representative: telescope over the extremum values strictly inside.
inline SurdSum halfline_var(const Envelope& env, const Rational& x_star, Side side) {
  SurdSum var;
  QuadraticValue xs(x_star);
  QuadraticValue boundary_value(env.eval().at(x_star));
  std::vector<QuadraticValue> vals;
  if (side == Side::left) {
    vals.push_back(QuadraticValue(env.piecewise().limit_left));
    for (const ExtremumNode& node : env.extrema())
      if (quad_cmp(node.x_hi, xs) == Ordering::less) vals.push_back(node.value);
    vals.push_back(boundary_value);
  } else {
    vals.push_back(boundary_value);
    for (const ExtremumNode& node : env.extrema())
      if (quad_cmp(node.x_lo, xs) == Ordering::greater) vals.push_back(node.value);
    vals.push_back(QuadraticValue(env.piecewise().limit_right));
  }
  for (std::size_t i = 1; i < vals.size(); ++i) {
    Ordering ord = quad_cmp(vals[i - 1], vals[i]);
    if (ord == Ordering::equal) continue;
    SurdSum d = SurdSum(vals[i]) - SurdSum(vals[i - 1]);
    var += ord == Ordering::less ? d : -d;
  }
  return var;
}

}  // namespace auditdetail

/// Verifies the exact decomposition of Var(Mf) into the two tail pieces plus
/// the alternating sums over interlacing maxima/minima.
inline VarSplitReport var_split_audit(const StepFunction& f) {
  Envelope env(f);
  const StepFunction& h = env.eval().abs_function();
  if (!is_alternating(h))
    throw ClassViolationError("var_split_audit: alternating-class input required");
  VarSplitReport report;
  report.total = var_of_m(env);
  auto reps = representatives(env);
  if (reps.empty()) {
    report.applicable = false;
    report.holds = true;
    return report;
  }
  report.applicable = true;
  auto ys = auditdetail::interlacing_minima(env, reps);
  report.left_piece = auditdetail::halfline_var(env, reps.front().x_star, Side::left);
  report.right_piece = auditdetail::halfline_var(env, reps.back().x_star, Side::right);
  report.recombined = report.left_piece + report.right_piece;
  for (std::size_t n = 1; n < reps.size(); ++n) {
    SurdSum term = SurdSum(reps[n - 1].value) + SurdSum(reps[n].value) -
                   SurdSum(ys[n - 1].second) - SurdSum(ys[n - 1].second);
    report.middle_terms.push_back(term);
    report.recombined += term;
  }
  report.holds = (report.total - report.recombined).signum() == 0;
  return report;
}

}  // namespace maxvar

#endif  // MAXVAR_MAXIMAL_CONTINUOUS_HPP
