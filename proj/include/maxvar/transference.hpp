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

#ifndef MAXVAR_TRANSFERENCE_HPP
#define MAXVAR_TRANSFERENCE_HPP

#include "maxvar/continuous_eval.hpp"
#include "maxvar/maximal_continuous.hpp"
#include "maxvar/maximal_discrete.hpp"
#include "maxvar/sample_set.hpp"
#include "maxvar/sequence.hpp"
#include "maxvar/step_function.hpp"

#include <vector>

namespace maxvar {

/// Exact signed integral of a step function (no absolute value).
class StepIntegrator {
 public:
  explicit StepIntegrator(const StepFunction& f) : f_(normalize(f)) {
    prefix_.emplace_back(0);
    for (std::size_t k = 0; k < f_.values.size(); ++k)
      prefix_.push_back(prefix_.back() +
                        f_.values[k] * (f_.breakpoints[k + 1] - f_.breakpoints[k]));
  }

  Rational integral(const Rational& x, const Rational& y) const {
    if (!(x <= y)) throw std::invalid_argument("integral: reversed bounds");
    const Rational& t0 = f_.breakpoints.front();
    const Rational& tK = f_.breakpoints.back();
    Rational total = 0;
    if (x < t0) total += f_.left_tail * (std::min(y, t0) - x);
    if (y > tK) total += f_.right_tail * (y - std::max(x, tK));
    Rational u = std::max(x, t0), v = std::min(y, tK);
    if (u < v) total += cumulative(v) - cumulative(u);
    return total;
  }

  const StepFunction& function() const { return f_; }

 private:
  Rational cumulative(const Rational& u) const {
    auto it = std::upper_bound(f_.breakpoints.begin(), f_.breakpoints.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - f_.breakpoints.begin());
    if (idx == 0) return Rational(0);
    if (idx > f_.values.size()) return prefix_.back();
    return prefix_[idx - 1] + f_.values[idx - 1] * (u - f_.breakpoints[idx - 1]);
  }

  StepFunction f_;
  std::vector<Rational> prefix_;
};

/// Natural extension: the step function constant on [n-1/2, n+1/2) with value
/// G(n). Preserves total variation and integer-point maximal values.
inline StepFunction extend(const BVSequence& g) {
  BVSequence h = normalize(g);
  StepFunction f;
  f.left_tail = h.left_tail;
  f.right_tail = h.right_tail;
  long long cb = h.core_begin(), ce = h.core_end();
  for (long long n = cb; n <= ce; ++n)
    f.breakpoints.push_back(Rational(2 * n - 1, 2));
  f.values = h.core;
  if (h.core.empty()) f.breakpoints = {Rational(2 * h.offset - 1, 2)};
  return normalize(f);
}

/// Dyadic cell averages at resolution N: G_N from g, tilde_G_N from |g|.
struct SamplePair {
  BVSequence averages;      // G_N
  BVSequence abs_averages;  // tilde G_N
  unsigned level = 0;
};

inline SamplePair sample(const StepFunction& g, unsigned level) {
  StepIntegrator signed_int(g);
  ContinuousMaximal abs_int(g);
  const StepFunction& f = signed_int.function();
  Rational scale = pow2(level);
  long long n_min =
      static_cast<long long>(rat_floor(f.breakpoints.front() * scale - Rational(1, 2))) - 1;
  long long n_max =
      static_cast<long long>(rat_ceil(f.breakpoints.back() * scale + Rational(1, 2))) + 1;
  SamplePair out;
  out.level = level;
  out.averages.left_tail = f.left_tail;
  out.averages.right_tail = f.right_tail;
  out.averages.offset = n_min;
  out.abs_averages.left_tail = rat_abs(f.left_tail);
  out.abs_averages.right_tail = rat_abs(f.right_tail);
  out.abs_averages.offset = n_min;
  for (long long n = n_min; n <= n_max; ++n) {
    Rational lo = Rational(2 * n - 1, 2) / scale;
    Rational hi = Rational(2 * n + 1, 2) / scale;
    out.averages.core.push_back(signed_int.integral(lo, hi) * scale);
    out.abs_averages.core.push_back(abs_int.integral(lo, hi) * scale);
  }
  out.averages = normalize(out.averages);
  out.abs_averages = normalize(out.abs_averages);
  return out;
}

/// E_{N*} = 2^{-N*} Z  intersected with  [-2^{N*}, 2^{N*}].
inline SampleSet grid(unsigned n_star) {
  SampleSet s;
  Rational step = pow2(-static_cast<long long>(n_star));
  long long count = 1ll << (2 * n_star);
  for (long long k = -count; k <= count; ++k) s.points.push_back(Rational(k) * step);
  return s;
}

/// Tail flattening: left tail value below -N, right tail value above N.
inline BVSequence truncate(const BVSequence& g, long long N) {
  BVSequence out;
  out.left_tail = g.left_tail;
  out.right_tail = g.right_tail;
  out.offset = -N;
  for (long long n = -N; n <= N; ++n) out.core.push_back(g.value_at(n));
  return normalize(out);
}

/// All exactly-assertable members of the sampling-procedure chain at finite
/// resolutions, plus the observed sampled-variation gap.
struct TransferReport {
  unsigned n_star = 0;
  unsigned level = 0;
  Rational var_grid_m;            // Var_{E_N*}(Mg)
  Rational var_grid_m_restricted; // Var_{E_N*}(M_N g)
  Rational var_gridN_m_tilde;     // Var_{E^N_N*}(M tilde G_N)
  Rational var_gridN_m_avg;       // Var_{E^N_N*}(M G_N)
  Rational var_m_avg;             // Var(M G_N)
  Rational var_g, var_avg, var_tilde;
  bool identity_holds = false;        // M tilde G_N(n) = M_N g(n / 2^N)
  bool grid_equality_holds = false;   // Var_{E}(M_N g) = Var_{E^N}(M tilde G_N)
  bool pointwise_dominance_holds = false;  // M G_N <= M tilde G_N on the grid
  bool sampled_le_total_holds = false;     // Var_{E^N}(M G_N) <= Var(M G_N)
  bool eq_t4_holds = false;                // max var of samples <= Var(g)
  SurdSum var_m_exact;   // Var(Mg)
  SurdSum sampled_gap;   // Var(Mg) - Var_{E_N*}(Mg)
};

inline TransferReport transfer_audit(const StepFunction& g, unsigned n_star, unsigned level) {
  if (level < n_star) throw std::invalid_argument("transfer_audit: need level >= n_star");
  TransferReport rep;
  rep.n_star = n_star;
  rep.level = level;
  ContinuousMaximal cm(g);
  SampleSet E = grid(n_star);
  std::vector<Rational> m_vals, mn_vals;
  for (const Rational& x : E.points) {
    m_vals.push_back(cm.at(x));
    mn_vals.push_back(cm.restricted_at(x, level));
  }
  rep.var_grid_m = variation_of_values(m_vals);
  rep.var_grid_m_restricted = variation_of_values(mn_vals);

  SamplePair pair = sample(g, level);
  DiscreteMaximal dm_tilde(pair.abs_averages);
  DiscreteMaximal dm_avg(pair.averages);
  Rational scale = pow2(level);
  rep.identity_holds = true;
  rep.pointwise_dominance_holds = true;
  std::vector<Rational> tilde_vals, avg_vals;
  for (std::size_t i = 0; i < E.points.size(); ++i) {
    Rational scaled = E.points[i] * scale;
    long long n = static_cast<long long>(numerator(scaled));
    if (denominator(scaled) != 1) throw std::logic_error("grid point did not scale to integer");
    Rational t = dm_tilde.at(n);
    Rational m = dm_avg.at(n);
    tilde_vals.push_back(t);
    avg_vals.push_back(m);
    if (t != mn_vals[i]) rep.identity_holds = false;
    if (m > t) rep.pointwise_dominance_holds = false;
  }
  rep.var_gridN_m_tilde = variation_of_values(tilde_vals);
  rep.var_gridN_m_avg = variation_of_values(avg_vals);
  rep.grid_equality_holds = rep.var_gridN_m_tilde == rep.var_grid_m_restricted;
  rep.var_m_avg = var_of_m_discrete(pair.averages);
  rep.sampled_le_total_holds = rep.var_gridN_m_avg <= rep.var_m_avg;
  rep.var_g = total_var(g);
  rep.var_avg = total_var(pair.averages);
  rep.var_tilde = total_var(pair.abs_averages);
  rep.eq_t4_holds = std::max(rep.var_avg, rep.var_tilde) <= rep.var_g;
  rep.var_m_exact = var_of_m(g);
  rep.sampled_gap = rep.var_m_exact - SurdSum(rep.var_grid_m);
  return rep;
}

}  // namespace maxvar

#endif  // MAXVAR_TRANSFERENCE_HPP
