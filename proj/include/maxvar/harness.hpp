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

#ifndef MAXVAR_HARNESS_HPP
#define MAXVAR_HARNESS_HPP

#include "maxvar/json_io.hpp"
#include "maxvar/maximal_continuous.hpp"
#include "maxvar/maximal_discrete.hpp"
#include "maxvar/transference.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace maxvar {

enum class Verdict { holds, violated, undecided };
enum class CheckMode { exact, certified };
enum class Domain { discrete, continuous };
enum class InstanceClass { alternating, general_simple, bump_on_plateau };

/// Outcome of one variation-inequality check:
///   lhs = Var(Mf), rhs = Var(f) - ||a|-|b||/2, margin = rhs - lhs.
struct CheckReport {
  Instance instance;
  SurdSum lhs;
  Rational rhs;
  SurdSum margin;
  Verdict verdict = Verdict::holds;
  CheckMode mode = CheckMode::exact;
  bool tight = false;
  std::uint64_t seq = 0;
};

namespace harnessdetail {

template <typename Inst>
Rational strengthened_rhs(const Inst& inst) {
  return total_var(inst) -
         rat_abs(rat_abs(inst.left_tail) - rat_abs(inst.right_tail)) / 2;
}

inline CheckReport finish_report(Instance inst, SurdSum lhs, Rational rhs, CheckMode mode) {
  CheckReport rep;
  rep.instance = std::move(inst);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.margin = SurdSum(rep.rhs) - rep.lhs;
  rep.mode = mode;
  int s = rep.margin.signum();
  rep.verdict = s >= 0 ? Verdict::holds : Verdict::violated;
  rep.tight = s == 0;
  return rep;
}

}  // namespace harnessdetail

inline CheckReport check_conjecture(const StepFunction& f) {
  SurdSum lhs = var_of_m(f);
  return harnessdetail::finish_report(
      f, lhs, harnessdetail::strengthened_rhs(f),
      lhs.is_rational() ? CheckMode::exact : CheckMode::certified);
}

inline CheckReport check_conjecture(const BVSequence& g) {
  return harnessdetail::finish_report(g, SurdSum(var_of_m_discrete(g)),
                                      harnessdetail::strengthened_rhs(g), CheckMode::exact);
}

inline CheckReport check_conjecture(const Instance& inst) {
  return std::visit([](const auto& v) { return check_conjecture(v); }, inst);
}

/// Same check restricted to the proven class; refuses anything else.
template <typename Inst>
CheckReport check_theorem1(const Inst& inst) {
  if (!is_alternating(abs_of(inst)))
    throw ClassViolationError(
        "check_theorem1: instance is not in the alternating class; use check_conjecture");
  return check_conjecture(inst);
}

inline CheckReport check_theorem1(const Instance& inst) {
  return std::visit([](const auto& v) { return check_theorem1(v); }, inst);
}

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  InstanceClass klass = InstanceClass::alternating;
  Domain domain = Domain::discrete;
  int k_max = 8;
  int value_bound = 8;
  int breakpoint_bound = 16;
  bool shrink = true;
  // Near-violations (margin below var(f)/denominator) get shrunk and logged.
  Integer near_denominator = Integer(1000000);
};

struct SearchSummary {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t near_violations = 0;
  std::uint64_t tight = 0;
  std::optional<CheckReport> min_margin;
  std::vector<CheckReport> findings;  // shrunk violations / near-violations
};

namespace harnessdetail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi]; plain modulo keeps the stream platform-stable.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

inline Rational draw_value(Rng& rng, int bound, bool allow_sign = true) {
  long long p = rng.range(0, bound);
  if (allow_sign && rng.coin()) p = -p;
  long long q = rng.range(1, 4);
  return Rational(Integer(p), Integer(q));
}

inline StepFunction gen_step(Rng& rng, const SearchConfig& cfg) {
  StepFunction f;
  if (cfg.klass == InstanceClass::bump_on_plateau) {
    // Two-scale family: short bumps riding the edges of a wide plateau.
    Rational C(rng.range(1, cfg.value_bound) * 8);
    Rational L(rng.range(2, 4));
    Rational w(rng.range(1, 2), rng.range(1, 2) * 2);
    Rational h(rng.range(1, cfg.value_bound), rng.range(1, 2));
    f.left_tail = 0;
    f.right_tail = 0;
    f.breakpoints = {-L, -L + w, L - w, L};
    f.values = {C + h, C, C + h};
    return f;
  }
  f.left_tail = draw_value(rng, cfg.value_bound);
  f.right_tail = draw_value(rng, cfg.value_bound);
  int K = static_cast<int>(rng.range(1, cfg.k_max));
  long long base = rng.range(-cfg.breakpoint_bound / 2, 0);
  Rational t(base);
  for (int k = 0; k <= K; ++k) {
    f.breakpoints.push_back(t);
    t += Rational(rng.range(1, 3)) + Rational(rng.range(0, 3), 4);
  }
  for (int k = 0; k < K; ++k) {
    if (cfg.klass == InstanceClass::alternating && k % 2 == 1)
      f.values.emplace_back(0);
    else
      f.values.push_back(draw_value(rng, cfg.value_bound));
  }
  return f;
}

inline BVSequence gen_seq(Rng& rng, const SearchConfig& cfg) {
  BVSequence g;
  if (cfg.klass == InstanceClass::bump_on_plateau) {
    long long C = rng.range(1, cfg.value_bound) * 8;
    long long L = rng.range(2, 5);
    Rational h(rng.range(1, cfg.value_bound), rng.range(1, 2));
    g.left_tail = 0;
    g.right_tail = 0;
    g.offset = -L;
    for (long long n = -L; n < L; ++n) {
      bool edge = n == -L || n == L - 1;
      g.core.push_back(Rational(C) + (edge ? h : Rational(0)));
    }
    return g;
  }
  g.left_tail = draw_value(rng, cfg.value_bound);
  g.right_tail = draw_value(rng, cfg.value_bound);
  g.offset = rng.range(-cfg.breakpoint_bound / 2, 0);
  int runs = static_cast<int>(rng.range(1, cfg.k_max));
  for (int k = 0; k < runs; ++k) {
    Rational v = (cfg.klass == InstanceClass::alternating && k % 2 == 1)
                     ? Rational(0)
                     : draw_value(rng, cfg.value_bound);
    long long len = rng.range(1, 3);
    for (long long i = 0; i < len; ++i) g.core.push_back(v);
  }
  return g;
}

inline Instance gen_instance(Rng& rng, const SearchConfig& cfg) {
  if (cfg.domain == Domain::continuous) return gen_step(rng, cfg);
  return gen_seq(rng, cfg);
}

/// Deterministic greedy shrink: keeps applying the first structure-reducing
/// edit that preserves the predicate. Every edit strictly shrinks a finite
/// measure (piece count, non-integer count, nonzero count), so this stops.
template <typename Inst>
Inst shrink_while(Inst inst, const std::function<bool(const Inst&)>& pred);

inline std::vector<StepFunction> shrink_options(const StepFunction& f) {
  std::vector<StepFunction> opts;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    StepFunction g = f;
    g.values.erase(g.values.begin() + static_cast<long>(k));
    g.breakpoints.erase(g.breakpoints.begin() + static_cast<long>(k));
    opts.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (f.values[k] == 0) continue;
    StepFunction g = f;
    g.values[k] = 0;
    opts.push_back(std::move(g));
    if (denominator(f.values[k]) != 1) {
      StepFunction h = f;
      h.values[k] = Rational(numerator(f.values[k]) / denominator(f.values[k]));
      opts.push_back(std::move(h));
    }
  }
  for (Rational StepFunction::* tail : {&StepFunction::left_tail, &StepFunction::right_tail}) {
    if (f.*tail == 0) continue;
    StepFunction g = f;
    g.*tail = 0;
    opts.push_back(std::move(g));
    if (denominator(f.*tail) != 1) {
      StepFunction h = f;
      h.*tail = Rational(numerator(f.*tail) / denominator(f.*tail));
      opts.push_back(std::move(h));
    }
  }
  for (std::size_t k = 0; k < f.breakpoints.size(); ++k) {
    if (denominator(f.breakpoints[k]) == 1) continue;
    StepFunction g = f;
    g.breakpoints[k] = Rational(rat_floor(f.breakpoints[k]));
    bool ok = true;
    for (std::size_t i = 1; i < g.breakpoints.size(); ++i)
      ok = ok && g.breakpoints[i - 1] < g.breakpoints[i];
    if (ok) opts.push_back(std::move(g));
  }
  return opts;
}

inline std::vector<BVSequence> shrink_options(const BVSequence& f) {
  std::vector<BVSequence> opts;
  for (std::size_t k = 0; k < f.core.size(); ++k) {
    BVSequence g = f;
    g.core.erase(g.core.begin() + static_cast<long>(k));
    opts.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < f.core.size(); ++k) {
    if (f.core[k] == 0) continue;
    BVSequence g = f;
    g.core[k] = 0;
    opts.push_back(std::move(g));
    if (denominator(f.core[k]) != 1) {
      BVSequence h = f;
      h.core[k] = Rational(numerator(f.core[k]) / denominator(f.core[k]));
      opts.push_back(std::move(h));
    }
  }
  for (Rational BVSequence::* tail : {&BVSequence::left_tail, &BVSequence::right_tail}) {
    if (f.*tail == 0) continue;
    BVSequence g = f;
    g.*tail = 0;
    opts.push_back(std::move(g));
    if (denominator(f.*tail) != 1) {
      BVSequence h = f;
      h.*tail = Rational(numerator(f.*tail) / denominator(f.*tail));
      opts.push_back(std::move(h));
    }
  }
  return opts;
}

template <typename Inst>
Inst shrink_while(Inst inst, const std::function<bool(const Inst&)>& pred) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (Inst& option : shrink_options(inst)) {
      bool valid = true;
      try {
        if (!pred(option)) valid = false;
      } catch (const std::exception&) {
        valid = false;
      }
      if (valid) {
        inst = std::move(option);
        improved = true;
        break;
      }
    }
  }
  return inst;
}

}  // namespace harnessdetail

/// Deterministic seeded search. Identical config, identical stream, identical
/// summary. Violations and near-violations are shrunk while preserving the
/// finding and re-verified exactly.
inline SearchSummary search(const SearchConfig& cfg,
                            std::vector<CheckReport>* all_reports = nullptr) {
  harnessdetail::Rng rng(cfg.seed);
  SearchSummary summary;
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    Instance inst = harnessdetail::gen_instance(rng, cfg);
    CheckReport rep = cfg.klass == InstanceClass::alternating ? check_theorem1(inst)
                                                              : check_conjecture(inst);
    rep.seq = i;
    ++summary.checked;
    if (rep.tight) ++summary.tight;

    Rational var_f = std::visit([](const auto& v) { return total_var(v); }, inst);
    Rational near_threshold = var_f / Rational(cfg.near_denominator);
    bool violated = rep.verdict == Verdict::violated;
    bool near = !violated && !rep.tight && rep.margin.compare(near_threshold) == Ordering::less;
    if (violated) ++summary.violations;
    if (near) ++summary.near_violations;

    if ((violated || near) && cfg.shrink) {
      CheckReport shrunk = rep;
      if (std::holds_alternative<StepFunction>(inst)) {
        auto pred = [&](const StepFunction& s) {
          CheckReport r = check_conjecture(s);
          if (violated) return r.verdict == Verdict::violated;
          return !r.tight && r.margin.compare(total_var(s) / Rational(cfg.near_denominator)) ==
                                 Ordering::less;
        };
        StepFunction small =
            harnessdetail::shrink_while(std::get<StepFunction>(inst), std::function(pred));
        shrunk = check_conjecture(small);
      } else {
        auto pred = [&](const BVSequence& s) {
          CheckReport r = check_conjecture(s);
          if (violated) return r.verdict == Verdict::violated;
          return !r.tight && r.margin.compare(total_var(s) / Rational(cfg.near_denominator)) ==
                                 Ordering::less;
        };
        BVSequence small =
            harnessdetail::shrink_while(std::get<BVSequence>(inst), std::function(pred));
        shrunk = check_conjecture(small);
      }
      shrunk.seq = i;
      summary.findings.push_back(shrunk);
    }

    if (!summary.min_margin ||
        (rep.margin - summary.min_margin->margin).signum() < 0)
      summary.min_margin = rep;
    if (all_reports) all_reports->push_back(rep);
  }
  return summary;
}

/// Exact reproduction of the worked examples: the optimality family, the
/// bump-on-plateau limitation example, the one-sided/uncentered lower bounds,
/// and the extension identity. Any mismatch is reported with both values.
struct ReproduceReport {
  bool ok = true;
  std::vector<std::string> lines;

  void expect(const std::string& what, const Rational& got, const Rational& want) {
    if (got == want) {
      lines.push_back("ok   " + what + " = " + to_string(got));
    } else {
      ok = false;
      lines.push_back("FAIL " + what + ": got " + to_string(got) + ", want " + to_string(want));
    }
  }
  void expect_true(const std::string& what, bool got) {
    lines.push_back(std::string(got ? "ok   " : "FAIL ") + what);
    ok = ok && got;
  }
};

inline StepFunction optimality_family(const Rational& a, const Rational& b, const Rational& N) {
  StepFunction f;
  f.left_tail = a;
  f.right_tail = b;
  f.breakpoints = {Rational(-1), Rational(1)};
  f.values = {N};
  return f;
}

inline BVSequence r2_family(const Rational& a, const Rational& b, const Rational& N) {
  BVSequence g;
  g.left_tail = a;
  g.right_tail = b;
  g.offset = 0;
  g.core = {N};
  return g;
}

inline ReproduceReport reproduce_paper() {
  ReproduceReport rep;
  std::vector<Rational> ab_grid = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (const Rational& a : ab_grid)
    for (const Rational& b : ab_grid)
      for (long long n : {2, 5, 17}) {
        Rational N(n);
        if (!(N >= a && a >= b && b >= 0)) continue;
        StepFunction g = optimality_family(a, b, N);
        std::string tag = "(a=" + to_string(a) + ",b=" + to_string(b) + ",N=" + to_string(N) + ")";
        rep.expect("Var(g_N) " + tag, total_var(g), 2 * N - a - b);
        SurdSum vm = var_of_m(g);
        if (auto r = vm.as_rational()) {
          rep.expect("Var(Mg_N) " + tag, *r, 2 * N - a - (a + b) / 2);
        } else {
          rep.expect_true("Var(Mg_N) rational " + tag, false);
        }
      }

  {
    Rational C(1000000);
    StepFunction g;
    g.left_tail = 0;
    g.right_tail = 0;
    g.breakpoints = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
    g.values = {C + 1, C, C + 1};
    Envelope env(g);
    std::vector<std::pair<Rational, Rational>> maxima, minima;
    for (const ExtremumNode& node : env.extrema()) {
      Rational mid = (node.x_lo.rational() + node.x_hi.rational()) / 2;
      (node.is_max ? maxima : minima).emplace_back(mid, node.value.rational());
    }
    bool max_ok = maxima == std::vector<std::pair<Rational, Rational>>{
                                {Rational(-3, 2), C + 1}, {Rational(0), C + Rational(1, 2)},
                                {Rational(3, 2), C + 1}};
    bool min_ok = minima == std::vector<std::pair<Rational, Rational>>{
                                {Rational(-1, 2), C + Rational(1, 3)},
                                {Rational(1, 2), C + Rational(1, 3)}};
    rep.expect_true("limitation example maxima at -3/2, 0, 3/2 (C+1, C+1/2, C+1)", max_ok);
    rep.expect_true("limitation example minima at -1/2, 1/2 (C+1/3)", min_ok);
    SurdSum vm = var_of_m(env);
    rep.expect("limitation example Var(Mg)", vm.is_rational() ? vm.rational_part() : Rational(-1),
               2 * C + 4 - Rational(1, 3));
  }

  for (const Rational& a : ab_grid)
    for (const Rational& b : ab_grid)
      for (long long n : {3, 8}) {
        BVSequence G = r2_family(a, b, Rational(n));
        DiscreteMaximal dm(G);
        const BVSequence& habs = dm.abs_sequence();
        bool one_sided_ok = true, uncentered_ok = true;
        for (long long m = -6; m <= 6; ++m) {
          Rational hv = habs.value_at(m);
          if (dm.at(m, MaxVariant::one_sided) < std::max(hv, habs.right_tail))
            one_sided_ok = false;
          if (dm.at(m, MaxVariant::uncentered) <
              std::max({hv, habs.left_tail, habs.right_tail}))
            uncentered_ok = false;
        }
        std::string tag = " (a=" + to_string(a) + ",b=" + to_string(b) +
                          ",N=" + std::to_string(n) + ")";
        rep.expect_true("one-sided lower bound" + tag, one_sided_ok);
        rep.expect_true("uncentered lower bound" + tag, uncentered_ok);
      }

  {
    bool extension_ok = true;
    for (long long n : {2, 5}) {
      BVSequence G = r2_family(Rational(1), Rational(0), Rational(n));
      StepFunction g = extend(G);
      DiscreteMaximal dm(G);
      ContinuousMaximal cm(g);
      for (long long m = -8; m <= 8; ++m)
        if (cm.at(Rational(m)) != dm.at(m)) extension_ok = false;
    }
    rep.expect_true("extension identity Mg(n) = MG(n) on the family", extension_ok);
  }
  return rep;
}

/// Family-based lower-bound evidence for the operator constants.
struct ConstantEstimate {
  MaxVariant op = MaxVariant::centered;
  Domain domain = Domain::continuous;
  Rational a, b;
  std::vector<long long> family_n;
  std::vector<Rational> ratios;   // Var(M g_N) / Var(g_N)
  std::vector<Rational> margins;  // Var(g_N) - Var(M g_N)
  Rational big_c_lower;           // implied lower bound for C
  Rational small_c_upper;         // implied upper bound for c_a^b
  Instance witness;
};

inline ConstantEstimate estimate_constants(MaxVariant op, Domain domain, const Rational& a,
                                           const Rational& b, long long n_max) {
  if (domain == Domain::continuous && op != MaxVariant::centered)
    throw std::invalid_argument(
        "estimate_constants: one-sided/uncentered bounds are computed on the discrete family; "
        "the transference equivalence carries them to the continuous setting");
  ConstantEstimate est;
  est.op = op;
  est.domain = domain;
  est.a = a;
  est.b = b;
  bool first = true;
  for (long long n = 2; n <= n_max; n = n < 8 ? n + 1 : n * 2) {
    Rational N(n);
    if (!(N >= a)) continue;
    est.family_n.push_back(n);
    Rational var_f, var_m;
    if (domain == Domain::continuous) {
      StepFunction g = optimality_family(a, b, N);
      var_f = total_var(g);
      var_m = var_of_m(g).as_rational().value();
      if (n == n_max || est.family_n.size() == 1) est.witness = g;
      est.witness = g;
    } else {
      BVSequence g = r2_family(a, b, N);
      var_f = total_var(g);
      var_m = var_of_m_discrete_variant(g, op);
      est.witness = g;
    }
    Rational ratio = var_f == 0 ? Rational(0) : var_m / var_f;
    Rational margin = var_f - var_m;
    est.ratios.push_back(ratio);
    est.margins.push_back(margin);
    if (first || ratio > est.big_c_lower) est.big_c_lower = ratio;
    if (first || margin < est.small_c_upper) est.small_c_upper = margin;
    first = false;
  }
  return est;
}

}  // namespace maxvar

#endif  // MAXVAR_HARNESS_HPP
