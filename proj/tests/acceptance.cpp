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
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any fails. All thresholds are exact rational
// comparisons; nothing here is tuned after the fact.

#include "maxvar/harness.hpp"
#include "maxvar/report_json.hpp"
#include "maxvar/transference.hpp"

#include "oracles.hpp"

#include <chrono>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

using namespace maxvar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Deterministic parallel map-reduce: results depend only on the instance
/// list, never on scheduling.
template <typename Inst, typename Fn>
std::size_t count_failures(const std::vector<Inst>& instances, Fn&& check) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::size_t>> futs;
  std::size_t chunk = (instances.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(instances.size(), lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::size_t bad = 0;
      for (std::size_t i = lo; i < hi; ++i)
        if (!check(instances[i])) ++bad;
      return bad;
    }));
  }
  std::size_t bad = 0;
  for (auto& f : futs) bad += f.get();
  return bad;
}

Outcome criterion1_optimality_family() {
  Outcome out;
  std::vector<Rational> ab = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  int checked = 0;
  for (const Rational& a : ab)
    for (const Rational& b : ab)
      for (long long n : {2, 5, 17}) {
        Rational N(n);
        if (!(N >= a && a >= b && b >= 0)) continue;
        StepFunction g = optimality_family(a, b, N);
        if (total_var(g) != 2 * N - a - b) out.ok = false;
        SurdSum vm = var_of_m(g);
        if (!vm.is_rational() || vm.rational_part() != 2 * N - a - (a + b) / 2) out.ok = false;
        ++checked;
      }
  out.detail = std::to_string(checked) + " (a,b,N) triples, exact equality";
  return out;
}

Outcome criterion2_limitation_example() {
  Outcome out;
  Rational C(1000000);
  StepFunction g;
  g.left_tail = 0;
  g.right_tail = 0;
  g.breakpoints = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
  g.values = {C + 1, C, C + 1};
  Envelope env(g);
  std::vector<std::pair<Rational, Rational>> maxima, minima;
  for (const ExtremumNode& node : env.extrema()) {
    if (!node.x_lo.is_rational() || !node.value.is_rational()) {
      out.ok = false;
      continue;
    }
    Rational mid = (node.x_lo.rational() + node.x_hi.rational()) / 2;
    (node.is_max ? maxima : minima).emplace_back(mid, node.value.rational());
  }
  out.ok = out.ok &&
           maxima == std::vector<std::pair<Rational, Rational>>{{Rational(-3, 2), C + 1},
                                                                {Rational(0), C + Rational(1, 2)},
                                                                {Rational(3, 2), C + 1}} &&
           minima == std::vector<std::pair<Rational, Rational>>{
                         {Rational(-1, 2), C + Rational(1, 3)},
                         {Rational(1, 2), C + Rational(1, 3)}};
  SurdSum vm = var_of_m(env);
  out.ok = out.ok && vm.is_rational() && vm.rational_part() == 2 * C + 4 - Rational(1, 3);
  out.detail = "maxima/minima locations and Var(Mg) = 2C + 4 - 1/3 exact";
  return out;
}

Outcome criterion3_theorem1_suite() {
  Outcome out;
  std::uint64_t violations = 0, checked = 0;
  for (Domain dom : {Domain::discrete, Domain::continuous}) {
    SearchConfig cfg;
    cfg.seed = 20260810;
    cfg.count = 10000;
    cfg.klass = InstanceClass::alternating;
    cfg.domain = dom;
    cfg.k_max = 12;
    cfg.value_bound = 16;
    harnessdetail::Rng rng(cfg.seed);
    std::vector<Instance> instances;
    instances.reserve(cfg.count);
    for (std::uint64_t i = 0; i < cfg.count; ++i)
      instances.push_back(harnessdetail::gen_instance(rng, cfg));
    violations += count_failures(instances, [](const Instance& inst) {
      return check_theorem1(inst).verdict == Verdict::holds;
    });
    checked += cfg.count;
  }
  out.ok = violations == 0;
  out.detail = std::to_string(checked) + " alternating instances (both domains), " +
               std::to_string(violations) + " violations";
  return out;
}

Outcome criterion4_discrete_oracle() {
  Outcome out;
  std::vector<BVSequence> instances;
  std::set<std::string> seen;
  // Exhaustive: every core of length <= 6 over {0,1,2,3}, zero tails.
  for (int len = 0; len <= 6; ++len) {
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= 4;
    for (std::size_t codeword = 0; codeword < total; ++codeword) {
      BVSequence g;
      g.left_tail = 0;
      g.right_tail = 0;
      g.offset = 0;
      std::size_t c = codeword;
      for (int i = 0; i < len; ++i) {
        g.core.emplace_back(static_cast<long long>(c % 4));
        c /= 4;
      }
      BVSequence norm = normalize(g);
      std::string key = to_json(norm).dump();
      if (seen.insert(key).second) instances.push_back(norm);
    }
  }
  std::size_t exhaustive = instances.size();
  // Random rational-valued instances.
  harnessdetail::Rng rng(424242);
  for (int i = 0; i < 1000; ++i) {
    BVSequence g;
    g.left_tail = harnessdetail::draw_value(rng, 8);
    g.right_tail = harnessdetail::draw_value(rng, 8);
    g.offset = rng.range(-3, 3);
    long long len = rng.range(0, 6);
    for (long long k = 0; k < len; ++k) g.core.push_back(harnessdetail::draw_value(rng, 8));
    instances.push_back(std::move(g));
  }
  std::size_t bad = count_failures(instances, [](const BVSequence& g) {
    return var_of_m_discrete(g) == oracle::var_centered_bruteforce(g, 10000);
  });
  out.ok = bad == 0;
  out.detail = std::to_string(exhaustive) + " exhaustive + 1000 random instances vs window " +
               "+-10^4 oracle, " + std::to_string(bad) + " mismatches";
  return out;
}

Outcome criterion5_transference() {
  Outcome out;
  harnessdetail::Rng rng(515151);
  std::vector<BVSequence> seqs;
  for (int i = 0; i < 1000; ++i) {
    BVSequence g;
    g.left_tail = harnessdetail::draw_value(rng, 8);
    g.right_tail = harnessdetail::draw_value(rng, 8);
    g.offset = rng.range(-4, 2);
    long long len = rng.range(0, 8);
    for (long long k = 0; k < len; ++k) g.core.push_back(harnessdetail::draw_value(rng, 8));
    seqs.push_back(std::move(g));
  }
  std::size_t bad_ext = count_failures(seqs, [](const BVSequence& g) {
    StepFunction f = extend(g);
    DiscreteMaximal dm(g);
    ContinuousMaximal cm(f);
    long long span = std::max<long long>(g.core_end() - g.core_begin(), 1);
    for (long long n = g.core_begin() - 2 * span; n <= g.core_end() + 2 * span; ++n)
      if (cm.at(Rational(n)) != dm.at(n)) return false;
    return total_var(f) == total_var(g);
  });

  SearchConfig gen;
  gen.seed = 616161;
  gen.klass = InstanceClass::general_simple;
  gen.domain = Domain::continuous;
  gen.k_max = 5;
  gen.value_bound = 6;
  harnessdetail::Rng rng2(gen.seed);
  std::vector<StepFunction> steps;
  for (int i = 0; i < 100; ++i) steps.push_back(harnessdetail::gen_step(rng2, gen));
  std::size_t bad_sample = count_failures(steps, [](const StepFunction& f) {
    for (unsigned level = 1; level <= 4; ++level) {
      TransferReport rep = transfer_audit(f, 1, level);
      if (!rep.identity_holds || !rep.eq_t4_holds || !rep.grid_equality_holds ||
          !rep.pointwise_dominance_holds || !rep.sampled_le_total_holds)
        return false;
    }
    return true;
  });
  out.ok = bad_ext == 0 && bad_sample == 0;
  out.detail = "1000 extension identities + 100 sampling audits at N in {1..4}, " +
               std::to_string(bad_ext + bad_sample) + " failures";
  return out;
}

Outcome criterion6_one_sided_law() {
  Outcome out;
  SearchConfig gen;
  gen.seed = 717171;
  gen.klass = InstanceClass::general_simple;
  gen.domain = Domain::continuous;
  gen.k_max = 8;
  gen.value_bound = 8;
  harnessdetail::Rng rng(gen.seed);
  std::vector<StepFunction> steps;
  for (int i = 0; i < 1000; ++i) steps.push_back(harnessdetail::gen_step(rng, gen));
  std::size_t bad = count_failures(steps, [](const StepFunction& f) {
    Envelope env(f);
    for (const Rational& t : env.eval().abs_function().breakpoints) {
      Rational l = env.one_sided(t, Side::left);
      Rational r = env.one_sided(t, Side::right);
      if (std::min(l, r) != env.eval().at(t)) return false;
    }
    return true;
  });
  out.ok = bad == 0;
  out.detail = "Mf(x) = min{Mf(x-), Mf(x+)} at every breakpoint of 1000 instances, " +
               std::to_string(bad) + " failures";
  return out;
}

Outcome criterion7_constants() {
  Outcome out;
  ConstantEstimate c = estimate_constants(MaxVariant::centered, Domain::continuous, Rational(1),
                                          Rational(0), 64);
  for (std::size_t i = 0; i < c.family_n.size(); ++i) {
    Rational N(c.family_n[i]);
    if (!(c.ratios[i] > 1 - Rational(2) / N)) out.ok = false;
    if (c.margins[i] != Rational(1, 2)) out.ok = false;  // a - (a+b)/2 with (a,b) = (1,0)
  }
  if (c.family_n.empty() || c.family_n.back() != 64) out.ok = false;
  if (c.small_c_upper != Rational(1, 2)) out.ok = false;

  ConstantEstimate os = estimate_constants(MaxVariant::one_sided, Domain::discrete, Rational(0),
                                           Rational(1), 64);
  if (os.family_n.empty() || os.family_n.back() != 64) out.ok = false;
  if (os.margins.empty() || os.margins.back() != 1) out.ok = false;  // max{0, b-a} = 1
  ConstantEstimate os2 = estimate_constants(MaxVariant::one_sided, Domain::discrete, Rational(1),
                                            Rational(0), 64);
  if (os2.margins.empty() || os2.margins.back() != 0) out.ok = false;  // max{0, b-a} = 0
  ConstantEstimate un = estimate_constants(MaxVariant::uncentered, Domain::discrete, Rational(1),
                                           Rational(0), 64);
  if (un.margins.empty() || un.margins.back() != 1) out.ok = false;  // |b-a| = 1
  ConstantEstimate un2 = estimate_constants(MaxVariant::uncentered, Domain::discrete, Rational(0),
                                            Rational(1), 64);
  if (un2.margins.empty() || un2.margins.back() != 1) out.ok = false;
  out.detail = "g_N ratios exceed 1 - 2/N with margin (a-b)/2; one-sided/uncentered margins "
               "max{0,b-a} and |b-a| at N = 64";
  return out;
}

Outcome criterion8_grid_convergence() {
  Outcome out;
  harnessdetail::Rng rng(818181);
  std::vector<StepFunction> corpus;
  // Narrow dyadic bumps on a flat background: variation concentrates well
  // inside the level-6 grid, which is what the gap bound needs.
  for (int i = 0; i < 50; ++i) {
    Rational background(rng.range(0, 2), 2);  // 0, 1/2, 1
    int bumps = static_cast<int>(rng.range(1, 2));
    StepFunction h;
    h.left_tail = background;
    h.right_tail = background;
    long long cursor = rng.range(-28, -8);  // sixteenths
    for (int k = 0; k < bumps; ++k) {
      if (k > 0) h.values.push_back(background);
      h.breakpoints.push_back(Rational(cursor, 16));
      h.values.push_back(background + Rational(rng.range(2, 4), 2));  // heights 1..2
      h.breakpoints.push_back(Rational(cursor + 1, 16));
      cursor += 3 + rng.range(2, 12);
    }
    corpus.push_back(normalize(h));
  }

  int failures = 0;
  for (const StepFunction& f : corpus) {
    Envelope env(f);
    SurdSum full = var_of_m(env);
    Rational prev(-1);
    Rational at6;
    bool monotone = true, bounded = true;
    for (unsigned n_star = 0; n_star <= 6; ++n_star) {
      Rational sampled =
          var_over(grid(n_star), [&](const Rational& x) { return env.eval().at(x); });
      if (sampled < prev) monotone = false;
      if ((full - SurdSum(sampled)).signum() < 0) bounded = false;
      prev = sampled;
      if (n_star == 6) at6 = sampled;
    }
    SurdSum gap = full - SurdSum(at6);
    Rational bound = (1 + total_var(f)) / 1024;
    bool gap_ok = (SurdSum(bound) - gap).signum() > 0;
    if (!(monotone && bounded && gap_ok)) ++failures;
  }
  out.ok = failures == 0;
  out.detail = "50-instance corpus: sampled variation nondecreasing in N*, bounded by Var(Mf), "
               "gap at N*=6 below 2^-10 (1 + Var(f)); " +
               std::to_string(failures) + " failures";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {1, "optimality family exact values", criterion1_optimality_family},
      {2, "limitation example extrema and variation", criterion2_limitation_example},
      {3, "theorem-1 invariant suite (10^4 per domain)", criterion3_theorem1_suite},
      {4, "discrete variation oracle equivalence", criterion4_discrete_oracle},
      {5, "transference identities", criterion5_transference},
      {6, "one-sided limit law", criterion6_one_sided_law},
      {7, "constant estimates along the families", criterion7_constants},
      {8, "grid convergence of sampled variation", criterion8_grid_convergence},
  };
  bool all_ok = true;
  for (const Entry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = e.run();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.label << " — "
         << out.detail << " [" << dt << " s]";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && out.ok;
  }
  std::cout << (all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return all_ok ? 0 : 1;
}
