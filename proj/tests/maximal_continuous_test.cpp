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

#include "maxvar/maximal_continuous.hpp"

#include "maxvar/sample_set.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace maxvar;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

StepFunction make_step(const char* a, const char* b, std::vector<const char*> bps,
                       std::vector<const char*> vals) {
  StepFunction f;
  f.left_tail = Q(a);
  f.right_tail = Q(b);
  for (auto* t : bps) f.breakpoints.push_back(Q(t));
  for (auto* v : vals) f.values.push_back(Q(v));
  return f;
}

StepFunction indicator_unit() { return make_step("0", "0", {"-1", "1"}, {"1"}); }

StepFunction g_family(const char* a, const char* b, const char* N) {
  return make_step(a, b, {"-1", "1"}, {N});
}

/// The limitation example: 1_{[-2,-1) u [1,2)} + C 1_{[-2,2)}.
StepFunction c_example(const Rational& C) {
  StepFunction f;
  f.left_tail = 0;
  f.right_tail = 0;
  f.breakpoints = {Q("-2"), Q("-1"), Q("1"), Q("2")};
  f.values = {C + 1, C, C + 1};
  return f;
}

StepFunction random_step(std::mt19937_64& rng, int max_pieces = 6, int value_bound = 6,
                         bool alternating = false, bool signed_values = false) {
  StepFunction f;
  auto draw = [&] {
    long long p = 1 + static_cast<long long>(rng() % value_bound);
    if (signed_values && rng() % 2) p = -p;
    long long q = 1 + static_cast<long long>(rng() % 4);
    return Rational(Integer(p), Integer(q));
  };
  f.left_tail = rng() % 3 ? draw() : Rational(0);
  f.right_tail = rng() % 3 ? draw() : Rational(0);
  int K = 1 + static_cast<int>(rng() % max_pieces);
  Rational t(-static_cast<long long>(rng() % 4) - 1);
  for (int k = 0; k <= K; ++k) {
    f.breakpoints.push_back(t);
    t += Rational(1 + static_cast<long long>(rng() % 8), 4);
  }
  for (int k = 0; k < K; ++k) {
    if (alternating && k % 2 == 1)
      f.values.emplace_back(0);
    else
      f.values.push_back(draw());
  }
  return f;
}

}  // namespace

TEST_CASE("m_at on the unit indicator") {
  StepFunction f = indicator_unit();
  CHECK(m_at(f, Q("0")) == 1);
  CHECK(m_at(f, Q("2")) == Q("1/3"));
  CHECK(m_at(f, Q("1")) == Q("1/2"));
  CHECK(m_at(f, Q("-1")) == Q("1/2"));
  CHECK(m_at(f, Q("5")) == Q("1/6"));
}

TEST_CASE("m_at dominates a fine brute-force radius grid") {
  std::mt19937_64 rng(404);
  for (int iter = 0; iter < 40; ++iter) {
    StepFunction f = random_step(rng);
    ContinuousMaximal cm(f);
    for (int px = -8; px <= 8; ++px) {
      Rational x(px, 2);
      Rational exact = cm.at(x);
      Rational best = 0;
      for (int rq = 1; rq <= 64; ++rq) {
        Rational r(rq, 8);
        best = std::max(best, cm.window_average(x, r));
      }
      CHECK(best <= exact);
      CHECK(exact >= cm.global_limit_candidate());
      CHECK(exact >= cm.local_candidate(x));
    }
  }
}

TEST_CASE("candidate curve family: pointwise max equals m_at") {
  std::mt19937_64 rng(505);
  for (int iter = 0; iter < 30; ++iter) {
    StepFunction f = random_step(rng, 5);
    auto curves = candidate_curves(f);
    ContinuousMaximal cm(f);
    std::vector<Rational> probes;
    for (int i = 0; i < 24; ++i)
      probes.push_back(Rational(static_cast<long long>(rng() % 97) - 48,
                                1 + static_cast<long long>(rng() % 8)));
    for (const Rational& t : cm.abs_function().breakpoints) probes.push_back(t);
    for (const Rational& x : probes) {
      Rational best(0);
      bool any = false;
      for (const auto& cc : curves) {
        auto v = candidate_value_at(cc, f, x);
        if (!v) continue;
        if (!any || *v > best) best = *v;
        any = true;
      }
      REQUIRE(any);
      CHECK(best == cm.at(x));
    }
  }
}

TEST_CASE("candidate curve count for the g_N family") {
  auto curves = candidate_curves(g_family("1", "0", "5"));
  std::size_t anchored = 0, constant = 0;
  for (const auto& cc : curves) {
    if (cc.kind == CurveKind::left_anchor || cc.kind == CurveKind::right_anchor)
      ++anchored;
    else
      ++constant;
  }
  CHECK(anchored == 4);
  CHECK(constant == 2);
}

TEST_CASE("envelope of the unit indicator") {
  StepFunction f = indicator_unit();
  Envelope env(f);
  const PiecewiseMax& pm = env.piecewise();
  CHECK(pm.limit_left == 0);
  CHECK(pm.limit_right == 0);
  CHECK(env.eval().at(Q("0")) == 1);
  for (const char* x : {"-3", "3", "7/2"}) {
    Rational xr = Q(x);
    CHECK(env.one_sided(xr, Side::left) == m_at(f, xr));
  }
  SurdSum v = var_of_m(env);
  REQUIRE(v.is_rational());
  CHECK(v.rational_part() == 2);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 256; ++i) {
    Rational x(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 6));
    Rational left = env.one_sided(x, Side::left);
    Rational right = env.one_sided(x, Side::right);
    CHECK(std::min(left, right) == env.eval().at(x));
  }
}

TEST_CASE("limitation example: extrema and exact variation") {
  Rational C(1000000);
  StepFunction g = c_example(C);
  Envelope env(g);
  // The outer maxima are plateaus over the tall pieces; their centers are the
  // reported locations -3/2 and 3/2. The middle maximum and both minima are
  // isolated points.
  std::vector<std::pair<Rational, Rational>> want_max = {
      {Q("-3/2"), C + 1}, {Q("0"), C + Q("1/2")}, {Q("3/2"), C + 1}};
  std::vector<std::pair<Rational, Rational>> want_min = {{Q("-1/2"), C + Q("1/3")},
                                                         {Q("1/2"), C + Q("1/3")}};
  std::vector<std::pair<Rational, Rational>> got_max, got_min;
  for (const ExtremumNode& node : env.extrema()) {
    REQUIRE(node.x_lo.is_rational());
    REQUIRE(node.x_hi.is_rational());
    REQUIRE(node.value.is_rational());
    Rational mid = (node.x_lo.rational() + node.x_hi.rational()) / 2;
    (node.is_max ? got_max : got_min).emplace_back(mid, node.value.rational());
    if (!node.is_max) CHECK(node.x_lo.rational() == node.x_hi.rational());
  }
  CHECK(got_max == want_max);
  CHECK(got_min == want_min);
  SurdSum v = var_of_m(env);
  REQUIRE(v.is_rational());
  CHECK(v.rational_part() == 2 * C + 4 - Q("1/3"));
  CHECK(v.rational_part() <= total_var(g));
}

TEST_CASE("optimality family: Var(Mg_N) = 2N - a - (a+b)/2") {
  for (const char* a : {"0", "1/2", "1", "2"})
    for (const char* b : {"0", "1/2", "1", "2"})
      for (const char* N : {"2", "5", "17"}) {
        Rational ra = Q(a), rb = Q(b), rN = Q(N);
        if (!(rN >= ra && ra >= rb)) continue;
        StepFunction g = g_family(a, b, N);
        CHECK(total_var(g) == 2 * rN - ra - rb);
        SurdSum v = var_of_m(g);
        REQUIRE(v.is_rational());
        CHECK(v.rational_part() == 2 * rN - ra - (ra + rb) / 2);
      }
}

TEST_CASE("constant function: trivial envelope") {
  StepFunction c = make_step("3", "3", {"0"}, {});
  Envelope env(c);
  CHECK(env.extrema().empty());
  SurdSum v = var_of_m(env);
  REQUIRE(v.is_rational());
  CHECK(v.rational_part() == 0);
  CHECK(env.eval().at(Q("7")) == 3);
}

TEST_CASE("one-sided limit law at breakpoints and random points") {
  std::mt19937_64 rng(8811);
  for (int iter = 0; iter < 60; ++iter) {
    StepFunction f = random_step(rng, 5, 5, false, true);
    Envelope env(f);
    std::vector<Rational> xs = env.eval().abs_function().breakpoints;
    for (int i = 0; i < 10; ++i)
      xs.push_back(Rational(static_cast<long long>(rng() % 65) - 32,
                            1 + static_cast<long long>(rng() % 4)));
    for (const Rational& x : xs) {
      Rational l = env.one_sided(x, Side::left);
      Rational r = env.one_sided(x, Side::right);
      CHECK(std::min(l, r) == env.eval().at(x));
    }
  }
}

TEST_CASE("envelope limits match the closed-form limit values") {
  std::mt19937_64 rng(9922);
  for (int iter = 0; iter < 60; ++iter) {
    StepFunction f = random_step(rng, 5, 5, false, true);
    Envelope env(f);
    CHECK(env.piecewise().limit_left == env.eval().limit_value(Side::left));
    CHECK(env.piecewise().limit_right == env.eval().limit_value(Side::right));
  }
}

TEST_CASE("sampled variation is a monotone lower bound for var_of_m") {
  std::mt19937_64 rng(31415);
  for (int iter = 0; iter < 25; ++iter) {
    StepFunction f = random_step(rng, 4, 4);
    Envelope env(f);
    SurdSum full = var_of_m(env);
    Rational prev_sample(0);
    for (int level = 0; level <= 4; ++level) {
      SampleSet grid;
      Rational step = pow2(-level);
      for (Rational x = Q("-16"); x <= Q("16"); x += step) grid.points.push_back(x);
      Rational sampled = var_over(grid, [&](const Rational& x) { return env.eval().at(x); });
      CHECK(sampled >= prev_sample);
      CHECK((full - SurdSum(sampled)).signum() >= 0);
      prev_sample = sampled;
    }
  }
}

TEST_CASE("theorem-1 inequality on random alternating instances") {
  std::mt19937_64 rng(140);
  for (int iter = 0; iter < 150; ++iter) {
    StepFunction f = random_step(rng, 6, 6, true, true);
    StepFunction h = abs_of(f);
    if (!is_alternating(h)) continue;
    SurdSum lhs = var_of_m(f);
    Rational rhs =
        total_var(h) - rat_abs(rat_abs(f.left_tail) - rat_abs(f.right_tail)) / 2;
    CHECK((SurdSum(rhs) - lhs).signum() >= 0);
  }
}

TEST_CASE("scaling and reflection invariance of var_of_m") {
  std::mt19937_64 rng(253);
  for (int iter = 0; iter < 25; ++iter) {
    StepFunction f = random_step(rng, 4, 4, false, true);
    SurdSum v = var_of_m(f);
    Rational c(7, 3);
    SurdSum vc = var_of_m(scale(f, c));
    SurdSum scaled = v;
    scaled.scale(c);
    CHECK((vc - scaled).signum() == 0);
    SurdSum vr = var_of_m(reflect(f));
    CHECK((vr - v).signum() == 0);
  }
}

TEST_CASE("representatives of the g_N family and edge cases") {
  auto reps = representatives(g_family("1", "0", "5"));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].x_star == 0);
  CHECK(reps[0].window_lo == -1);
  CHECK(reps[0].window_hi == 1);
  CHECK(reps[0].value == 5);

  CHECK(representatives(make_step("3", "3", {"0"}, {})).empty());
  CHECK_THROWS_AS(representatives(c_example(Rational(1000000))), ClassViolationError);
}

TEST_CASE("representatives: anchored windows, K^2 bound, Lemma-2 value cap") {
  std::mt19937_64 rng(369);
  for (int iter = 0; iter < 80; ++iter) {
    StepFunction f = random_step(rng, 6, 6, true);
    StepFunction h = abs_of(f);
    if (!is_alternating(h)) continue;
    auto reps = representatives(f);
    std::size_t K = h.values.size();
    CHECK(reps.size() <= K * K);
    for (const auto& rep : reps) {
      CHECK(rep.value <= std::min(h.values[rep.k1 - 1], h.values[rep.k2 - 1]));
      CHECK(rep.x_star == (rep.window_lo + rep.window_hi) / 2);
      CHECK(m_at(f, rep.x_star) == rep.value);
    }
  }
}

TEST_CASE("t_value and variation of the tent curve") {
  TCurve I{Q("-1"), Q("1")};
  CHECK(t_value(I, Q("0")) == 1);
  CHECK(t_value(I, Q("2")) == Q("1/3"));
  CHECK(t_value(I, Q("-2")) == Q("1/3"));
  SurdSum tail = var_t_over(I, QuadraticValue(Q("2")), std::nullopt);
  REQUIRE(tail.is_rational());
  CHECK(tail.rational_part() == Q("1/3"));
  SurdSum full = var_t_over(I, std::nullopt, std::nullopt);
  CHECK(full.rational_part() == 2);
  SurdSum inner = var_t_over(I, QuadraticValue(Q("-1/2")), QuadraticValue(Q("1/2")));
  CHECK(inner.rational_part() == 2 - Q("2/3") - Q("2/3"));
}

TEST_CASE("tent curve equals the maximal function of the indicator off the interval") {
  TCurve I{Q("-1"), Q("1")};
  StepFunction ind = indicator_unit();
  CHECK(t_value(I, I.center()) == m_at(ind, I.center()));
  for (const char* x : {"-4", "-2", "1", "3/2", "2", "9"})
    CHECK(t_value(I, Q(x)) == m_at(ind, Q(x)));
}

TEST_CASE("lemma3 audit holds on the alternating corpus") {
  std::mt19937_64 rng(5115);
  int applicable = 0;
  for (int iter = 0; iter < 60; ++iter) {
    StepFunction f = random_step(rng, 5, 5, true);
    if (!is_alternating(abs_of(f))) continue;
    Lemma3Report rep = lemma3_audit(f);
    if (rep.applicable) ++applicable;
    CHECK(rep.all_hold);
  }
  CHECK(applicable > 20);
}

TEST_CASE("var-split identity on the alternating corpus") {
  Rational five(5);
  VarSplitReport g5 = var_split_audit(g_family("1", "0", "5"));
  REQUIRE(g5.applicable);
  CHECK(g5.holds);
  REQUIRE(g5.left_piece.is_rational());
  CHECK(g5.left_piece.rational_part() == five - 1);
  CHECK(g5.right_piece.rational_part() == five - Q("1/2"));

  std::mt19937_64 rng(6226);
  for (int iter = 0; iter < 60; ++iter) {
    StepFunction f = random_step(rng, 5, 5, true);
    if (!is_alternating(abs_of(f))) continue;
    CHECK(var_split_audit(f).holds);
  }
}

TEST_CASE("restricted operator") {
  StepFunction f = make_step("0", "0", {"-1/2", "1/2"}, {"1"});
  ContinuousMaximal cm(f);
  for (unsigned N = 0; N <= 6; ++N) CHECK(cm.restricted_at(Q("0"), N) == 1);
  std::mt19937_64 rng(7117);
  for (int iter = 0; iter < 30; ++iter) {
    StepFunction g = random_step(rng, 4, 4);
    ContinuousMaximal c(g);
    for (int px = -6; px <= 6; ++px) {
      Rational x(px, 2);
      Rational exact = c.at(x);
      for (unsigned N = 0; N <= 10; N += 2) {
        Rational restricted = c.restricted_at(x, N);
        CHECK(restricted <= exact);
        if (N == 10) CHECK(exact - restricted <= Q("1/16"));
      }
    }
  }
}

TEST_CASE("one-sided and uncentered continuous operators") {
  StepFunction f = indicator_unit();
  ContinuousMaximal cm(f);
  CHECK(cm.one_sided_op_at(Q("-2")) == Q("2/3"));
  CHECK(cm.one_sided_op_at(Q("0")) == 1);
  CHECK(cm.one_sided_op_at(Q("2")) == 0);
  CHECK(cm.uncentered_op_at(Q("2")) == Q("2/3"));
  CHECK(cm.uncentered_op_at(Q("0")) == 1);
  std::mt19937_64 rng(8228);
  for (int iter = 0; iter < 40; ++iter) {
    StepFunction g = random_step(rng, 4, 4, false, true);
    ContinuousMaximal c(g);
    for (int px = -6; px <= 6; ++px) {
      Rational x(px, 2);
      CHECK(c.uncentered_op_at(x) >= c.at(x));
      CHECK(c.uncentered_op_at(x) >= c.one_sided_op_at(x));
      Rational best(0);
      for (int lq = 1; lq <= 24; ++lq)
        for (int rq = 1; rq <= 24; ++rq) {
          Rational r1(lq, 4), r2(rq, 4);
          best = std::max(best,
                          Rational(c.integral(x - r1, x + r2) / (r1 + r2)));
        }
      CHECK(best <= c.uncentered_op_at(x));
    }
  }
}
