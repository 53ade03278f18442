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

#include "maxvar/harness.hpp"
#include "maxvar/report_json.hpp"
#include "maxvar/transference.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace maxvar;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct InstanceArgs {
  std::string file;
  std::string inline_json;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--file", file, "instance JSON file");
    auto* i = cmd->add_option("--inline", inline_json, "instance JSON literal");
    f->excludes(i);
  }

  Instance load() const {
    Json j;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open instance file: " + file);
      j = Json::parse(in);
    } else if (!inline_json.empty()) {
      j = Json::parse(inline_json);
    } else {
      throw std::runtime_error("need --file or --inline");
    }
    return instance_from_json(j);
  }
};

MaxVariant parse_variant(const std::string& s) {
  if (s == "centered") return MaxVariant::centered;
  if (s == "one-sided" || s == "one_sided") return MaxVariant::one_sided;
  if (s == "uncentered") return MaxVariant::uncentered;
  throw std::runtime_error("unknown variant: " + s);
}

int run_eval(const InstanceArgs& args, const std::string& x_str, const std::string& variant_str) {
  Instance inst = args.load();
  MaxVariant variant = parse_variant(variant_str);
  Rational x = parse_rational(x_str);
  if (std::holds_alternative<StepFunction>(inst)) {
    ContinuousMaximal cm(std::get<StepFunction>(inst));
    Rational v;
    switch (variant) {
      case MaxVariant::centered:
        v = cm.at(x);
        break;
      case MaxVariant::one_sided:
        v = cm.one_sided_op_at(x);
        break;
      case MaxVariant::uncentered:
        v = cm.uncentered_op_at(x);
        break;
    }
    std::cout << to_string(v) << "\n";
  } else {
    if (denominator(x) != 1)
      throw std::runtime_error("discrete instances evaluate at integer points only");
    long long n = static_cast<long long>(numerator(x));
    std::cout << to_string(m_discrete_at(std::get<BVSequence>(inst), n, variant)) << "\n";
  }
  return kExitOk;
}

int run_var(const InstanceArgs& args) {
  Instance inst = args.load();
  Rational v = std::visit([](const auto& f) { return total_var(f); }, inst);
  std::cout << to_string(v) << "\n";
  return kExitOk;
}

int run_maxvar(const InstanceArgs& args, const std::string& variant_str) {
  Instance inst = args.load();
  MaxVariant variant = parse_variant(variant_str);
  if (std::holds_alternative<BVSequence>(inst)) {
    Rational v = var_of_m_discrete_variant(std::get<BVSequence>(inst), variant);
    std::cout << to_string(v) << " mode=exact\n";
    return kExitOk;
  }
  if (variant != MaxVariant::centered)
    throw std::runtime_error(
        "exact Var is implemented for the centered operator on step functions; one-sided and "
        "uncentered variations are available for sequences");
  SurdSum v = var_of_m(std::get<StepFunction>(inst));
  if (v.is_rational()) {
    std::cout << to_string(v.rational_part()) << " mode=exact\n";
  } else {
    std::cout << v.to_exact_string() << " (approx " << v.to_decimal_string()
              << ") mode=certified\n";
  }
  return kExitOk;
}

int run_check(const InstanceArgs& args, bool theorem1, bool as_json) {
  Instance inst = args.load();
  CheckReport rep;
  try {
    rep = theorem1 ? check_theorem1(inst) : check_conjecture(inst);
  } catch (const ClassViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (as_json) {
    std::cout << to_json(rep).dump() << "\n";
  } else {
    std::string verdict = rep.verdict == Verdict::holds
                              ? (rep.tight ? "HOLDS(tight)" : "HOLDS")
                              : "VIOLATED";
    std::cout << "lhs=" << rep.lhs.to_exact_string() << " rhs=" << to_string(rep.rhs)
              << " margin=" << rep.margin.to_exact_string() << " " << verdict << "\n";
  }
  return rep.verdict == Verdict::violated ? kExitViolation : kExitOk;
}

int run_search(const SearchConfig& cfg, const std::string& report_path, bool as_json) {
  std::vector<CheckReport> reports;
  SearchSummary summary = search(cfg, report_path.empty() ? nullptr : &reports);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot open report file: " + report_path);
    for (const CheckReport& rep : reports) out << to_json(rep).dump() << "\n";
  }
  if (as_json) {
    std::cout << to_json(cfg, summary).dump() << "\n";
  } else {
    std::cout << summary.checked << " checked, " << summary.violations << " violations";
    if (summary.near_violations) std::cout << ", " << summary.near_violations << " near";
    if (summary.tight) std::cout << ", " << summary.tight << " tight";
    std::cout << "\n";
    if (summary.min_margin)
      std::cout << "min margin " << summary.min_margin->margin.to_exact_string() << " at seq "
                << summary.min_margin->seq << "\n";
    for (const CheckReport& f : summary.findings)
      std::cout << "finding: " << to_json(f).dump() << "\n";
  }
  return summary.violations > 0 ? kExitViolation : kExitOk;
}

int run_transfer(const InstanceArgs& args, unsigned n_star, unsigned level, bool as_json) {
  Instance inst = args.load();
  if (!std::holds_alternative<StepFunction>(inst))
    throw std::runtime_error("transfer takes a continuous (step function) instance");
  TransferReport rep = transfer_audit(std::get<StepFunction>(inst), n_star, level);
  if (as_json) {
    std::cout << to_json(rep).dump() << "\n";
    return kExitOk;
  }
  std::cout << "Var_E(Mg)        = " << to_string(rep.var_grid_m) << "\n"
            << "Var_E(M_N g)     = " << to_string(rep.var_grid_m_restricted) << "\n"
            << "Var_EN(M tilde)  = " << to_string(rep.var_gridN_m_tilde) << "\n"
            << "Var_EN(M G_N)    = " << to_string(rep.var_gridN_m_avg) << "\n"
            << "Var(M G_N)       = " << to_string(rep.var_m_avg) << "\n"
            << "Var(Mg)          = " << rep.var_m_exact.to_exact_string() << "\n"
            << "sampled gap      = " << rep.sampled_gap.to_exact_string() << "\n"
            << "identity M tilde G_N(n) = M_N g(n/2^N): " << (rep.identity_holds ? "ok" : "FAIL")
            << "\n"
            << "grid equality: " << (rep.grid_equality_holds ? "ok" : "FAIL") << "\n"
            << "pointwise M G_N <= M tilde G_N: "
            << (rep.pointwise_dominance_holds ? "ok" : "FAIL") << "\n"
            << "sampled <= total: " << (rep.sampled_le_total_holds ? "ok" : "FAIL") << "\n"
            << "variation bound on samples: " << (rep.eq_t4_holds ? "ok" : "FAIL") << "\n";
  bool ok = rep.identity_holds && rep.grid_equality_holds && rep.pointwise_dominance_holds &&
            rep.sampled_le_total_holds && rep.eq_t4_holds;
  return ok ? kExitOk : kExitError;
}

int run_reproduce() {
  ReproduceReport rep = reproduce_paper();
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  std::cout << (rep.ok ? "all reproduced" : "MISMATCHES FOUND") << "\n";
  return rep.ok ? kExitOk : kExitError;
}

int run_sample_curve(const InstanceArgs& args, unsigned n_star) {
  Instance inst = args.load();
  if (!std::holds_alternative<StepFunction>(inst))
    throw std::runtime_error("sample-curve takes a continuous (step function) instance");
  ContinuousMaximal cm(std::get<StepFunction>(inst));
  std::cout << "x,Mf_exact,Mf_approx\n";
  for (const Rational& x : grid(n_star).points) {
    Rational v = cm.at(x);
    std::cout << to_string(x) << "," << to_string(v) << "," << to_decimal_string(v) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluation and variation analysis of one-dimensional maximal operators"};
  app.require_subcommand(1);

  InstanceArgs eval_args, var_args, maxvar_args, check_args, transfer_args, curve_args;
  std::string eval_x, eval_variant = "centered", maxvar_variant = "centered";
  bool check_theorem1_flag = false, check_conjecture_flag = false;
  bool json_out = false;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate the maximal operator at a point");
  eval_args.attach(eval_cmd);
  eval_cmd->add_option("--x", eval_x, "evaluation point (rational)")->required();
  eval_cmd->add_option("--variant", eval_variant, "centered | one-sided | uncentered");

  auto* var_cmd = app.add_subcommand("var", "total variation of the instance");
  var_args.attach(var_cmd);

  auto* maxvar_cmd = app.add_subcommand("maxvar", "exact variation of the maximal function");
  maxvar_args.attach(maxvar_cmd);
  maxvar_cmd->add_option("--variant", maxvar_variant, "centered | one-sided | uncentered");

  auto* check_cmd = app.add_subcommand("check", "variation inequality check");
  check_args.attach(check_cmd);
  check_cmd->add_flag("--theorem1", check_theorem1_flag, "alternating-class check");
  check_cmd->add_flag("--conjecture", check_conjecture_flag, "general simple check (default)");
  check_cmd->add_flag("--json", json_out, "JSON output");

  SearchConfig cfg;
  std::string klass = "alternating", domain = "discrete", report_path;
  bool no_shrink = false, search_json = false;
  auto* search_cmd = app.add_subcommand("search", "seeded randomized inequality search");
  search_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
  search_cmd->add_option("--count", cfg.count, "number of instances")->required();
  search_cmd->add_option("--class", klass, "alternating | general-simple | bump-on-plateau");
  search_cmd->add_option("--domain", domain, "discrete | continuous");
  search_cmd->add_option("--kmax", cfg.k_max, "max pieces/runs");
  search_cmd->add_option("--value-bound", cfg.value_bound, "max |numerator| of values");
  search_cmd->add_flag("--no-shrink", no_shrink, "disable shrinking of findings");
  search_cmd->add_option("--report", report_path, "write one JSON CheckReport per line");
  search_cmd->add_flag("--json", search_json, "JSON summary output");

  unsigned n_star = 1, level = 3, curve_nstar = 6;
  bool transfer_json = false;
  auto* transfer_cmd = app.add_subcommand("transfer", "discrete<->continuous sampling audit");
  transfer_args.attach(transfer_cmd);
  transfer_cmd->add_option("--nstar", n_star, "grid resolution N*");
  transfer_cmd->add_option("--n", level, "sampling resolution N (>= N*)");
  transfer_cmd->add_flag("--json", transfer_json, "JSON output");

  app.add_subcommand("reproduce", "re-derive the worked examples exactly");

  auto* curve_cmd = app.add_subcommand("sample-curve", "CSV samples of Mf on a dyadic grid");
  curve_args.attach(curve_cmd);
  curve_cmd->add_option("--nstar", curve_nstar, "dyadic grid resolution");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args, eval_x, eval_variant);
    if (var_cmd->parsed()) return run_var(var_args);
    if (maxvar_cmd->parsed()) return run_maxvar(maxvar_args, maxvar_variant);
    if (check_cmd->parsed()) {
      if (check_theorem1_flag && check_conjecture_flag)
        throw std::runtime_error("choose one of --theorem1 / --conjecture");
      return run_check(check_args, check_theorem1_flag, json_out);
    }
    if (search_cmd->parsed()) {
      if (klass == "alternating")
        cfg.klass = InstanceClass::alternating;
      else if (klass == "general-simple" || klass == "general")
        cfg.klass = InstanceClass::general_simple;
      else if (klass == "bump-on-plateau" || klass == "bump")
        cfg.klass = InstanceClass::bump_on_plateau;
      else
        throw std::runtime_error("unknown class: " + klass);
      if (domain == "discrete")
        cfg.domain = Domain::discrete;
      else if (domain == "continuous")
        cfg.domain = Domain::continuous;
      else
        throw std::runtime_error("unknown domain: " + domain);
      cfg.shrink = !no_shrink;
      return run_search(cfg, report_path, search_json);
    }
    if (transfer_cmd->parsed()) return run_transfer(transfer_args, n_star, level, transfer_json);
    if (app.get_subcommand("reproduce")->parsed()) return run_reproduce();
    if (curve_cmd->parsed()) return run_sample_curve(curve_args, curve_nstar);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
