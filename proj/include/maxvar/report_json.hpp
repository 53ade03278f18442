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

#ifndef MAXVAR_REPORT_JSON_HPP
#define MAXVAR_REPORT_JSON_HPP

#include "maxvar/envelope.hpp"
#include "maxvar/harness.hpp"
#include "maxvar/json_io.hpp"
#include "maxvar/transference.hpp"

#include <string>

namespace maxvar {

inline const char* to_cstring(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::undecided:
      return "undecided-enclosure";
  }
  return "?";
}

inline const char* to_cstring(CheckMode m) {
  return m == CheckMode::exact ? "exact" : "certified";
}

inline const char* to_cstring(Domain d) {
  return d == Domain::discrete ? "discrete" : "continuous";
}

inline const char* to_cstring(MaxVariant v) {
  switch (v) {
    case MaxVariant::centered:
      return "centered";
    case MaxVariant::one_sided:
      return "one-sided";
    case MaxVariant::uncentered:
      return "uncentered";
  }
  return "?";
}

inline const char* to_cstring(InstanceClass c) {
  switch (c) {
    case InstanceClass::alternating:
      return "alternating";
    case InstanceClass::general_simple:
      return "general-simple";
    case InstanceClass::bump_on_plateau:
      return "bump-on-plateau";
  }
  return "?";
}

inline Json to_json(const CheckReport& rep) {
  Json j;
  j["seq"] = rep.seq;
  j["domain"] = std::holds_alternative<BVSequence>(rep.instance) ? "discrete" : "continuous";
  j["instance"] = to_json(rep.instance);
  j["lhs"] = to_json(rep.lhs);
  j["rhs"] = json_rat(rep.rhs);
  j["margin"] = to_json(rep.margin);
  j["verdict"] = to_cstring(rep.verdict);
  j["mode"] = to_cstring(rep.mode);
  j["tight"] = rep.tight;
  return j;
}

inline Json to_json(const SearchConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["count"] = cfg.count;
  j["class"] = to_cstring(cfg.klass);
  j["domain"] = to_cstring(cfg.domain);
  j["k_max"] = cfg.k_max;
  j["value_bound"] = cfg.value_bound;
  j["breakpoint_bound"] = cfg.breakpoint_bound;
  j["shrink"] = cfg.shrink;
  j["near_denominator"] = cfg.near_denominator.str();
  return j;
}

inline Json to_json(const SearchConfig& cfg, const SearchSummary& s) {
  Json j;
  j["config"] = to_json(cfg);
  j["checked"] = s.checked;
  j["violations"] = s.violations;
  j["near_violations"] = s.near_violations;
  j["tight"] = s.tight;
  if (s.min_margin) j["min_margin"] = to_json(*s.min_margin);
  j["findings"] = Json::array();
  for (const auto& f : s.findings) j["findings"].push_back(to_json(f));
  return j;
}

inline Json to_json(const TransferReport& r) {
  Json j;
  j["n_star"] = r.n_star;
  j["level"] = r.level;
  j["var_grid_Mg"] = json_rat(r.var_grid_m);
  j["var_grid_MNg"] = json_rat(r.var_grid_m_restricted);
  j["var_gridN_Mtilde"] = json_rat(r.var_gridN_m_tilde);
  j["var_gridN_MGN"] = json_rat(r.var_gridN_m_avg);
  j["var_MGN"] = json_rat(r.var_m_avg);
  j["var_g"] = json_rat(r.var_g);
  j["var_GN"] = json_rat(r.var_avg);
  j["var_tildeGN"] = json_rat(r.var_tilde);
  j["identity_Mtilde_eq_MNg"] = r.identity_holds;
  j["grid_equality"] = r.grid_equality_holds;
  j["pointwise_MGN_le_Mtilde"] = r.pointwise_dominance_holds;
  j["sampled_le_total"] = r.sampled_le_total_holds;
  j["eq_t4"] = r.eq_t4_holds;
  j["var_Mg"] = to_json(r.var_m_exact);
  j["sampled_gap"] = to_json(r.sampled_gap);
  return j;
}

inline Json to_json(const ConstantEstimate& e) {
  Json j;
  j["operator"] = to_cstring(e.op);
  j["domain"] = to_cstring(e.domain);
  j["a"] = json_rat(e.a);
  j["b"] = json_rat(e.b);
  j["N"] = e.family_n;
  j["ratios"] = Json::array();
  for (const auto& r : e.ratios) j["ratios"].push_back(json_rat(r));
  j["margins"] = Json::array();
  for (const auto& m : e.margins) j["margins"].push_back(json_rat(m));
  j["C_lower_bound"] = json_rat(e.big_c_lower);
  j["c_ab_upper_bound"] = json_rat(e.small_c_upper);
  j["witness"] = to_json(e.witness);
  return j;
}

inline Json to_json(const QuadraticValue& v) {
  if (v.is_rational()) return Json(to_string(v.p));
  Json j;
  j["p"] = json_rat(v.p);
  j["q"] = json_rat(v.q);
  j["d"] = v.d.str();
  j["approx"] = to_decimal_string(v);
  return j;
}

inline Json to_json(const PiecewiseMax& pm) {
  Json j;
  j["limit_left"] = json_rat(pm.limit_left);
  j["limit_right"] = json_rat(pm.limit_right);
  j["segments"] = Json::array();
  for (const EnvelopeSegment& s : pm.segments) {
    Json seg;
    seg["lo"] = s.lo_inf ? Json("-inf") : to_json(s.lo);
    seg["hi"] = s.hi_inf ? Json("+inf") : to_json(s.hi);
    seg["mobius"] = {json_rat(s.curve.p), json_rat(s.curve.q), json_rat(s.curve.r),
                     json_rat(s.curve.s)};
    seg["monotone"] = s.mono > 0 ? "increasing" : (s.mono < 0 ? "decreasing" : "constant");
    seg["lo_value"] = to_json(s.lo_val);
    seg["hi_value"] = to_json(s.hi_val);
    j["segments"].push_back(seg);
  }
  return j;
}

}  // namespace maxvar

#endif  // MAXVAR_REPORT_JSON_HPP
