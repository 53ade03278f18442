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

#ifndef MAXVAR_ENVELOPE_HPP
#define MAXVAR_ENVELOPE_HPP

#include "maxvar/continuous_eval.hpp"
#include "maxvar/mobius.hpp"
#include "maxvar/quadratic.hpp"
#include "maxvar/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace maxvar {

enum class CurveKind { left_anchor, right_anchor, local, global_limit };

/// One candidate in the finite family whose upper envelope is Mf:
///   left_anchor i  : x -> average of |f| over [t_i, 2x - t_i], valid x > t_i
///   right_anchor j : x -> average over [2x - t_j, t_j], valid x < t_j
///   local          : x -> (|f|(x-) + |f|(x+)) / 2
///   global_limit   : the constant (|a| + |b|) / 2
/// Each is piecewise Mobius with regime changes at anchor midpoints.
struct CandidateCurve {
  CurveKind kind;
  std::size_t anchor = 0;

  struct Piece {
    bool lo_inf = false, hi_inf = false;
    Rational lo, hi;
    MobiusCurve curve;
  };
  std::vector<Piece> pieces;
};

/// Maximal open interval on which a single candidate curve realizes Mf.
struct EnvelopeSegment {
  bool lo_inf = false, hi_inf = false;
  QuadraticValue lo, hi;
  MobiusCurve curve;
  int curve_id = -1;
  QuadraticValue lo_val, hi_val;  // one-sided limits at the segment ends
  int mono = 0;                   // derivative sign on the segment
};

/// Entries trace Mf through segment end limits and exact point values at the
/// (rational) jump abscissae; consecutive entries move monotonically.
struct ChainEntry {
  int where = 0;  // -1 left end at -inf, 0 finite, +1 right end at +inf
  QuadraticValue pos;
  QuadraticValue value;
};

struct ExtremumNode {
  bool is_max = false;
  QuadraticValue x_lo, x_hi;  // plateau closure; equal for isolated points
  QuadraticValue value;
};

class PiecewiseMax {
 public:
  std::vector<EnvelopeSegment> segments;
  Rational limit_left, limit_right;

  const EnvelopeSegment& segment_left_of(const Rational& x) const {
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
      if (it->lo_inf) return *it;
      if (quad_cmp(it->lo, QuadraticValue(x)) == Ordering::less) return *it;
    }
    return segments.front();
  }

  const EnvelopeSegment& segment_right_of(const Rational& x) const {
    for (const auto& s : segments) {
      if (s.hi_inf) return s;
      if (quad_cmp(QuadraticValue(x), s.hi) == Ordering::less) return s;
    }
    return segments.back();
  }
};

namespace envdetail {

struct CellCurve {
  int id;
  CurveKind kind;
  std::size_t anchor;
  MobiusCurve curve;
  Rational val_lo, val_hi;  // endpoint values on the cell (limits at infinity)
};

}  // namespace envdetail

/// Builds Mf as an exact piecewise-Mobius object, along with the value chain
/// and local extrema. All arithmetic exact; crossing abscissae are quadratic
/// surds over isolated discriminants.
class Envelope {
 public:
  explicit Envelope(const StepFunction& f) : cm_(f) { build(); }

  const ContinuousMaximal& eval() const { return cm_; }
  const PiecewiseMax& piecewise() const { return pm_; }
  const std::vector<ChainEntry>& chain() const { return chain_; }
  const std::vector<ExtremumNode>& extrema() const { return extrema_; }

  Rational one_sided(const Rational& x, Side side) const {
    const EnvelopeSegment& s =
        side == Side::left ? pm_.segment_left_of(x) : pm_.segment_right_of(x);
    QuadraticValue v = s.curve.at(QuadraticValue(x));
    return v.rational();
  }

 private:
  void build() {
    const StepFunction& h = cm_.abs_function();
    const auto& bps = h.breakpoints;
    std::size_t nb = bps.size();

    std::vector<Rational> grid;
    for (const Rational& t : bps) grid.push_back(t);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = i + 1; j < nb; ++j) grid.push_back((bps[i] + bps[j]) / 2);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<EnvelopeSegment> raw;
    for (std::size_t c = 0; c <= grid.size(); ++c) {
      bool lo_inf = c == 0;
      bool hi_inf = c == grid.size();
      Rational lo = lo_inf ? Rational(0) : grid[c - 1];
      Rational hi = hi_inf ? Rational(0) : grid[c];
      Rational probe = lo_inf ? Rational(grid.front() - 1)
                              : (hi_inf ? Rational(grid.back() + 1) : Rational((lo + hi) / 2));
      build_cell(lo_inf, lo, hi_inf, hi, probe, raw);
    }

    // Merge adjacent segments carrying the same curve piece.
    for (auto& seg : raw) {
      if (pm_.segments.empty()) {
        pm_.segments.push_back(seg);
        continue;
      }
      EnvelopeSegment& last = pm_.segments.back();
      if (last.curve_id == seg.curve_id && last.curve.same_function(seg.curve) &&
          !last.hi_inf && !seg.lo_inf && quad_cmp(last.hi, seg.lo) == Ordering::equal) {
        last.hi = seg.hi;
        last.hi_inf = seg.hi_inf;
      } else {
        pm_.segments.push_back(seg);
      }
    }

    for (EnvelopeSegment& s : pm_.segments) {
      s.mono = s.curve.mono_sign();
      s.lo_val = s.lo_inf ? QuadraticValue(s.curve.limit_at_infinity()) : s.curve.at(s.lo);
      s.hi_val = s.hi_inf ? QuadraticValue(s.curve.limit_at_infinity()) : s.curve.at(s.hi);
    }
    pm_.limit_left = pm_.segments.front().curve.limit_at_infinity();
    pm_.limit_right = pm_.segments.back().curve.limit_at_infinity();

    build_chain();
    build_extrema();
  }

  void build_cell(bool lo_inf, const Rational& lo, bool hi_inf, const Rational& hi,
                  const Rational& probe, std::vector<EnvelopeSegment>& out) {
    const StepFunction& h = cm_.abs_function();
    const auto& bps = h.breakpoints;
    std::vector<envdetail::CellCurve> curves;
    int id = 0;
    for (std::size_t i = 0; i < bps.size(); ++i, ++id)
      if (!lo_inf && lo >= bps[i])
        curves.push_back({id, CurveKind::left_anchor, i, left_anchor_curve(i, probe), 0, 0});
    for (std::size_t j = 0; j < bps.size(); ++j, ++id)
      if (!hi_inf && hi <= bps[j])
        curves.push_back({id, CurveKind::right_anchor, j, right_anchor_curve(j, probe), 0, 0});
    curves.push_back(
        {id++, CurveKind::local, 0, MobiusCurve::constant(h.value_at(probe)), 0, 0});
    curves.push_back(
        {id++, CurveKind::global_limit, 0, MobiusCurve::constant(cm_.global_limit_candidate()), 0, 0});

    for (auto& cc : curves) {
      cc.curve.orient_positive(probe);
      cc.val_lo = lo_inf ? cc.curve.limit_at_infinity() : cc.curve.at(lo);
      cc.val_hi = hi_inf ? cc.curve.limit_at_infinity() : cc.curve.at(hi);
    }

    // Drop duplicates (same rational function), keeping the lowest id.
    std::vector<envdetail::CellCurve> uniq;
    for (const auto& cc : curves) {
      bool dup = false;
      for (const auto& u : uniq)
        if (u.curve.same_function(cc.curve)) {
          dup = true;
          break;
        }
      if (!dup) uniq.push_back(cc);
    }

    // Every curve is monotone on the cell, so one whose endpoint max lies
    // strictly below some other curve's endpoint min never surfaces.
    Rational floor_val = uniq.front().val_lo;
    bool first = true;
    for (const auto& cc : uniq) {
      Rational m = std::min(cc.val_lo, cc.val_hi);
      if (first || m > floor_val) floor_val = m;
      first = false;
    }
    std::vector<envdetail::CellCurve> live;
    for (const auto& cc : uniq)
      if (std::max(cc.val_lo, cc.val_hi) >= floor_val) live.push_back(cc);

    // Crossing abscissae inside the open cell.
    std::vector<QuadraticValue> cuts;
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        auto cq = live[i].curve.crossing_quadratic(live[j].curve);
        if (cq[0] == 0 && cq[1] == 0) continue;
        for (const RootDescriptor& rd : isolate_roots(cq[0], cq[1], cq[2])) {
          if (!lo_inf && quad_cmp(rd.value, QuadraticValue(lo)) != Ordering::greater) continue;
          if (!hi_inf && quad_cmp(rd.value, QuadraticValue(hi)) != Ordering::less) continue;
          cuts.push_back(rd.value);
        }
      }
    std::sort(cuts.begin(), cuts.end(),
              [](const QuadraticValue& a, const QuadraticValue& b) { return a < b; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const QuadraticValue& a, const QuadraticValue& b) {
                             return quad_cmp(a, b) == Ordering::equal;
                           }),
               cuts.end());

    // Pick the winner on each subcell at a rational probe.
    std::vector<std::optional<QuadraticValue>> bounds;  // nullopt = unbounded end
    bounds.push_back(lo_inf ? std::nullopt : std::make_optional(QuadraticValue(lo)));
    for (const auto& c : cuts) bounds.push_back(c);
    bounds.push_back(hi_inf ? std::nullopt : std::make_optional(QuadraticValue(hi)));

    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
      bool seg_lo_inf = !bounds[k].has_value();
      bool seg_hi_inf = !bounds[k + 1].has_value();
      QuadraticValue seg_lo = seg_lo_inf ? QuadraticValue() : *bounds[k];
      QuadraticValue seg_hi = seg_hi_inf ? QuadraticValue() : *bounds[k + 1];

      Rational sub_probe;
      if (seg_lo_inf && seg_hi_inf) {
        sub_probe = probe;
      } else if (seg_lo_inf) {
        sub_probe = enclosure(seg_hi, 8).first - 1;
      } else if (seg_hi_inf) {
        sub_probe = enclosure(seg_lo, 8).second + 1;
      } else {
        sub_probe = rational_between(seg_lo, seg_hi);
      }

      const envdetail::CellCurve* best = nullptr;
      Rational best_val;
      for (const auto& cc : live) {
        Rational v = cc.curve.at(sub_probe);
        if (!best || v > best_val || (v == best_val && cc.id < best->id)) {
          best = &cc;
          best_val = v;
        }
      }
      EnvelopeSegment seg;
      seg.lo_inf = seg_lo_inf;
      seg.hi_inf = seg_hi_inf;
      seg.lo = seg_lo;
      seg.hi = seg_hi;
      seg.curve = best->curve;
      seg.curve_id = best->id;
      out.push_back(std::move(seg));
    }
  }

  MobiusCurve left_anchor_curve(std::size_t i, const Rational& probe) const {
    const StepFunction& h = cm_.abs_function();
    Rational t = h.breakpoints[i];
    Rational y_ref = 2 * probe - t;
    Rational beta = h.value_at(y_ref);
    Rational I0 = cm_.integral(t, y_ref);
    return {2 * beta, I0 - beta * (t + y_ref), Rational(2), -2 * t};
  }

  MobiusCurve right_anchor_curve(std::size_t j, const Rational& probe) const {
    const StepFunction& h = cm_.abs_function();
    Rational t = h.breakpoints[j];
    Rational y_ref = 2 * probe - t;
    Rational beta = h.value_at(y_ref);
    Rational I0 = cm_.integral(y_ref, t);
    return {-2 * beta, I0 + beta * (y_ref + t), Rational(-2), 2 * t};
  }

  void build_chain() {
    chain_.clear();
    chain_.push_back({-1, QuadraticValue(), QuadraticValue(pm_.limit_left)});
    const auto& segs = pm_.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const EnvelopeSegment& s = segs[i];
      if (!s.lo_inf) chain_.push_back({0, s.lo, s.lo_val});
      if (!s.hi_inf) chain_.push_back({0, s.hi, s.hi_val});
      if (i + 1 < segs.size()) {
        if (s.hi.is_rational()) {
          Rational x = s.hi.rational();
          chain_.push_back({0, s.hi, QuadraticValue(cm_.at(x))});
        } else if (quad_cmp(s.hi_val, segs[i + 1].lo_val) != Ordering::equal) {
          throw std::logic_error("envelope discontinuous at an irrational boundary");
        }
      }
    }
    chain_.push_back({+1, QuadraticValue(), QuadraticValue(pm_.limit_right)});
  }

  void build_extrema() {
    extrema_.clear();
    const auto& ch = chain_;
    std::size_t i = 0;
    while (i < ch.size()) {
      std::size_t j = i;
      while (j + 1 < ch.size() && quad_cmp(ch[j + 1].value, ch[i].value) == Ordering::equal) ++j;
      if (i > 0 && j + 1 < ch.size() && ch[i].where == 0 && ch[j].where == 0) {
        Ordering before = quad_cmp(ch[i - 1].value, ch[i].value);
        Ordering after = quad_cmp(ch[j + 1].value, ch[i].value);
        if (before == Ordering::less && after == Ordering::less)
          extrema_.push_back({true, ch[i].pos, ch[j].pos, ch[i].value});
        else if (before == Ordering::greater && after == Ordering::greater)
          extrema_.push_back({false, ch[i].pos, ch[j].pos, ch[i].value});
      }
      i = j + 1;
    }
  }

  ContinuousMaximal cm_;
  PiecewiseMax pm_;
  std::vector<ChainEntry> chain_;
  std::vector<ExtremumNode> extrema_;
};

inline PiecewiseMax build_piecewise(const StepFunction& f) { return Envelope(f).piecewise(); }

/// The explicit candidate list with validity pieces; the pointwise max over
/// this family equals m_at everywhere.
inline std::vector<CandidateCurve> candidate_curves(const StepFunction& f) {
  ContinuousMaximal cm(f);
  const StepFunction& h = cm.abs_function();
  const auto& bps = h.breakpoints;
  std::vector<Rational> grid;
  for (const Rational& t : bps) grid.push_back(t);
  for (std::size_t i = 0; i < bps.size(); ++i)
    for (std::size_t j = i + 1; j < bps.size(); ++j) grid.push_back((bps[i] + bps[j]) / 2);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto cell_probe = [&](std::size_t c) -> Rational {
    if (c == 0) return grid.front() - 1;
    if (c == grid.size()) return grid.back() + 1;
    return (grid[c - 1] + grid[c]) / 2;
  };

  std::vector<CandidateCurve> out;
  auto piece_for = [&](CandidateCurve& cc, std::size_t c, const MobiusCurve& m) {
    CandidateCurve::Piece p;
    p.lo_inf = c == 0;
    p.hi_inf = c == grid.size();
    if (!p.lo_inf) p.lo = grid[c - 1];
    if (!p.hi_inf) p.hi = grid[c];
    p.curve = m;
    if (!cc.pieces.empty() && cc.pieces.back().curve.same_function(m) && !p.lo_inf) {
      cc.pieces.back().hi = p.hi;
      cc.pieces.back().hi_inf = p.hi_inf;
    } else {
      cc.pieces.push_back(std::move(p));
    }
  };

  for (std::size_t i = 0; i < bps.size(); ++i) {
    CandidateCurve cc{CurveKind::left_anchor, i, {}};
    for (std::size_t c = 0; c <= grid.size(); ++c) {
      if (c == 0) continue;
      if (!(grid[c - 1] >= bps[i])) continue;
      Rational probe = cell_probe(c);
      Rational y_ref = 2 * probe - bps[i];
      Rational beta = h.value_at(y_ref);
      MobiusCurve m{2 * beta, cm.integral(bps[i], y_ref) - beta * (bps[i] + y_ref), Rational(2),
                    -2 * bps[i]};
      piece_for(cc, c, m);
    }
    out.push_back(std::move(cc));
  }
  for (std::size_t j = 0; j < bps.size(); ++j) {
    CandidateCurve cc{CurveKind::right_anchor, j, {}};
    for (std::size_t c = 0; c <= grid.size(); ++c) {
      if (c == grid.size()) continue;
      if (!(grid[c] <= bps[j])) continue;
      Rational probe = cell_probe(c);
      Rational y_ref = 2 * probe - bps[j];
      Rational beta = h.value_at(y_ref);
      MobiusCurve m{-2 * beta, cm.integral(y_ref, bps[j]) + beta * (y_ref + bps[j]), Rational(-2),
                    2 * bps[j]};
      piece_for(cc, c, m);
    }
    out.push_back(std::move(cc));
  }
  {
    CandidateCurve cc{CurveKind::local, 0, {}};
    for (std::size_t c = 0; c <= grid.size(); ++c)
      piece_for(cc, c, MobiusCurve::constant(h.value_at(cell_probe(c))));
    out.push_back(std::move(cc));
  }
  {
    CandidateCurve cc{CurveKind::global_limit, 0, {}};
    for (std::size_t c = 0; c <= grid.size(); ++c)
      piece_for(cc, c, MobiusCurve::constant(cm.global_limit_candidate()));
    out.push_back(std::move(cc));
  }
  return out;
}

/// Value of one candidate at x, or nullopt outside its (open) validity.
inline std::optional<Rational> candidate_value_at(const CandidateCurve& cc, const StepFunction& f,
                                                  const Rational& x) {
  ContinuousMaximal cm(f);
  const StepFunction& h = cm.abs_function();
  switch (cc.kind) {
    case CurveKind::local:
      return cm.local_candidate(x);
    case CurveKind::global_limit:
      return cm.global_limit_candidate();
    case CurveKind::left_anchor: {
      Rational t = h.breakpoints[cc.anchor];
      if (!(x > t)) return std::nullopt;
      return cm.window_average(x, x - t);
    }
    case CurveKind::right_anchor: {
      Rational t = h.breakpoints[cc.anchor];
      if (!(x < t)) return std::nullopt;
      return cm.window_average(x, t - x);
    }
  }
  return std::nullopt;
}

}  // namespace maxvar

#endif  // MAXVAR_ENVELOPE_HPP
