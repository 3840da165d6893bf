// Copyright 2026 The qoc Authors
//
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

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "qoc/priors.hpp"

namespace qoc {

/// Conditional PMFs p0(s), p1(s) of the score variable over M outcomes.
class ScorePmfPair {
 public:
  /// Each PMF must be non-negative and sum to 1 within 1e-10.
  ScorePmfPair(std::vector<double> p0, std::vector<double> p1);

  std::size_t outcomes() const { return p0_.size(); }
  const std::vector<double>& p0() const { return p0_; }
  const std::vector<double>& p1() const { return p1_; }

 private:
  std::vector<double> p0_;
  std::vector<double> p1_;
};

/// Set D of outcome indices on which the rule decides '1'.
class DecisionRegion {
 public:
  DecisionRegion() = default;
  /// Indices are sorted and deduplicated; any index >= outcomes throws.
  DecisionRegion(std::size_t outcomes, std::vector<std::size_t> indices);

  static DecisionRegion all(std::size_t outcomes);
  static DecisionRegion none(std::size_t outcomes) { return DecisionRegion(outcomes, {}); }

  std::size_t outcomes() const { return outcomes_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  bool contains(std::size_t s) const;
  bool empty() const { return indices_.empty(); }
  DecisionRegion complement() const;

  friend bool operator==(const DecisionRegion&, const DecisionRegion&) = default;

 private:
  std::size_t outcomes_ = 0;
  std::vector<std::size_t> indices_;
};

enum class ParamKind { kNone, kSvtThreshold, kLrtThreshold, kAngle, kPrior };

/// Generating parameter of a curve point. For LRT points `value` is the
/// largest eta realizing the region and `lower` the exclusive lower end of
/// the realizing interval (eta in (lower, value]); for the empty region of a
/// curve with infinite ratios both are +inf.
struct CurveParam {
  ParamKind kind = ParamKind::kNone;
  double value = 0.0;
  double lower = 0.0;
};

struct OperatingPoint {
  double pf = 0.0;
  double pd = 0.0;
  CurveParam param;
  /// Decision region that realizes the point, when one exists.
  std::optional<DecisionRegion> region;
};

enum class CurveKind { kSvtQdoc, kLrtQdoc, kQmoc, kPriorSweep };

struct OperatingCharacteristic {
  CurveKind kind = CurveKind::kSvtQdoc;
  std::vector<OperatingPoint> points;
};

OperatingPoint pf_pd(const ScorePmfPair& pmfs, const DecisionRegion& region);

/// D = {s : s >= gamma}
DecisionRegion svt_region(std::size_t outcomes, double gamma);

/// D = {s : p1(s)/p0(s) >= eta}. p0 = 0 < p1 counts as +inf (always in D for
/// finite eta); p0 = p1 = 0 is never in D. eta = +inf selects the +inf-ratio
/// outcomes only.
DecisionRegion lrt_region(const ScorePmfPair& pmfs, double eta);

/// Points for gamma = 0, 1, ..., M, in that order.
OperatingCharacteristic svt_roc(const ScorePmfPair& pmfs);

/// Vertices of the LRT curve, pf ascending, from (0,0) to (1,1). Outcomes
/// with equal likelihood ratio enter together.
OperatingCharacteristic lrt_roc(const ScorePmfPair& pmfs);

/// Rebuilds the LRT curve from an SVT curve using only its points and
/// thresholds. Each step between adjacent thresholds is the contribution
/// (p0(s), p1(s)) of the scores it spans; the steps are re-chained in order of
/// decreasing slope, equal slopes merged. Retained vertices carry the region
/// assembled from the thresholds of their steps.
OperatingCharacteristic reconstruct_lrt_from_svt(const OperatingCharacteristic& svt);

/// P(H0) pf + P(H1) (1 - pd)
double error_at_point(const OperatingPoint& pt, const Priors& priors);

/// Index of the vertex with least error_at_point; first on ties.
std::size_t min_error_vertex(const OperatingCharacteristic& curve, const Priors& priors);

/// Largest pd reached by the piecewise-linear curve at abscissa pf. The curve
/// must be sorted by pf ascending.
double pd_at(const OperatingCharacteristic& curve, double pf);

/// Smallest chord slack over interior vertices: pd_i minus the chord of its
/// neighbours at pf_i. Non-negative for a concave curve. Vertical steps are
/// skipped.
double min_chord_slack(const OperatingCharacteristic& curve);

}  // namespace qoc
