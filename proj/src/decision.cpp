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

#include "qoc/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qoc/errors.hpp"

namespace qoc {
namespace {

constexpr double kPmfSumTol = 1e-10;
// Relative band inside which two likelihood ratios count as equal.
constexpr double kRatioTie = 1e-12;
constexpr double kEndpointTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pmf(const std::vector<double>& p, const char* name) {
  double total = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (!(p[s] >= 0.0)) {
      std::ostringstream os;
      os << name << "(" << s << ") is negative: " << p[s];
      throw Error(ErrorCode::kNegativeProbability, os.str());
    }
    total += p[s];
  }
  if (std::abs(total - 1.0) > kPmfSumTol) {
    std::ostringstream os;
    os << name << " sums to " << total;
    throw Error(ErrorCode::kProbabilitySum, os.str());
  }
}

bool ratios_tied(double dy_a, double dx_a, double dy_b, double dx_b) {
  const double l = dy_a * dx_b;
  const double r = dy_b * dx_a;
  return std::abs(l - r) <= kRatioTie * std::max(l, r);
}

struct Step {
  double dx;
  double dy;
  std::vector<std::size_t> scores;
};

}  // namespace

Priors::Priors(double h0, double h1) : h0_(h0), h1_(h1) {
  if (!(h0 >= 0.0 && h0 <= 1.0 && h1 >= 0.0 && h1 <= 1.0) || std::abs(h0 + h1 - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "priors must lie in [0,1] and sum to 1, got (" << h0 << ", " << h1 << ")";
    throw Error(ErrorCode::kInfeasiblePrior, os.str());
  }
}

double Priors::ratio() const { return h1_ == 0.0 ? kInf : h0_ / h1_; }

ScorePmfPair::ScorePmfPair(std::vector<double> p0, std::vector<double> p1)
    : p0_(std::move(p0)), p1_(std::move(p1)) {
  if (p0_.empty() || p0_.size() != p1_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "p0 and p1 must be non-empty and of equal length");
  }
  check_pmf(p0_, "p0");
  check_pmf(p1_, "p1");
}

DecisionRegion::DecisionRegion(std::size_t outcomes, std::vector<std::size_t> indices)
    : outcomes_(outcomes), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= outcomes_) {
    throw Error(ErrorCode::kOutOfRange, "decision region index " + std::to_string(indices_.back()) +
                                            " out of range for " + std::to_string(outcomes_) +
                                            " outcomes");
  }
}

DecisionRegion DecisionRegion::all(std::size_t outcomes) {
  std::vector<std::size_t> idx(outcomes);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return DecisionRegion(outcomes, std::move(idx));
}

bool DecisionRegion::contains(std::size_t s) const {
  return std::binary_search(indices_.begin(), indices_.end(), s);
}

DecisionRegion DecisionRegion::complement() const {
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < outcomes_; ++s) {
    if (!contains(s)) idx.push_back(s);
  }
  return DecisionRegion(outcomes_, std::move(idx));
}

OperatingPoint pf_pd(const ScorePmfPair& pmfs, const DecisionRegion& region) {
  if (region.outcomes() != pmfs.outcomes()) {
    throw Error(ErrorCode::kOutOfRange, "decision region is for " +
                                            std::to_string(region.outcomes()) +
                                            " outcomes but PMFs have " +
                                            std::to_string(pmfs.outcomes()));
  }
  OperatingPoint pt;
  for (std::size_t s : region.indices()) {
    pt.pf += pmfs.p0()[s];
    pt.pd += pmfs.p1()[s];
  }
  pt.pf = std::clamp(pt.pf, 0.0, 1.0);
  pt.pd = std::clamp(pt.pd, 0.0, 1.0);
  pt.region = region;
  return pt;
}

DecisionRegion svt_region(std::size_t outcomes, double gamma) {
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < outcomes; ++s) {
    if (static_cast<double>(s) >= gamma) idx.push_back(s);
  }
  return DecisionRegion(outcomes, std::move(idx));
}

DecisionRegion lrt_region(const ScorePmfPair& pmfs, double eta) {
  if (!(eta >= 0.0)) {
    std::ostringstream os;
    os << "LRT threshold must be non-negative, got " << eta;
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < pmfs.outcomes(); ++s) {
    const double p0 = pmfs.p0()[s];
    const double p1 = pmfs.p1()[s];
    if (p0 == 0.0 && p1 == 0.0) continue;
    const double ratio = p0 == 0.0 ? kInf : p1 / p0;
    if (ratio >= eta) idx.push_back(s);
  }
  return DecisionRegion(pmfs.outcomes(), std::move(idx));
}

OperatingCharacteristic svt_roc(const ScorePmfPair& pmfs) {
  OperatingCharacteristic curve{CurveKind::kSvtQdoc, {}};
  const std::size_t m = pmfs.outcomes();
  for (std::size_t g = 0; g <= m; ++g) {
    const double gamma = static_cast<double>(g);
    OperatingPoint pt = pf_pd(pmfs, svt_region(m, gamma));
    pt.param = {ParamKind::kSvtThreshold, gamma, gamma};
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

OperatingCharacteristic lrt_roc(const ScorePmfPair& pmfs) {
  const std::size_t m = pmfs.outcomes();
  struct Entry {
    std::size_t s;
    double ratio;
  };
  std::vector<Entry> entries;
  for (std::size_t s = 0; s < m; ++s) {
    const double p0 = pmfs.p0()[s];
    const double p1 = pmfs.p1()[s];
    if (p0 == 0.0 && p1 == 0.0) continue;
    entries.push_back({s, p0 == 0.0 ? kInf : p1 / p0});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.ratio > b.ratio; });

  // Groups of (numerically) equal ratio, in descending order.
  std::vector<std::vector<Entry>> groups;
  for (const Entry& e : entries) {
    const bool same = !groups.empty() && [&] {
      const double r = groups.back().back().ratio;
      if (std::isinf(r) || std::isinf(e.ratio)) return std::isinf(r) && std::isinf(e.ratio);
      return std::abs(r - e.ratio) <= kRatioTie * std::max(r, e.ratio);
    }();
    if (same) {
      groups.back().push_back(e);
    } else {
      groups.push_back({e});
    }
  }

  OperatingCharacteristic curve{CurveKind::kLrtQdoc, {}};
  std::vector<std::size_t> region;
  const double top = groups.empty() ? kInf : groups.front().front().ratio;
  OperatingPoint origin = pf_pd(pmfs, DecisionRegion::none(m));
  origin.param = {ParamKind::kLrtThreshold, kInf, top};
  curve.points.push_back(std::move(origin));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const Entry& e : groups[g]) region.push_back(e.s);
    OperatingPoint pt = pf_pd(pmfs, DecisionRegion(m, region));
    const double next = g + 1 < groups.size() ? groups[g + 1].front().ratio : 0.0;
    pt.param = {ParamKind::kLrtThreshold, groups[g].front().ratio, next};
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

OperatingCharacteristic reconstruct_lrt_from_svt(const OperatingCharacteristic& svt) {
  if (svt.points.empty()) throw Error(ErrorCode::kMissingEndpoints, "SVT curve is empty");
  std::vector<const OperatingPoint*> pts;
  for (const auto& p : svt.points) {
    if (p.param.kind != ParamKind::kSvtThreshold) {
      throw Error(ErrorCode::kMissingEndpoints, "every SVT point must carry its threshold");
    }
    pts.push_back(&p);
  }
  std::stable_sort(pts.begin(), pts.end(), [](const OperatingPoint* a, const OperatingPoint* b) {
    return a->param.value > b->param.value;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const OperatingPoint* a, const OperatingPoint* b) {
                          return a->param.value == b->param.value;
                        }),
            pts.end());
  const auto near = [](const OperatingPoint* p, double v) {
    return std::abs(p->pf - v) <= kEndpointTol && std::abs(p->pd - v) <= kEndpointTol;
  };
  if (!near(pts.front(), 0.0) || !near(pts.back(), 1.0)) {
    throw Error(ErrorCode::kMissingEndpoints,
                "SVT curve must run from (0,0) at its highest threshold to (1,1) at its lowest");
  }

  const double gamma_max = pts.front()->param.value;
  const std::size_t m = pts.front()->region
                            ? pts.front()->region->outcomes()
                            : static_cast<std::size_t>(std::max(0.0, std::ceil(gamma_max)));
  const auto first_score = [](double gamma) {
    return static_cast<std::size_t>(std::max(0.0, std::ceil(gamma)));
  };

  std::vector<Step> steps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const OperatingPoint* hi = pts[i];
    const OperatingPoint* lo = pts[i + 1];
    Step step{std::max(0.0, lo->pf - hi->pf), std::max(0.0, lo->pd - hi->pd), {}};
    for (std::size_t s = first_score(lo->param.value); s < first_score(hi->param.value); ++s) {
      step.scores.push_back(s);
    }
    if (step.dx == 0.0 && step.dy == 0.0) continue;
    steps.push_back(std::move(step));
  }
  std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
    return std::atan2(a.dy, a.dx) > std::atan2(b.dy, b.dx);
  });

  const auto slope = [](double dy, double dx) { return dx == 0.0 ? kInf : dy / dx; };
  OperatingCharacteristic curve{CurveKind::kLrtQdoc, {}};
  OperatingPoint origin{pts.front()->pf, pts.front()->pd, {}, DecisionRegion::none(m)};
  origin.param = {ParamKind::kLrtThreshold, kInf,
                  steps.empty() ? kInf : slope(steps.front().dy, steps.front().dx)};
  curve.points.push_back(std::move(origin));

  std::vector<std::size_t> region;
  double pf = pts.front()->pf;
  double pd = pts.front()->pd;
  for (std::size_t i = 0; i < steps.size();) {
    double gx = 0.0;
    double gy = 0.0;
    std::size_t j = i;
    while (j < steps.size() &&
           (j == i || ratios_tied(steps[j - 1].dy, steps[j - 1].dx, steps[j].dy, steps[j].dx))) {
      gx += steps[j].dx;
      gy += steps[j].dy;
      region.insert(region.end(), steps[j].scores.begin(), steps[j].scores.end());
      ++j;
    }
    pf += gx;
    pd += gy;
    OperatingPoint pt{std::clamp(pf, 0.0, 1.0), std::clamp(pd, 0.0, 1.0), {},
                      DecisionRegion(m, region)};
    const double next = j < steps.size() ? slope(steps[j].dy, steps[j].dx) : 0.0;
    pt.param = {ParamKind::kLrtThreshold, slope(steps[i].dy, steps[i].dx), next};
    curve.points.push_back(std::move(pt));
    i = j;
  }
  return curve;
}

double error_at_point(const OperatingPoint& pt, const Priors& priors) {
  return priors.h0() * pt.pf + priors.h1() * (1.0 - pt.pd);
}

std::size_t min_error_vertex(const OperatingCharacteristic& curve, const Priors& priors) {
  if (curve.points.empty()) throw Error(ErrorCode::kOutOfRange, "curve has no points");
  std::size_t best = 0;
  double best_err = error_at_point(curve.points.front(), priors);
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const double e = error_at_point(curve.points[i], priors);
    if (e < best_err) {
      best_err = e;
      best = i;
    }
  }
  return best;
}

double pd_at(const OperatingCharacteristic& curve, double pf) {
  const auto& p = curve.points;
  if (p.empty()) throw Error(ErrorCode::kOutOfRange, "curve has no points");
  double best = -kInf;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].pf == pf) best = std::max(best, p[i].pd);
    if (i + 1 < p.size()) {
      const double x0 = p[i].pf;
      const double x1 = p[i + 1].pf;
      if (x0 < pf && pf < x1) {
        const double t = (pf - x0) / (x1 - x0);
        best = std::max(best, p[i].pd + t * (p[i + 1].pd - p[i].pd));
      }
    }
  }
  if (best == -kInf) {
    throw Error(ErrorCode::kOutOfRange, "abscissa outside the curve's pf range");
  }
  return best;
}

double min_chord_slack(const OperatingCharacteristic& curve) {
  const auto& p = curve.points;
  double slack = kInf;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double x0 = p[i - 1].pf;
    const double x2 = p[i + 1].pf;
    if (x2 <= x0) continue;
    const double t = (p[i].pf - x0) / (x2 - x0);
    const double chord = p[i - 1].pd + t * (p[i + 1].pd - p[i - 1].pd);
    slack = std::min(slack, p[i].pd - chord);
  }
  return slack;
}

}  // namespace qoc
