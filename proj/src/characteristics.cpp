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

#include "qoc/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qoc/errors.hpp"
#include "qoc/helstrom.hpp"

namespace qoc {
namespace {

constexpr double kSetupTol = 1e-12;
constexpr double kConicTol = 1e-12;
constexpr double kRectangleTol = 1e-12;
constexpr double kEigenvectorResidue = 1e-8;

void check_prob_pair(double p, double q, const char* name) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0) || std::abs(p + q - 1.0) > kSetupTol) {
    std::ostringstream os;
    os << name << " eigenvalues must lie in [0,1] and sum to 1, got (" << p << ", " << q << ")";
    throw Error(ErrorCode::kProbabilitySum, os.str());
  }
}

// Orthonormal basis of the joint support of two density operators.
ComplexMatrix joint_support(const DensityOperator& rho0, const DensityOperator& rho1) {
  const Eigen::Index n = rho0.dim();
  ComplexMatrix cols(n, 2 * n);
  Eigen::Index k = 0;
  for (const DensityOperator* rho : {&rho0, &rho1}) {
    const EigenDecomposition& e = rho->eigen();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (e.values(i) > tol::kPsd) cols.col(k++) = e.vectors.col(i);
    }
  }
  cols.conservativeResize(n, k);
  Eigen::JacobiSVD<ComplexMatrix> svd(cols, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double cut = rank_threshold(sv(0) * sv(0));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) * sv(i) > cut) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

OperatingCharacteristic qdoc(const DensityOperator& rho0, const DensityOperator& rho1,
                             const Povm& povm, DecisionRule rule) {
  const ScorePmfPair pmfs(outcome_pmf(povm, rho0), outcome_pmf(povm, rho1));
  return rule == DecisionRule::kSvt ? svt_roc(pmfs) : lrt_roc(pmfs);
}

QubitDiscriminationSetup::QubitDiscriminationSetup(double alpha, double a0, double a1, double b0,
                                                   double b1)
    : alpha_(alpha), a0_(a0), a1_(a1), b0_(b0), b1_(b1) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::kOutOfRange, "alpha must be finite");
  check_prob_pair(a0, a1, "rho0");
  check_prob_pair(b0, b1, "rho1");
}

std::pair<DensityOperator, DensityOperator> QubitDiscriminationSetup::densities() const {
  const double c = std::cos(alpha_ / 2.0);
  const double s = std::sin(alpha_ / 2.0);
  ComplexMatrix x = ComplexMatrix::Identity(2, 2);
  ComplexMatrix y(2, 2);
  y << c, -s, s, c;
  const double a[] = {a0_, a1_};
  const double b[] = {b0_, b1_};
  return {DensityOperator::from_eigensystem(a, x), DensityOperator::from_eigensystem(b, y)};
}

QubitDiscriminationSetup reduce_to_qubit(const DensityOperator& rho0,
                                         const DensityOperator& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "rho0 and rho1 dimensions differ");
  }
  const Eigen::Index n = rho0.dim();
  if (n == 1) return QubitDiscriminationSetup(0.0, 1.0, 0.0, 1.0, 0.0);

  ComplexMatrix basis = joint_support(rho0, rho1);
  if (basis.cols() > 2) {
    throw Error(ErrorCode::kNotReducible,
                "the nonzero-eigenvalue eigenvectors of rho0 and rho1 span " +
                    std::to_string(basis.cols()) +
                    " dimensions; the qubit reduction needs at most 2");
  }
  if (basis.cols() < 2) {
    // Pure and identical support: complete with any orthogonal direction.
    ComplexMatrix seed(n, n + 1);
    seed << basis, ComplexMatrix::Identity(n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(seed);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, 2);
    basis = q;
  }

  const auto restrict = [&](const DensityOperator& rho) {
    const ComplexMatrix r = basis.adjoint() * rho.matrix() * basis;
    return HermitianOperator(0.5 * (r + r.adjoint()));
  };
  const EigenDecomposition e0 = hermitian_eig(restrict(rho0));
  const ComplexMatrix& x = e0.vectors;
  const ComplexMatrix r1 = x.adjoint() * restrict(rho1).matrix() * x;
  const EigenDecomposition e1 = hermitian_eig(HermitianOperator(0.5 * (r1 + r1.adjoint())));

  // y0 = c0 x0 + c1 x1; rephasing x1 makes both coefficients real and >= 0.
  const Complex c0 = e1.vectors(0, 0);
  const Complex c1 = e1.vectors(1, 0);
  const double alpha = 2.0 * std::atan2(std::abs(c1), std::abs(c0));

  const double a0 = std::clamp(e0.values(0), 0.0, 1.0);
  const double b0 = std::clamp(e1.values(0), 0.0, 1.0);
  return QubitDiscriminationSetup::make(alpha, a0, b0);
}

std::vector<double> uniform_angles(std::size_t samples) {
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    t[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
  }
  return t;
}

OperatingCharacteristic qmoc_qubit(const QubitDiscriminationSetup& setup,
                                   std::span<const double> thetas) {
  OperatingCharacteristic curve{CurveKind::kQmoc, {}};
  curve.points.reserve(thetas.size());
  for (double theta : thetas) {
    const double cf = std::cos(theta / 2.0);
    const double sf = std::sin(theta / 2.0);
    const double cd = std::cos((theta - setup.alpha()) / 2.0);
    const double sd = std::sin((theta - setup.alpha()) / 2.0);
    OperatingPoint pt;
    pt.pf = setup.a0() * cf * cf + setup.a1() * sf * sf;
    pt.pd = setup.b0() * cd * cd + setup.b1() * sd * sd;
    pt.param = {ParamKind::kAngle, theta, theta};
    pt.region = DecisionRegion(2, {1});
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

double EllipseParams::eccentricity() const {
  if (q <= 0.0) return 0.0;
  return std::sqrt(std::max(0.0, 1.0 - (r * r) / (q * q)));
}

EllipseParams qmoc_ellipse_params(const QubitDiscriminationSetup& setup) {
  const double a = (setup.a0() - setup.a1()) / 2.0;
  const double b = (setup.b0() - setup.b1()) / 2.0;
  const double cos_alpha = std::cos(setup.alpha());
  const double sin_alpha = std::sin(setup.alpha());

  EllipseParams p;
  if (std::abs(a) <= kConicTol && std::abs(b) <= kConicTol) {
    p.kind = ConicKind::kPoint;
    return p;
  }
  const double a2 = a * a;
  const double b2 = b * b;
  const double cross = 2.0 * a * b * cos_alpha;
  const double spread = std::hypot(a2 - b2, cross);
  // A circle has no preferred axis; report beta = 0 rather than atan2 noise.
  p.beta = spread <= kConicTol * (a2 + b2) ? 0.0 : 0.5 * std::atan2(cross, a2 - b2);
  p.q = std::sqrt(std::max(0.0, 0.5 * (a2 + b2 + spread)));
  p.r = std::sqrt(std::max(0.0, 0.5 * (a2 + b2 - spread)));
  if (std::abs(a) <= kConicTol || std::abs(b) <= kConicTol || std::abs(sin_alpha) <= kConicTol) {
    p.kind = ConicKind::kSegment;
    p.r = 0.0;
  }
  return p;
}

double conic_residual(const EllipseParams& params, double pf, double pd) {
  const double cb = std::cos(params.beta);
  const double sb = std::sin(params.beta);
  const double iq = 1.0 / (params.q * params.q);
  const double ir = 1.0 / (params.r * params.r);
  const double ca = cb * cb * iq + sb * sb * ir;
  const double cbx = 2.0 * sb * cb * (iq - ir);
  const double cc = sb * sb * iq + cb * cb * ir;
  const double x = pf - 0.5;
  const double y = pd - 0.5;
  return ca * x * x + cbx * x * y + cc * y * y - 1.0;
}

EllipseCheck verify_ellipse(const QubitDiscriminationSetup& setup, const EllipseParams& params,
                            std::size_t samples) {
  if (params.degenerate() || !(params.r > 0.0)) {
    throw Error(ErrorCode::kDegenerateConic,
                "ellipse check needs a nondegenerate conic (r > 0)");
  }
  const double cb = std::cos(params.beta);
  const double sb = std::sin(params.beta);
  const double iq = 1.0 / (params.q * params.q);
  const double ir = 1.0 / (params.r * params.r);
  const double ca = cb * cb * iq + sb * sb * ir;
  const double cbx = 2.0 * sb * cb * (iq - ir);
  const double cc = sb * sb * iq + cb * cb * ir;

  EllipseCheck check;
  check.discriminant = cbx * cbx - 4.0 * ca * cc;
  check.inside_rectangle = true;
  const double pf_lo = std::min(setup.a0(), setup.a1());
  const double pf_hi = std::max(setup.a0(), setup.a1());
  const double pd_lo = std::min(setup.b0(), setup.b1());
  const double pd_hi = std::max(setup.b0(), setup.b1());
  const std::vector<double> thetas = uniform_angles(samples);
  const OperatingCharacteristic curve = qmoc_qubit(setup, thetas);
  for (const OperatingPoint& pt : curve.points) {
    check.max_residual = std::max(check.max_residual, std::abs(conic_residual(params, pt.pf, pt.pd)));
    if (pt.pf < pf_lo - kRectangleTol || pt.pf > pf_hi + kRectangleTol ||
        pt.pd < pd_lo - kRectangleTol || pt.pd > pd_hi + kRectangleTol) {
      check.inside_rectangle = false;
    }
  }
  return check;
}

std::size_t PriorSweep::segment_count() const {
  std::size_t count = 0;
  Eigen::Index prev = -1;
  for (Eigen::Index r : rank_pi1) {
    const bool interior = r > 0 && r < dim;
    if (interior && r != prev) ++count;
    prev = interior ? r : -1;
  }
  return count;
}

std::vector<double> uniform_prior_grid(std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {0.0};
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  g.back() = 1.0;
  return g;
}

PriorSweep prior_sweep(const DensityOperator& rho0, const DensityOperator& rho1,
                       std::span<const double> prior_grid) {
  if (rho0.dim() != rho1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "rho0 and rho1 dimensions differ");
  }
  PriorSweep sweep{{CurveKind::kPriorSweep, {}}, {}, rho0.dim()};
  sweep.curve.points.reserve(prior_grid.size());
  sweep.rank_pi1.reserve(prior_grid.size());
  for (double p : prior_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      std::ostringstream os;
      os << "prior grid value " << p << " outside [0,1]";
      throw Error(ErrorCode::kOutOfRange, os.str());
    }
    OperatingPoint pt;
    pt.param = {ParamKind::kPrior, p, p};
    Eigen::Index rank = 0;
    if (p == 0.0) {
      pt.pf = pt.pd = 0.0;
    } else if (p == 1.0) {
      pt.pf = pt.pd = 1.0;
      rank = rho0.dim();
    } else {
      const HelstromSolution sol = helstrom_binary(rho0, rho1, Priors::from_h1(p));
      pt.pf = std::clamp(trace_inner(sol.pi1, rho0.op()), 0.0, 1.0);
      pt.pd = std::clamp(trace_inner(sol.pi1, rho1.op()), 0.0, 1.0);
      rank = static_cast<Eigen::Index>(sol.w1_indices.size());
    }
    sweep.curve.points.push_back(std::move(pt));
    sweep.rank_pi1.push_back(rank);
  }
  return sweep;
}

SubspaceReconstruction reconstruct_helstrom_subspaces(const DensityOperator& rho0,
                                                      const DensityOperator& rho1,
                                                      const Priors& priors,
                                                      const ComplexMatrix& z_vectors) {
  const Eigen::Index n = rho0.dim();
  if (z_vectors.rows() != n || z_vectors.cols() != n || rho1.dim() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n) + " vectors in C^" + std::to_string(n));
  }
  const double defect = orthonormality_defect(z_vectors);
  if (defect > tol::kOrtho) {
    std::ostringstream os;
    os << "z vectors are not orthonormal: Gram defect " << defect;
    throw Error(ErrorCode::kNotOrthonormal, os.str());
  }
  if (priors.h1() > 0.0) {
    ComplexMatrix t = z_vectors.adjoint() *
                      (rho1.matrix() - priors.ratio() * rho0.matrix()) * z_vectors;
    t.diagonal().setZero();
    const double residue = t.cwiseAbs().maxCoeff();
    if (residue > kEigenvectorResidue) {
      std::ostringstream os;
      os << "z vectors do not diagonalize the Lagrange operator: off-diagonal residue "
         << residue;
      throw Error(ErrorCode::kNotEigenvectors, os.str());
    }
  }

  const Povm povm = Povm::from_orthonormal_columns(z_vectors);
  const OperatingCharacteristic svt = qdoc(rho0, rho1, povm, DecisionRule::kSvt);
  const OperatingCharacteristic lrt = reconstruct_lrt_from_svt(svt);
  const OperatingPoint& best = lrt.points[min_error_vertex(lrt, priors)];
  DecisionRegion region = *best.region;

  const DecisionRegion rest = region.complement();
  SubspaceReconstruction out{ComplexMatrix(n, static_cast<Eigen::Index>(region.indices().size())),
                             ComplexMatrix(n, static_cast<Eigen::Index>(rest.indices().size())),
                             region};
  Eigen::Index k = 0;
  for (std::size_t m : region.indices()) out.w1.col(k++) = z_vectors.col(static_cast<Eigen::Index>(m));
  k = 0;
  for (std::size_t m : rest.indices()) out.w0.col(k++) = z_vectors.col(static_cast<Eigen::Index>(m));
  return out;
}

}  // namespace qoc
