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
#include <numeric>

#include "gtest/gtest.h"
#include "qoc/errors.hpp"
#include "qoc/helstrom.hpp"
#include "support/test_support.hpp"

namespace qoc {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;

DensityOperator diag_density(const std::vector<double>& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  return density_from_eigensystem(p, ComplexMatrix::Identity(n, n));
}

// Least-squares fit of A x^2 + B xy + C y^2 = 1 to centered samples; returns
// (major semi-axis, minor semi-axis, max fit residual).
struct FittedConic {
  double major;
  double minor;
  double residual;
};

FittedConic fit_conic(const OperatingCharacteristic& curve) {
  const auto n = static_cast<Eigen::Index>(curve.points.size());
  Eigen::MatrixXd m(n, 3);
  Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = curve.points[i].pf - 0.5;
    const double y = curve.points[i].pd - 0.5;
    m.row(i) << x * x, x * y, y * y;
  }
  const Eigen::Vector3d c = m.colPivHouseholderQr().solve(rhs);
  Eigen::Matrix2d form;
  form << c(0), c(1) / 2, c(1) / 2, c(2);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(form);
  return {1.0 / std::sqrt(es.eigenvalues()(0)), 1.0 / std::sqrt(es.eigenvalues()(1)),
          (m * c - rhs).cwiseAbs().maxCoeff()};
}

TEST(Qdoc, TriangleLrt) {
  const DensityOperator rho0 = diag_density(testing::triangle8_a());
  const DensityOperator rho1 = diag_density(testing::triangle8_b());
  const auto c = qdoc(rho0, rho1, Povm::canonical(8), DecisionRule::kLrt);
  EXPECT_EQ(c.kind, CurveKind::kLrtQdoc);
  const auto oracle = testing::brute_force_lrt_vertices(testing::triangle8_a(), testing::triangle8_b());
  ASSERT_EQ(c.points.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_NEAR(c.points[i].pf, oracle[i].x, 1e-12);
    EXPECT_NEAR(c.points[i].pd, oracle[i].y, 1e-12);
  }
  EXPECT_EQ(qdoc(rho0, rho1, Povm::canonical(8), DecisionRule::kSvt).kind, CurveKind::kSvtQdoc);
}

TEST(Qdoc, IdenticalStatesOnDiagonal) {
  Rng rng(1);
  const DensityOperator rho = testing::random_density(4, rng);
  const Povm povm(testing::random_povm_elements(4, 3, rng));
  for (DecisionRule rule : {DecisionRule::kSvt, DecisionRule::kLrt}) {
    for (const auto& pt : qdoc(rho, rho, povm, rule).points) EXPECT_NEAR(pt.pf, pt.pd, 1e-12);
  }
}

TEST(Qdoc, HelstromPovmContainsMinErrorVertex) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho0 = testing::random_density(5, rng);
    const DensityOperator rho1 = testing::random_density(5, rng);
    const Priors priors = Priors::from_h1(0.1 + 0.04 * trial);
    const RankOneHelstrom h = helstrom_rank_one(rho0, rho1, priors);
    const auto c = qdoc(rho0, rho1, h.povm, DecisionRule::kLrt);
    EXPECT_NEAR(error_at_point(c.points[min_error_vertex(c, priors)], priors),
                helstrom_binary(rho0, rho1, priors).min_error, 1e-10);
  }
}

TEST(QubitSetup, Validation) {
  EXPECT_THROW(QubitDiscriminationSetup(0.3, 0.5, 0.6, 0.5, 0.5), Error);
  EXPECT_THROW(QubitDiscriminationSetup(0.3, 1.2, -0.2, 0.5, 0.5), Error);
  EXPECT_NO_THROW(QubitDiscriminationSetup::make(0.3, 1.0 / 15, 7.0 / 8));
}

TEST(QubitSetup, DensitiesMatchEigenstructure) {
  const auto s = QubitDiscriminationSetup::make(kPi / 5, 1.0 / 15, 7.0 / 8);
  const auto [rho0, rho1] = s.densities();
  EXPECT_NEAR(rho0.matrix()(0, 0).real(), 1.0 / 15, 1e-15);
  ComplexVector y0(2);
  y0 << std::cos(kPi / 10), std::sin(kPi / 10);
  EXPECT_NEAR((y0.adjoint() * rho1.matrix() * y0)(0, 0).real(), 7.0 / 8, 1e-14);
}

TEST(QmocQubit, MaximallyMixedRho0IsVertical) {
  const auto s = QubitDiscriminationSetup::make(1.0, 0.5, 0.8);
  for (const auto& pt : qmoc_qubit(s, uniform_angles(64)).points) EXPECT_NEAR(pt.pf, 0.5, 1e-15);
}

TEST(QmocQubit, AnchorValues) {
  const double alpha = kPi / 4;
  const auto s = QubitDiscriminationSetup::make(alpha, 1.0 / 15, 7.0 / 8);
  const double thetas[] = {0.0, alpha};
  const auto c = qmoc_qubit(s, thetas);
  EXPECT_NEAR(c.points[0].pf, 1.0 / 15, 1e-16);
  EXPECT_NEAR(c.points[1].pd, 7.0 / 8, 1e-16);
  EXPECT_EQ(c.points[1].param.kind, ParamKind::kAngle);
  EXPECT_EQ(c.points[1].param.value, alpha);
}

TEST(QmocQubit, MatchesBornRuleOnDensities) {
  // Independent route: Tr[|f0><f0| rho] with |f0> = (cos t/2, sin t/2).
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = QubitDiscriminationSetup::make(kPi * u(rng), u(rng), u(rng));
    const auto [rho0, rho1] = s.densities();
    const auto thetas = uniform_angles(37);
    const auto c = qmoc_qubit(s, thetas);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      ComplexVector f(2);
      f << std::cos(thetas[i] / 2), std::sin(thetas[i] / 2);
      const HermitianOperator e = HermitianOperator::outer(f);
      EXPECT_NEAR(c.points[i].pf, trace_inner(e, rho0.op()), 1e-14);
      EXPECT_NEAR(c.points[i].pd, trace_inner(e, rho1.op()), 1e-14);
    }
  }
}

TEST(Ellipse, CircleCase) {
  // a = b = 3/8, alpha = pi/2.
  const auto s = QubitDiscriminationSetup::make(kPi / 2, 7.0 / 8, 7.0 / 8);
  const EllipseParams p = qmoc_ellipse_params(s);
  EXPECT_EQ(p.kind, ConicKind::kEllipse);
  EXPECT_NEAR(p.q, 3.0 / 8, 1e-15);
  EXPECT_NEAR(p.r, 3.0 / 8, 1e-15);
  EXPECT_TRUE(p.beta == 0.0 || std::abs(p.beta - kPi / 2) < 1e-15);
  const FittedConic fit = fit_conic(qmoc_qubit(s, uniform_angles(720)));
  EXPECT_NEAR(fit.major, 3.0 / 8, 1e-12);
  EXPECT_NEAR(fit.minor, 3.0 / 8, 1e-12);
  EXPECT_LT(verify_ellipse(s, p, 720).max_residual, 1e-12);
}

TEST(Ellipse, AxesMatchLeastSquaresFit) {
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = QubitDiscriminationSetup::make(0.05 + (kPi - 0.1) * u(rng),
                                                  0.05 + 0.9 * u(rng), 0.05 + 0.9 * u(rng));
    if (std::abs(s.a0() - 0.5) < 0.02 || std::abs(s.b0() - 0.5) < 0.02) continue;
    const EllipseParams p = qmoc_ellipse_params(s);
    ASSERT_EQ(p.kind, ConicKind::kEllipse);
    EXPECT_GE(p.q, p.r);
    const FittedConic fit = fit_conic(qmoc_qubit(s, uniform_angles(360)));
    ASSERT_LT(fit.residual, 1e-9);
    EXPECT_NEAR(p.q, fit.major, 1e-9);
    EXPECT_NEAR(p.r, fit.minor, 1e-9);
  }
}

TEST(Ellipse, RandomSetupsVerify) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const double alpha = 2 * kPi * u(rng);
    const double a0 = u(rng);
    const auto s = QubitDiscriminationSetup::make(alpha, a0, u(rng));
    const EllipseParams p = qmoc_ellipse_params(s);
    if (p.degenerate()) continue;
    const EllipseCheck chk = verify_ellipse(s, p, 720);
    EXPECT_LT(chk.max_residual, 1e-9);
    EXPECT_LT(chk.discriminant, 0.0);
    EXPECT_TRUE(chk.inside_rectangle);
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(Ellipse, EccentricityGrowsAsAlphaApproachesPi) {
  double prev = -1.0;
  for (int i = 0; i <= 60; ++i) {
    const double alpha = kPi / 2 + (kPi / 2 - 1e-3) * i / 60.0;
    const double e = qmoc_ellipse_params(QubitDiscriminationSetup::make(alpha, 1.0 / 15, 7.0 / 8))
                         .eccentricity();
    EXPECT_GT(e, prev) << "alpha " << alpha;
    prev = e;
  }
}

TEST(Ellipse, DegenerateCases) {
  const EllipseParams flat = qmoc_ellipse_params(QubitDiscriminationSetup::make(1.0, 0.2, 0.5));
  EXPECT_EQ(flat.kind, ConicKind::kSegment);
  EXPECT_EQ(flat.r, 0.0);
  EXPECT_NEAR(flat.q, 0.3, 1e-15);
  EXPECT_FALSE(std::isnan(flat.beta));
  for (const auto& pt : qmoc_qubit(QubitDiscriminationSetup::make(1.0, 0.2, 0.5), uniform_angles(16)).points) {
    EXPECT_NEAR(pt.pd, 0.5, 1e-15);
  }
  const EllipseParams vertical = qmoc_ellipse_params(QubitDiscriminationSetup::make(1.0, 0.5, 0.9));
  EXPECT_EQ(vertical.kind, ConicKind::kSegment);
  const EllipseParams collinear = qmoc_ellipse_params(QubitDiscriminationSetup::make(0.0, 0.2, 0.9));
  EXPECT_EQ(collinear.kind, ConicKind::kSegment);
  const EllipseParams point = qmoc_ellipse_params(QubitDiscriminationSetup::make(1.0, 0.5, 0.5));
  EXPECT_EQ(point.kind, ConicKind::kPoint);
  EXPECT_THROW(verify_ellipse(QubitDiscriminationSetup::make(1.0, 0.2, 0.5), flat, 16), Error);
}

TEST(ReduceToQubit, RoundTripsSetup) {
  Rng rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = QubitDiscriminationSetup::make(0.1 + 2.9 * u(rng), 0.45 * u(rng), 0.45 * u(rng));
    const auto [rho0, rho1] = s.densities();
    const auto r = reduce_to_qubit(rho0, rho1);
    EXPECT_NEAR(r.alpha(), s.alpha(), 1e-9);
    EXPECT_NEAR(r.a0(), s.a0(), 1e-12);
    EXPECT_NEAR(r.b0(), s.b0(), 1e-12);
  }
}

TEST(ReduceToQubit, EmbeddedPairReduces) {
  Rng rng(7);
  const auto s = QubitDiscriminationSetup::make(kPi / 3, 0.2, 0.1);
  const auto [rho0, rho1] = s.densities();
  const ComplexMatrix iso = testing::random_unitary(5, rng).leftCols(2);
  const DensityOperator big0(HermitianOperator(iso * rho0.matrix() * iso.adjoint()));
  const DensityOperator big1(HermitianOperator(iso * rho1.matrix() * iso.adjoint()));
  const auto r = reduce_to_qubit(big0, big1);
  EXPECT_NEAR(r.alpha(), kPi / 3, 1e-9);
  EXPECT_NEAR(r.a0(), 0.2, 1e-12);
  EXPECT_NEAR(r.b0(), 0.1, 1e-12);
}

TEST(ReduceToQubit, RejectsWideSupport) {
  Rng rng(8);
  try {
    reduce_to_qubit(testing::random_density(3, rng), testing::random_density(3, rng));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotReducible);
  }
}

TEST(PriorSweep, Endpoints) {
  Rng rng(9);
  const DensityOperator rho0 = testing::random_density(4, rng);
  const DensityOperator rho1 = testing::random_density(4, rng);
  const auto sweep = prior_sweep(rho0, rho1, uniform_prior_grid(2));
  ASSERT_EQ(sweep.curve.points.size(), 2u);
  EXPECT_EQ(sweep.curve.points[0].pf, 0.0);
  EXPECT_EQ(sweep.curve.points[0].pd, 0.0);
  EXPECT_EQ(sweep.curve.points[1].pf, 1.0);
  EXPECT_EQ(sweep.curve.points[1].pd, 1.0);
  EXPECT_EQ(sweep.rank_pi1, (std::vector<Eigen::Index>{0, 4}));
  const double bad[] = {1.5};
  EXPECT_THROW(prior_sweep(rho0, rho1, bad), Error);
}

TEST(PriorSweep, NeverWorseThanChanceAndLipschitz) {
  Rng rng(10);
  const auto grid = uniform_prior_grid(501);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const DensityOperator rho0 = testing::random_density(n, rng);
    const DensityOperator rho1 = testing::random_density(n, rng, 1 + trial % n);
    const auto sweep = prior_sweep(rho0, rho1, grid);
    double prev_err = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& pt = sweep.curve.points[i];
      EXPECT_GE(pt.pd, pt.pf - 1e-12);
      const double err = error_at_point(pt, Priors::from_h1(grid[i]));
      if (i > 0) EXPECT_LE(std::abs(err - prev_err), grid[i] - grid[i - 1] + 1e-12);
      prev_err = err;
    }
  }
}

TEST(PriorSweep, RankChangesBoundSegments) {
  Rng rng(11);
  const DensityOperator rho0 = testing::random_density(8, rng);
  const DensityOperator rho1 = testing::random_density(8, rng);
  const auto sweep = prior_sweep(rho0, rho1, uniform_prior_grid(2001));
  EXPECT_LE(sweep.segment_count(), 7u);
  EXPECT_GE(sweep.segment_count(), 1u);
  for (std::size_t i = 1; i < sweep.rank_pi1.size(); ++i) {
    EXPECT_GE(sweep.rank_pi1[i], sweep.rank_pi1[i - 1]);
    // Within a constant-rank run the optimal point moves continuously with pf
    // nondecreasing as P(H1) grows.
    EXPECT_GE(sweep.curve.points[i].pf, sweep.curve.points[i - 1].pf - 1e-12);
  }
}

TEST(PriorSweep, SegmentCountSemantics) {
  PriorSweep s;
  s.dim = 4;
  s.rank_pi1 = {0, 1, 1, 2, 2, 3, 4};
  EXPECT_EQ(s.segment_count(), 3u);
  s.rank_pi1 = {0, 4};
  EXPECT_EQ(s.segment_count(), 0u);
}

TEST(PriorSweep, QubitOptimalPointsLieOnEllipse) {
  const auto s = QubitDiscriminationSetup::make(kPi / 5, 1.0 / 15, 7.0 / 8);
  const auto [rho0, rho1] = s.densities();
  const EllipseParams p = qmoc_ellipse_params(s);
  const auto sweep = prior_sweep(rho0, rho1, uniform_prior_grid(401));
  for (std::size_t i = 0; i < sweep.rank_pi1.size(); ++i) {
    if (sweep.rank_pi1[i] != 1) continue;
    const auto& pt = sweep.curve.points[i];
    EXPECT_LT(std::abs(conic_residual(p, pt.pf, pt.pd)), 1e-9);
  }
}

TEST(Subspaces, OrthogonalStatesAnyOrder) {
  ComplexVector e0 = ComplexVector::Zero(2), e1 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  const DensityOperator rho0 = DensityOperator::pure(PureStateVector(e0));
  const DensityOperator rho1 = DensityOperator::pure(PureStateVector(e1));
  ComplexMatrix swapped(2, 2);
  swapped << e1, e0;
  for (const ComplexMatrix& z : {ComplexMatrix(ComplexMatrix::Identity(2, 2)), swapped}) {
    const auto r = reconstruct_helstrom_subspaces(rho0, rho1, Priors::equal(), z);
    ASSERT_EQ(r.w1.cols(), 1);
    EXPECT_NEAR(std::abs(r.w1(1, 0)), 1.0, 1e-15);
  }
}

TEST(Subspaces, TriangleRegion) {
  const auto r = reconstruct_helstrom_subspaces(diag_density(testing::triangle8_a()),
                                                diag_density(testing::triangle8_b()),
                                                Priors::equal(), ComplexMatrix::Identity(8, 8));
  EXPECT_EQ(r.region.indices(), (std::vector<std::size_t>{2, 3, 4, 5}));
  EXPECT_EQ(r.w0.cols(), 4);
}

TEST(Subspaces, InvariantUnderPermutations) {
  Rng rng(12);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho0 = testing::random_density(6, rng);
    const DensityOperator rho1 = testing::random_density(6, rng);
    const Priors priors = Priors::from_h1(u(rng));
    const HelstromSolution h = helstrom_binary(rho0, rho1, priors);
    std::vector<Eigen::Index> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 20; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ComplexMatrix z(6, 6);
      for (Eigen::Index i = 0; i < 6; ++i) z.col(i) = h.eigen.vectors.col(perm[i]);
      const auto r = reconstruct_helstrom_subspaces(rho0, rho1, priors, z);
      EXPECT_LT(testing::max_abs(r.w1 * r.w1.adjoint() - h.pi1.matrix()), 1e-9);
      EXPECT_LT(testing::max_abs(r.w0 * r.w0.adjoint() - h.pi0.matrix()), 1e-9);
    }
  }
}

TEST(Subspaces, RejectsBadVectors) {
  Rng rng(13);
  const DensityOperator rho0 = testing::random_density(3, rng);
  const DensityOperator rho1 = testing::random_density(3, rng);
  ComplexMatrix scaled = 2.0 * ComplexMatrix::Identity(3, 3);
  try {
    reconstruct_helstrom_subspaces(rho0, rho1, Priors::equal(), scaled);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOrthonormal);
  }
  try {
    reconstruct_helstrom_subspaces(rho0, rho1, Priors::equal(), testing::random_unitary(3, rng));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEigenvectors);
  }
}

}  // namespace
}  // namespace qoc
