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
#include <span>
#include <utility>
#include <vector>

#include "qoc/decision.hpp"
#include "qoc/measurement.hpp"
#include "qoc/operators.hpp"
#include "qoc/priors.hpp"

namespace qoc {

enum class DecisionRule { kSvt, kLrt };

/// Fixes the POVM, varies the decision region.
OperatingCharacteristic qdoc(const DensityOperator& rho0, const DensityOperator& rho1,
                             const Povm& povm, DecisionRule rule);

/// Two qubit states with eigenbases {x0, x1} (canonical) and {y0, y1} where
/// y0 = (cos(alpha/2), sin(alpha/2)), y1 = (-sin(alpha/2), cos(alpha/2)).
/// rho0 has eigenvalues a0, a1 on x0, x1; rho1 has b0, b1 on y0, y1.
class QubitDiscriminationSetup {
 public:
  QubitDiscriminationSetup(double alpha, double a0, double a1, double b0, double b1);
  static QubitDiscriminationSetup make(double alpha, double a0, double b0) {
    return QubitDiscriminationSetup(alpha, a0, 1.0 - a0, b0, 1.0 - b0);
  }

  double alpha() const { return alpha_; }
  double a0() const { return a0_; }
  double a1() const { return a1_; }
  double b0() const { return b0_; }
  double b1() const { return b1_; }

  std::pair<DensityOperator, DensityOperator> densities() const;

 private:
  double alpha_;
  double a0_, a1_, b0_, b1_;
};

/// Rewrites a pair whose nonzero-eigenvalue eigenvectors span at most two
/// dimensions as an equivalent qubit setup. Throws kNotReducible otherwise.
QubitDiscriminationSetup reduce_to_qubit(const DensityOperator& rho0,
                                         const DensityOperator& rho1);

/// theta_i = 2 pi i / samples, i = 0 .. samples-1.
std::vector<double> uniform_angles(std::size_t samples = 720);

/// Operating points of the projective measurement {|f0><f0|, |f1><f1|} with
/// f1 = (cos(theta/2), sin(theta/2)) and D = {1}:
///   pf = a0 cos^2(theta/2) + a1 sin^2(theta/2)
///   pd = b0 cos^2((theta-alpha)/2) + b1 sin^2((theta-alpha)/2)
OperatingCharacteristic qmoc_qubit(const QubitDiscriminationSetup& setup,
                                   std::span<const double> thetas);

enum class ConicKind { kEllipse, kSegment, kPoint };

/// Ellipse centred at (1/2, 1/2): semi-axis q lies at angle beta from the pf
/// axis, semi-axis r perpendicular to it, q >= r >= 0. A segment has r = 0
/// (q is its half-length, beta its direction); a point has q = r = 0.
struct EllipseParams {
  double beta = 0.0;
  double q = 0.0;
  double r = 0.0;
  ConicKind kind = ConicKind::kEllipse;

  bool degenerate() const { return kind != ConicKind::kEllipse; }
  double eccentricity() const;
};

/// In shifted coordinates x = pf - 1/2 = a cos(theta), y = pd - 1/2 =
/// b cos(theta - alpha) with a = (a0-a1)/2, b = (b0-b1)/2:
///   beta = atan2(2ab cos(alpha), a^2 - b^2) / 2
///   q^2, r^2 = (a^2 + b^2 +- sqrt((a^2-b^2)^2 + 4a^2b^2cos^2(alpha))) / 2
/// The square root equals (a^2 - b^2) / cos(2 beta) on this branch, and stays
/// finite when a^2 = b^2.
EllipseParams qmoc_ellipse_params(const QubitDiscriminationSetup& setup);

struct EllipseCheck {
  /// max |A x^2 + B xy + C y^2 - 1| over the samples
  double max_residual = 0.0;
  /// B^2 - 4AC, negative for an ellipse
  double discriminant = 0.0;
  /// every sample inside [min a, max a] x [min b, max b]
  bool inside_rectangle = false;
};

/// Throws kDegenerateConic for segment or point parameters.
EllipseCheck verify_ellipse(const QubitDiscriminationSetup& setup, const EllipseParams& params,
                            std::size_t samples);

/// Residual of the implicit conic built from `params` at the shifted point
/// (pf - 1/2, pd - 1/2).
double conic_residual(const EllipseParams& params, double pf, double pd);

struct PriorSweep {
  OperatingCharacteristic curve;
  /// rank(Pi1) = dim W1 per grid point
  std::vector<Eigen::Index> rank_pi1;
  Eigen::Index dim = 0;

  /// Maximal runs of constant rank strictly between 0 and dim.
  std::size_t segment_count() const;
};

/// {0, 1/(points-1), ..., 1}
std::vector<double> uniform_prior_grid(std::size_t points);

/// Helstrom operating point (Tr[Pi1 rho0], Tr[Pi1 rho1]) for each P(H1) in
/// the grid. P(H1) = 0 gives (0,0) and P(H1) = 1 gives (1,1).
PriorSweep prior_sweep(const DensityOperator& rho0, const DensityOperator& rho1,
                       std::span<const double> prior_grid);

struct SubspaceReconstruction {
  /// Columns z_m, m in D, spanning W1.
  ComplexMatrix w1;
  /// Columns z_m, m not in D, spanning W0.
  ComplexMatrix w0;
  /// D over the caller's ordering of the z vectors.
  DecisionRegion region;
};

/// Recovers Helstrom's subspaces from the Lagrange eigenvectors alone: the
/// measurement {|z_m><z_m|} is scored with SVTs, the LRT curve rebuilt from
/// the SVT curve, and the region of its minimum-error vertex selects the
/// vectors. Throws kNotOrthonormal, or kNotEigenvectors when z^H L z has
/// off-diagonal entries above 1e-8.
SubspaceReconstruction reconstruct_helstrom_subspaces(const DensityOperator& rho0,
                                                      const DensityOperator& rho1,
                                                      const Priors& priors,
                                                      const ComplexMatrix& z_vectors);

}  // namespace qoc
