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
#include <vector>

#include "qoc/decision.hpp"
#include "qoc/measurement.hpp"
#include "qoc/operators.hpp"
#include "qoc/priors.hpp"

namespace qoc {

namespace tol {
/// Lagrange eigenvalues with |eta| <= this are treated as zero and put in W1.
inline constexpr double kEtaZero = 1e-10;
}  // namespace tol

struct HelstromSolution {
  HermitianOperator lagrange;
  /// Eigenpairs {eta_m, |z_m>} of the Lagrange operator, eta ascending.
  EigenDecomposition eigen;
  /// Projector onto W1 = span{z_m : eta_m >= 0}.
  HermitianOperator pi1;
  /// Projector onto W0 = span{z_m : eta_m < 0}.
  HermitianOperator pi0;
  std::vector<std::size_t> w1_indices;
  double min_error = 0.0;
};

/// rho1 - C rho0 with C = P(H0)/P(H1). Throws kInfeasiblePrior when
/// P(H1) = 0; in that case always deciding '0' is optimal with zero error.
HermitianOperator lagrange_operator(const DensityOperator& rho0, const DensityOperator& rho1,
                                    const Priors& priors);

HelstromSolution helstrom_binary(const DensityOperator& rho0, const DensityOperator& rho1,
                                 const Priors& priors);

struct RankOneHelstrom {
  /// {|z_m><z_m|}, one outcome per Lagrange eigenvector.
  Povm povm;
  /// D = {m : eta_m >= 0}
  DecisionRegion region;
};

RankOneHelstrom helstrom_rank_one(const DensityOperator& rho0, const DensityOperator& rho1,
                                  const Priors& priors);

/// P(H1) - P(H1) Tr[pi1 (rho1 - C rho0)], clamped to [0, 1]. For P(H1) = 0
/// the equivalent P(H0) Tr[pi1 rho0] is used. pi1 must satisfy 0 <= pi1 <= I
/// within tol::kPsd.
double error_probability(const HermitianOperator& pi1, const DensityOperator& rho0,
                         const DensityOperator& rho1, const Priors& priors);

/// P(H0) Tr[pi1 rho0] + P(H1) (1 - Tr[pi1 rho1]); same contract.
double error_probability_direct(const HermitianOperator& pi1, const DensityOperator& rho0,
                                const DensityOperator& rho1, const Priors& priors);

}  // namespace qoc
