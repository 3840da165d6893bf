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

#include "qoc/helstrom.hpp"

#include <algorithm>
#include <sstream>

#include "qoc/errors.hpp"

namespace qoc {
namespace {

void check_dims(const DensityOperator& rho0, const DensityOperator& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rho0 is on C^" + std::to_string(rho0.dim()) + " but rho1 is on C^" +
                    std::to_string(rho1.dim()));
  }
}

void check_contraction(const HermitianOperator& pi1) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pi1.matrix(), Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (lo < -tol::kPsd || hi > 1.0 + tol::kPsd) {
    std::ostringstream os;
    os << "decision operator must satisfy 0 <= Pi1 <= I; eigenvalues span [" << lo << ", " << hi
       << "]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
}

}  // namespace

HermitianOperator lagrange_operator(const DensityOperator& rho0, const DensityOperator& rho1,
                                    const Priors& priors) {
  check_dims(rho0, rho1);
  if (priors.h1() == 0.0) {
    throw Error(ErrorCode::kInfeasiblePrior,
                "P(H1) = 0 makes the prior ratio infinite; always deciding '0' is optimal with "
                "zero error");
  }
  return rho1.op() - rho0.op() * priors.ratio();
}

HelstromSolution helstrom_binary(const DensityOperator& rho0, const DensityOperator& rho1,
                                 const Priors& priors) {
  HermitianOperator lagrange = lagrange_operator(rho0, rho1, priors);
  EigenDecomposition eig = hermitian_eig(lagrange);
  const Eigen::Index n = eig.dim();

  std::vector<std::size_t> w1;
  ComplexMatrix p1 = ComplexMatrix::Zero(n, n);
  ComplexMatrix p0 = ComplexMatrix::Zero(n, n);
  double positive_mass = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    const ComplexMatrix proj = eig.vectors.col(m) * eig.vectors.col(m).adjoint();
    if (eig.values(m) >= -tol::kEtaZero) {
      w1.push_back(static_cast<std::size_t>(m));
      p1 += proj;
      positive_mass += eig.values(m);
    } else {
      p0 += proj;
    }
  }
  const double h1 = priors.h1();
  const double min_error = std::clamp(h1 - h1 * positive_mass, 0.0, 1.0);
  return HelstromSolution{std::move(lagrange),
                          std::move(eig),
                          HermitianOperator(0.5 * (p1 + p1.adjoint())),
                          HermitianOperator(0.5 * (p0 + p0.adjoint())),
                          std::move(w1),
                          min_error};
}

RankOneHelstrom helstrom_rank_one(const DensityOperator& rho0, const DensityOperator& rho1,
                                  const Priors& priors) {
  const HelstromSolution sol = helstrom_binary(rho0, rho1, priors);
  const auto n = static_cast<std::size_t>(sol.eigen.dim());
  return RankOneHelstrom{Povm::from_orthonormal_columns(sol.eigen.vectors),
                         DecisionRegion(n, sol.w1_indices)};
}

double error_probability(const HermitianOperator& pi1, const DensityOperator& rho0,
                         const DensityOperator& rho1, const Priors& priors) {
  if (priors.h1() == 0.0) return error_probability_direct(pi1, rho0, rho1, priors);
  check_contraction(pi1);
  const HermitianOperator lagrange = lagrange_operator(rho0, rho1, priors);
  if (pi1.dim() != lagrange.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "decision operator dimension mismatch");
  }
  const double h1 = priors.h1();
  return std::clamp(h1 - h1 * trace_inner(pi1, lagrange), 0.0, 1.0);
}

double error_probability_direct(const HermitianOperator& pi1, const DensityOperator& rho0,
                                const DensityOperator& rho1, const Priors& priors) {
  check_dims(rho0, rho1);
  check_contraction(pi1);
  const double pf = trace_inner(pi1, rho0.op());
  const double pd = trace_inner(pi1, rho1.op());
  return std::clamp(priors.h0() * pf + priors.h1() * (1.0 - pd), 0.0, 1.0);
}

}  // namespace qoc
