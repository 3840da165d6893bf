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

#include "qoc/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qoc/errors.hpp"

namespace qoc {
namespace {

template <typename Element, typename AsMatrix>
PovmReport validate_impl(std::span<const Element> elements, AsMatrix as_matrix) {
  PovmReport report;
  if (elements.empty()) {
    report.dimensions_consistent = false;
    report.completeness_residual = std::numeric_limits<double>::infinity();
    return report;
  }
  const Eigen::Index n = as_matrix(elements.front()).rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& e : elements) {
    const ComplexMatrix& m = as_matrix(e);
    if (m.rows() != n || m.cols() != n) {
      report.dimensions_consistent = false;
      report.completeness_residual = std::numeric_limits<double>::infinity();
      return report;
    }
    report.max_hermiticity_defect = std::max(report.max_hermiticity_defect, max_asymmetry(m));
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = std::min(report.min_eigenvalue, solver.eigenvalues().minCoeff());
    sum += h;
  }
  const ComplexMatrix diff = sum - ComplexMatrix::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (diff + diff.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  report.completeness_residual = solver.eigenvalues().cwiseAbs().maxCoeff();
  report.passed = report.max_hermiticity_defect <= tol::kHermiticity &&
                  report.min_eigenvalue >= -tol::kPsd &&
                  report.completeness_residual <= tol::kCompleteness;
  return report;
}

}  // namespace

PovmReport validate_povm(std::span<const ComplexMatrix> elements) {
  return validate_impl(elements, [](const ComplexMatrix& m) -> const ComplexMatrix& { return m; });
}

PovmReport validate_povm(std::span<const HermitianOperator> elements) {
  return validate_impl(elements,
                       [](const HermitianOperator& h) -> const ComplexMatrix& { return h.matrix(); });
}

Povm::Povm(std::vector<HermitianOperator> elements) : elements_(std::move(elements)) {
  const PovmReport r = validate_povm(std::span<const HermitianOperator>(elements_));
  if (!r.dimensions_consistent) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM elements must be non-empty and share one dimension");
  }
  if (r.min_eigenvalue < -tol::kPsd) {
    std::ostringstream os;
    os << "POVM element has negative eigenvalue " << r.min_eigenvalue;
    throw Error(ErrorCode::kNotPositive, os.str());
  }
  if (r.completeness_residual > tol::kCompleteness) {
    std::ostringstream os;
    os << "POVM elements do not sum to the identity: residual " << r.completeness_residual;
    throw Error(ErrorCode::kIncompletePovm, os.str());
  }
}

Povm Povm::from_orthonormal_columns(const ComplexMatrix& columns) {
  std::vector<HermitianOperator> elems;
  elems.reserve(static_cast<std::size_t>(columns.cols()));
  for (Eigen::Index m = 0; m < columns.cols(); ++m) {
    elems.push_back(HermitianOperator::outer(columns.col(m)));
  }
  return Povm(std::move(elems));
}

Povm Povm::canonical(Eigen::Index dim) {
  return from_orthonormal_columns(ComplexMatrix::Identity(dim, dim));
}

std::vector<double> outcome_pmf(const Povm& povm, const DensityOperator& rho) {
  if (povm.dim() != rho.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "POVM acts on C^" + std::to_string(povm.dim()) + " but state is on C^" +
                    std::to_string(rho.dim()));
  }
  std::vector<double> p;
  p.reserve(povm.size());
  for (const auto& e : povm.elements()) {
    p.push_back(std::clamp(trace_inner(e, rho.op()), 0.0, 1.0));
  }
  return p;
}

bool is_standard(const Povm& povm) {
  const auto& e = povm.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const ComplexMatrix& a = e[i].matrix();
    if ((a * a - a).cwiseAbs().maxCoeff() > tol::kProjector) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if ((a * e[j].matrix()).cwiseAbs().maxCoeff() > tol::kProjector) return false;
    }
  }
  return true;
}

bool is_rank_one(const Povm& povm) {
  return std::all_of(povm.elements().begin(), povm.elements().end(),
                     [](const HermitianOperator& e) { return numerical_rank(e) == 1; });
}

HermitianOperator projector_from_span(const ComplexMatrix& vectors) {
  const Eigen::Index n = vectors.rows();
  if (n == 0) throw Error(ErrorCode::kDimensionMismatch, "vectors must have at least one row");
  if (vectors.cols() == 0) return HermitianOperator::zero(n);
  Eigen::JacobiSVD<ComplexMatrix> svd(vectors, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  // Gram eigenvalues are sv^2; rank is judged on those.
  const double cut = rank_threshold(sv(0) * sv(0));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) * sv(i) > cut) ++rank;
  }
  if (rank < vectors.cols()) {
    throw Error(ErrorCode::kLinearlyDependent,
                "spanning vectors are linearly dependent: numerical rank " + std::to_string(rank) +
                    " of " + std::to_string(vectors.cols()));
  }
  const ComplexMatrix u = svd.matrixU().leftCols(rank);
  return HermitianOperator(u * u.adjoint());
}

}  // namespace qoc
