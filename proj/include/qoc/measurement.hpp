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
#include <vector>

#include "qoc/operators.hpp"

namespace qoc {

namespace tol {
inline constexpr double kCompleteness = 1e-10;
/// Idempotence / mutual-orthogonality band used to classify standard POVMs.
inline constexpr double kProjector = 1e-9;
}  // namespace tol

struct PovmReport {
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double completeness_residual = 0.0;
  bool dimensions_consistent = true;
  bool passed = false;
};

PovmReport validate_povm(std::span<const ComplexMatrix> elements);
PovmReport validate_povm(std::span<const HermitianOperator> elements);

/// Ordered list of non-negative Hermitian elements resolving the identity.
/// Outcome index m is the score value s. Zero elements are allowed.
class Povm {
 public:
  /// Throws kIncompletePovm / kNotPositive / kDimensionMismatch when the
  /// elements fail validate_povm.
  explicit Povm(std::vector<HermitianOperator> elements);

  /// Rank-one projectors onto the columns of an orthonormal matrix.
  static Povm from_orthonormal_columns(const ComplexMatrix& columns);
  static Povm canonical(Eigen::Index dim);

  Eigen::Index dim() const { return elements_.front().dim(); }
  std::size_t size() const { return elements_.size(); }
  const HermitianOperator& operator[](std::size_t m) const { return elements_[m]; }
  const std::vector<HermitianOperator>& elements() const { return elements_; }

 private:
  std::vector<HermitianOperator> elements_;
};

/// Born rule: p(m) = Tr[E_m rho], clamped to [0, 1].
std::vector<double> outcome_pmf(const Povm& povm, const DensityOperator& rho);

bool is_standard(const Povm& povm);
bool is_rank_one(const Povm& povm);

/// Orthogonal projector onto the span of the columns of `vectors`. A matrix
/// with zero columns yields the zero projector on C^rows.
HermitianOperator projector_from_span(const ComplexMatrix& vectors);

}  // namespace qoc
