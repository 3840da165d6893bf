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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qoc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kOrtho = 1e-10;
inline constexpr double kNorm = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kReconstruct = 1e-9;
inline constexpr double kImag = 1e-10;
inline constexpr double kRank = 1e-10;
}  // namespace tol

/// Largest |M(i,j) - conj(M(j,i))| over all entries; 0 for a Hermitian matrix.
double max_asymmetry(const ComplexMatrix& m);

/// Eigenvalue threshold separating "zero" from "nonzero" for an operator whose
/// largest eigenvalue magnitude is `largest`. Relative, floored at 1.
double rank_threshold(double largest);

/// Square complex matrix equal to its conjugate transpose within
/// tol::kHermiticity. The stored matrix is exactly Hermitian: the residual
/// asymmetry is averaged away on construction.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator zero(Eigen::Index dim);
  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator diagonal(std::span<const double> entries);
  /// |v><v|
  static HermitianOperator outer(const ComplexVector& v);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const;

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  struct Trusted {};
  HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

/// Eigenpairs of a Hermitian operator. Eigenvalues ascend; column i of
/// `vectors` pairs with eigenvalue i.
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;

  Eigen::Index dim() const { return values.size(); }
  /// sum_i values[i] |v_i><v_i|
  ComplexMatrix reconstruct() const;
};

/// Deterministic eigendecomposition. Eigenvalues are ascending with ties kept
/// in solver order. Each eigenvector is rephased so that its largest-magnitude
/// component (first such, by index) is real and positive; inside a degenerate
/// eigenspace the basis is whatever the solver returns.
EigenDecomposition hermitian_eig(const HermitianOperator& op);
/// Validating overload: throws kNonHermitian naming the max asymmetry.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Spectral norm of a Hermitian operator (max |eigenvalue|).
double operator_norm(const HermitianOperator& op);

/// Number of eigenvalues above rank_threshold(max |eigenvalue|).
Eigen::Index numerical_rank(const HermitianOperator& op);

/// Largest |<u_i|u_j> - delta_ij| over the columns of `vectors`.
double orthonormality_defect(const ComplexMatrix& vectors);

/// Tr[a b] for Hermitian a, b. Computed as sum_ij Re(a_ij conj(b_ij)), so the
/// result is bitwise symmetric in its arguments.
double trace_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Unit-norm state vector.
class PureStateVector {
 public:
  explicit PureStateVector(ComplexVector amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// Trace-one positive semidefinite Hermitian operator. Eigenvalues in
/// [-tol::kPsd, 0) are clamped to zero on construction.
class DensityOperator {
 public:
  explicit DensityOperator(const HermitianOperator& op);

  /// sum_i probs[i] |vectors_i><vectors_i| for orthonormal columns `vectors`.
  static DensityOperator from_eigensystem(std::span<const double> probs,
                                          const ComplexMatrix& vectors);
  static DensityOperator pure(const PureStateVector& psi);
  static DensityOperator maximally_mixed(Eigen::Index dim);

  Eigen::Index dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const EigenDecomposition& eigen() const { return eig_; }

 private:
  HermitianOperator op_;
  EigenDecomposition eig_;
};

inline DensityOperator density_from_eigensystem(std::span<const double> probs,
                                                const ComplexMatrix& vectors) {
  return DensityOperator::from_eigensystem(probs, vectors);
}

}  // namespace qoc
