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

#include "qoc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qoc/errors.hpp"

namespace qoc {
namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void rephase_columns(ComplexMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      // Strict comparison with a small margin keeps the pick stable when two
      // components tie in magnitude up to rounding.
      const double mag = std::abs(vectors(r, c));
      if (mag > best * (1.0 + 1e-12) + 1e-300) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= 0.0) continue;
    const Complex phase = std::conj(vectors(pivot, c)) / best;
    vectors.col(c) *= phase;
    vectors(pivot, c) = Complex(std::abs(vectors(pivot, c)), 0.0);
  }
}

}  // namespace

double max_asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double rank_threshold(double largest) { return tol::kRank * std::max(std::abs(largest), 1.0); }

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "Hermitian operator must be square and non-empty, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
  const double asym = max_asymmetry(m);
  if (!(asym <= tol::kHermiticity)) {
    throw Error(ErrorCode::kNonHermitian,
                "matrix is not Hermitian: max asymmetry " + fmt_double(asym));
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                                        static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  }
  return HermitianOperator(std::move(m), Trusted{});
}

HermitianOperator HermitianOperator::outer(const ComplexVector& v) {
  ComplexMatrix m = v * v.adjoint();
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) = std::norm(v(i));
  return HermitianOperator(0.5 * (m + m.adjoint()), Trusted{});
}

double HermitianOperator::trace() const { return m_.trace().real(); }

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "operator dimensions differ");
  return HermitianOperator(m_ + o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "operator dimensions differ");
  return HermitianOperator(m_ - o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s, Trusted{});
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

EigenDecomposition hermitian_eig(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNonHermitian, "Hermitian eigensolver failed to converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  rephase_columns(out.vectors);
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  return hermitian_eig(HermitianOperator(m));
}

double operator_norm(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::Index numerical_rank(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();
  const double cut = rank_threshold(ev.cwiseAbs().maxCoeff());
  return static_cast<Eigen::Index>((ev.array() > cut).count());
}

double orthonormality_defect(const ComplexMatrix& vectors) {
  if (vectors.cols() == 0) return 0.0;
  const ComplexMatrix gram = vectors.adjoint() * vectors;
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double trace_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "trace_inner dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
  const ComplexMatrix& x = a.matrix();
  const ComplexMatrix& y = b.matrix();
  double re = 0.0;
  double im = 0.0;
  double scale = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      // x_ij conj(y_ij) = x_ij y_ji for Hermitian y
      re += x(i, j).real() * y(i, j).real() + x(i, j).imag() * y(i, j).imag();
      im += x(i, j).imag() * y(i, j).real() - x(i, j).real() * y(i, j).imag();
      scale += std::abs(x(i, j)) * std::abs(y(i, j));
    }
  }
  if (std::abs(im) > tol::kImag * std::max(1.0, scale)) {
    throw Error(ErrorCode::kNonHermitian,
                "trace_inner produced imaginary residue " + fmt_double(im));
  }
  return re;
}

PureStateVector::PureStateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "state vector must be non-empty");
  }
  const double n2 = amplitudes_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol::kNorm) {
    throw Error(ErrorCode::kNotNormalized, "state vector squared norm is " + fmt_double(n2));
  }
}

DensityOperator::DensityOperator(const HermitianOperator& op) : op_(op) {
  const double tr = op.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw Error(ErrorCode::kTraceMismatch, "density operator trace is " + fmt_double(tr));
  }
  eig_ = hermitian_eig(op);
  const double min_ev = eig_.values.minCoeff();
  if (min_ev < -tol::kPsd) {
    throw Error(ErrorCode::kNotPositive,
                "density operator has negative eigenvalue " + fmt_double(min_ev));
  }
  if (min_ev < 0.0) {
    eig_.values = eig_.values.cwiseMax(0.0);
    op_ = HermitianOperator(eig_.reconstruct());
  }
}

DensityOperator DensityOperator::from_eigensystem(std::span<const double> probs,
                                                  const ComplexMatrix& vectors) {
  const auto n = static_cast<Eigen::Index>(probs.size());
  if (n == 0 || vectors.cols() != n || vectors.rows() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n) + " eigenvectors, got " +
                    std::to_string(vectors.cols()));
  }
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) {
      throw Error(ErrorCode::kNegativeProbability,
                  "probability " + std::to_string(i) + " is negative: " + fmt_double(probs[i]));
    }
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > tol::kTrace) {
    throw Error(ErrorCode::kProbabilitySum, "probabilities sum to " + fmt_double(total));
  }
  const double defect = orthonormality_defect(vectors);
  if (defect > tol::kOrtho) {
    throw Error(ErrorCode::kNotOrthonormal,
                "eigenvectors are not orthonormal: Gram defect " + fmt_double(defect));
  }
  ComplexMatrix m = ComplexMatrix::Zero(vectors.rows(), vectors.rows());
  for (Eigen::Index i = 0; i < n; ++i) {
    m += probs[static_cast<std::size_t>(i)] * (vectors.col(i) * vectors.col(i).adjoint());
  }
  return DensityOperator(HermitianOperator(0.5 * (m + m.adjoint())));
}

DensityOperator DensityOperator::pure(const PureStateVector& psi) {
  return DensityOperator(HermitianOperator::outer(psi.amplitudes()));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return DensityOperator(HermitianOperator::identity(dim) * (1.0 / static_cast<double>(dim)));
}

}  // namespace qoc
