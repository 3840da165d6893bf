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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qoc/decision.hpp"
#include "qoc/measurement.hpp"
#include "qoc/operators.hpp"

namespace qoc {

namespace tol {
inline constexpr double kFrame = 1e-10;
}  // namespace tol

/// Vectors (columns) whose outer products sum to `resolved`.
struct ParsevalFrame {
  ComplexMatrix vectors;
  HermitianOperator resolved;

  std::size_t size() const { return static_cast<std::size_t>(vectors.cols()); }
  /// Spectral norm of sum_k |f_k><f_k| - resolved.
  double residual() const;
};

/// Spectral norm of sum_k |f_k><f_k| - target for the columns of `vectors`.
double resolution_residual(const ComplexMatrix& vectors, const HermitianOperator& target);

/// {sqrt(lambda_k) |v_k>} over eigenpairs with lambda_k above the rank
/// threshold. Throws kNotPositive for an eigenvalue below -tol::kPsd.
ParsevalFrame eigen_frame(const HermitianOperator& e);

/// Orthonormal basis (columns) of C^dim from the QR factorization of a
/// standard complex Gaussian matrix, phases fixed by the diagonal of R.
/// Deterministic in `seed`.
ComplexMatrix haar_random_orthonormal_basis(Eigen::Index dim, std::uint64_t seed);

struct SeedBasis {
  enum class Kind { kCanonical, kDft, kHaarRandom };
  Kind kind = Kind::kCanonical;
  std::uint64_t seed = 0;

  static SeedBasis canonical() { return {Kind::kCanonical, 0}; }
  static SeedBasis dft() { return {Kind::kDft, 0}; }
  static SeedBasis haar(std::uint64_t seed) { return {Kind::kHaarRandom, seed}; }
  /// "canonical", "dft" or "haar"/"haar-random"; kUnknownSeedBasis otherwise.
  static SeedBasis parse(std::string_view tag, std::uint64_t seed = 0);
  std::string name() const;
};

/// Orthonormal basis of C^dim (columns) selected by `seed`.
ComplexMatrix seed_basis_vectors(const SeedBasis& seed, Eigen::Index dim);

/// Rank-one decomposition of one non-negative operator E (N x N) into K
/// vectors. With L = max(N, K), `coefficients` is the L x K matrix A whose
/// row i is sqrt(lambda_i) times a seed basis vector (rows i >= N are zero)
/// and whose column k holds the coordinates of f_k in the eigenbasis of E.
struct ElementExpansion {
  EigenDecomposition eigen;
  /// lambda_0..lambda_{N-1}, then zeros up to L
  RealVector lambdas;
  ComplexMatrix coefficients;
  /// f_k as columns, N x K
  ComplexMatrix vectors;

  /// max |A A^H - Lambda|
  double gram_residual() const;
};

/// Builds E = sum_k |f_k><f_k| from a seed basis of C^K. For K >= N, basis
/// vector i scales row i. For K < N, the K basis vectors go to the nonzero
/// eigenvalues in order (there are at most K of them). Throws
/// kInfeasibleFrameCount when K < rank(E).
ElementExpansion expand_element(const HermitianOperator& e, std::size_t k, const SeedBasis& seed);

/// f_k = sum_i sqrt(lambda_i / N) exp(-j 2 pi i k / N) |v_i>, k = 0..N-1.
ComplexMatrix dft_frame(const HermitianOperator& e);

struct FrameExpansion {
  Povm source;
  std::vector<std::size_t> counts;
  std::vector<ElementExpansion> elements;
  /// Rank-one POVM with sum_m K_m outcomes, element-major order.
  Povm expanded;
  /// Source outcome m of each expanded outcome.
  std::vector<std::size_t> grouping;

  /// All frame vectors side by side (N x sum K_m).
  ComplexMatrix pooled_vectors() const;
};

/// Expands every element of `povm`. `seeds` holds either one basis per
/// element or a single basis used for all; a single haar basis with seed s
/// uses seed s + m for element m.
FrameExpansion expand_povm(const Povm& povm, std::span<const std::size_t> counts,
                           std::span<const SeedBasis> seeds);

struct MeasurementSystem {
  Povm povm;
  DecisionRegion region;
};

/// Expanded POVM with D = {(m,k) : m in base_region}.
MeasurementSystem build_equivalent_system(const FrameExpansion& expansion,
                                          const DecisionRegion& base_region);

/// Spectral norm of sum_{m in D} E_m over the two systems' regions.
double grouping_residual(const MeasurementSystem& a, const MeasurementSystem& b);

/// max over i, j in {0,1} of |P_a('i' | rho_j) - P_b('i' | rho_j)|.
double verify_equivalence(const MeasurementSystem& a, const MeasurementSystem& b,
                          const DensityOperator& rho0, const DensityOperator& rho1);

}  // namespace qoc
