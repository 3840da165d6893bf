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

#include "qoc/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qoc/errors.hpp"

namespace qoc {
namespace {

EigenDecomposition nonnegative_eig(const HermitianOperator& e) {
  EigenDecomposition eig = hermitian_eig(e);
  const double lo = eig.values.minCoeff();
  if (lo < -tol::kPsd) {
    std::ostringstream os;
    os << "operator is not non-negative: eigenvalue " << lo;
    throw Error(ErrorCode::kNotPositive, os.str());
  }
  eig.values = eig.values.cwiseMax(0.0);
  return eig;
}

Eigen::Index rank_of(const RealVector& values) {
  const double cut = rank_threshold(values.maxCoeff());
  return static_cast<Eigen::Index>((values.array() > cut).count());
}

}  // namespace

double resolution_residual(const ComplexMatrix& vectors, const HermitianOperator& target) {
  if (vectors.rows() != target.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "frame vectors and operator dimensions differ");
  }
  const ComplexMatrix sum = vectors * vectors.adjoint();
  return operator_norm(HermitianOperator(0.5 * (sum + sum.adjoint())) - target);
}

double ParsevalFrame::residual() const { return resolution_residual(vectors, resolved); }

ParsevalFrame eigen_frame(const HermitianOperator& e) {
  const EigenDecomposition eig = nonnegative_eig(e);
  const double cut = rank_threshold(eig.values.maxCoeff());
  ComplexMatrix vecs(e.dim(), rank_of(eig.values));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < eig.dim(); ++i) {
    if (eig.values(i) > cut) vecs.col(k++) = std::sqrt(eig.values(i)) * eig.vectors.col(i);
  }
  return ParsevalFrame{std::move(vecs), e};
}

ComplexMatrix haar_random_orthonormal_basis(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

SeedBasis SeedBasis::parse(std::string_view tag, std::uint64_t seed) {
  if (tag == "canonical") return canonical();
  if (tag == "dft") return dft();
  if (tag == "haar" || tag == "haar-random") return haar(seed);
  throw Error(ErrorCode::kUnknownSeedBasis,
              "unknown seed basis '" + std::string(tag) + "' (expected canonical, dft or haar)");
}

std::string SeedBasis::name() const {
  switch (kind) {
    case Kind::kCanonical: return "canonical";
    case Kind::kDft: return "dft";
    case Kind::kHaarRandom: return "haar";
  }
  return "unknown";
}

ComplexMatrix seed_basis_vectors(const SeedBasis& seed, Eigen::Index dim) {
  switch (seed.kind) {
    case SeedBasis::Kind::kCanonical:
      return ComplexMatrix::Identity(dim, dim);
    case SeedBasis::Kind::kDft: {
      ComplexMatrix w(dim, dim);
      const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
      for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index l = 0; l < dim; ++l) {
          const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * l) % dim) /
                               static_cast<double>(dim);
          w(l, k) = norm * Complex(std::cos(angle), std::sin(angle));
        }
      }
      return w;
    }
    case SeedBasis::Kind::kHaarRandom:
      return haar_random_orthonormal_basis(dim, seed.seed);
  }
  throw Error(ErrorCode::kUnknownSeedBasis, "unknown seed basis kind");
}

double ElementExpansion::gram_residual() const {
  const ComplexMatrix lambda = lambdas.cast<Complex>().asDiagonal();
  return (coefficients * coefficients.adjoint() - lambda).cwiseAbs().maxCoeff();
}

ElementExpansion expand_element(const HermitianOperator& e, std::size_t k, const SeedBasis& seed) {
  EigenDecomposition eig = nonnegative_eig(e);
  const Eigen::Index n = e.dim();
  const Eigen::Index rank = rank_of(eig.values);
  const auto kk = static_cast<Eigen::Index>(k);
  if (kk < rank) {
    throw Error(ErrorCode::kInfeasibleFrameCount,
                "K < rank(E): cannot write a rank-" + std::to_string(rank) + " element as a sum of " +
                    std::to_string(k) + " rank-one terms");
  }
  const Eigen::Index l = std::max(n, kk);
  const ComplexMatrix basis = kk > 0 ? seed_basis_vectors(seed, kk) : ComplexMatrix();

  RealVector lambdas = RealVector::Zero(l);
  ComplexMatrix a = ComplexMatrix::Zero(l, kk);
  if (kk >= n) {
    lambdas.head(n) = eig.values;
    for (Eigen::Index i = 0; i < n; ++i) {
      a.row(i) = std::sqrt(eig.values(i)) * basis.col(i).transpose();
    }
  } else {
    const double cut = rank_threshold(eig.values.maxCoeff());
    Eigen::Index next = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (eig.values(i) <= cut) continue;
      lambdas(i) = eig.values(i);
      a.row(i) = std::sqrt(eig.values(i)) * basis.col(next++).transpose();
    }
  }
  ComplexMatrix vectors = eig.vectors * a.topRows(n);
  return ElementExpansion{std::move(eig), std::move(lambdas), std::move(a), std::move(vectors)};
}

ComplexMatrix dft_frame(const HermitianOperator& e) {
  const EigenDecomposition eig = nonnegative_eig(e);
  const Eigen::Index n = e.dim();
  ComplexMatrix f = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>((i * k) % n) / static_cast<double>(n);
      const double weight = std::sqrt(eig.values(i) / static_cast<double>(n));
      f.col(k) += weight * Complex(std::cos(angle), std::sin(angle)) * eig.vectors.col(i);
    }
  }
  return f;
}

ComplexMatrix FrameExpansion::pooled_vectors() const {
  Eigen::Index total = 0;
  for (const auto& el : elements) total += el.vectors.cols();
  ComplexMatrix out(source.dim(), total);
  Eigen::Index c = 0;
  for (const auto& el : elements) {
    out.middleCols(c, el.vectors.cols()) = el.vectors;
    c += el.vectors.cols();
  }
  return out;
}

FrameExpansion expand_povm(const Povm& povm, std::span<const std::size_t> counts,
                           std::span<const SeedBasis> seeds) {
  const std::size_t m_count = povm.size();
  if (counts.size() != m_count) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(m_count) +
                                                   " frame counts, got " +
                                                   std::to_string(counts.size()));
  }
  if (seeds.size() != m_count && seeds.size() != 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected one seed basis or one per element, got " + std::to_string(seeds.size()));
  }
  std::vector<ElementExpansion> elements;
  std::vector<HermitianOperator> rank_one;
  std::vector<std::size_t> grouping;
  for (std::size_t m = 0; m < m_count; ++m) {
    SeedBasis seed = seeds.size() == 1 ? seeds.front() : seeds[m];
    if (seeds.size() == 1 && seed.kind == SeedBasis::Kind::kHaarRandom) seed.seed += m;
    try {
      elements.push_back(expand_element(povm[m], counts[m], seed));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kInfeasibleFrameCount) throw;
      throw Error(err.code(), "element " + std::to_string(m) + ": " + err.what());
    }
    const ComplexMatrix& f = elements.back().vectors;
    for (Eigen::Index k = 0; k < f.cols(); ++k) {
      rank_one.push_back(HermitianOperator::outer(f.col(k)));
      grouping.push_back(m);
    }
  }
  return FrameExpansion{povm,
                        std::vector<std::size_t>(counts.begin(), counts.end()),
                        std::move(elements),
                        Povm(std::move(rank_one)),
                        std::move(grouping)};
}

MeasurementSystem build_equivalent_system(const FrameExpansion& expansion,
                                          const DecisionRegion& base_region) {
  if (base_region.outcomes() != expansion.source.size()) {
    throw Error(ErrorCode::kOutOfRange, "base region does not match the source POVM");
  }
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < expansion.grouping.size(); ++j) {
    if (base_region.contains(expansion.grouping[j])) idx.push_back(j);
  }
  return MeasurementSystem{expansion.expanded,
                           DecisionRegion(expansion.grouping.size(), std::move(idx))};
}

double grouping_residual(const MeasurementSystem& a, const MeasurementSystem& b) {
  const auto grouped = [](const MeasurementSystem& s) {
    HermitianOperator sum = HermitianOperator::zero(s.povm.dim());
    for (std::size_t m : s.region.indices()) sum = sum + s.povm[m];
    return sum;
  };
  return operator_norm(grouped(a) - grouped(b));
}

double verify_equivalence(const MeasurementSystem& a, const MeasurementSystem& b,
                          const DensityOperator& rho0, const DensityOperator& rho1) {
  const auto decide_one = [&](const MeasurementSystem& s) {
    const ScorePmfPair pmfs(outcome_pmf(s.povm, rho0), outcome_pmf(s.povm, rho1));
    const OperatingPoint pt = pf_pd(pmfs, s.region);
    return std::pair{pt.pf, pt.pd};
  };
  const auto [a0, a1] = decide_one(a);
  const auto [b0, b1] = decide_one(b);
  // P('0' | rho_j) = 1 - P('1' | rho_j), so both decisions share one deviation.
  const double d0 = std::abs(a0 - b0);
  const double d1 = std::abs(a1 - b1);
  return std::max({d0, d1, std::abs((1.0 - a0) - (1.0 - b0)), std::abs((1.0 - a1) - (1.0 - b1))});
}

}  // namespace qoc
