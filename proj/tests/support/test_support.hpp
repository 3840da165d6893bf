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

// Random problem generators and brute-force oracles shared by the test
// binaries. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qoc/operators.hpp"

namespace qoc::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(n, n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Ginibre-distributed density of the given rank.
inline DensityOperator random_density(Eigen::Index n, Rng& rng, Eigen::Index rank = -1) {
  if (rank < 0) rank = n;
  const ComplexMatrix g = gaussian_matrix(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(HermitianOperator(0.5 * (rho + rho.adjoint())));
}

inline ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  ComplexVector v = gaussian_matrix(n, 1, rng).col(0);
  return v / v.norm();
}

/// Elements E_m = S^{-1/2} S_m S^{-1/2} with S_m random PSD of mixed ranks.
inline std::vector<HermitianOperator> random_povm_elements(Eigen::Index n, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> rank_dist(1, n);
  std::vector<Eigen::Index> ranks(m);
  Eigen::Index total = 0;
  for (auto& r : ranks) total += (r = rank_dist(rng));
  for (std::size_t i = 0; total < n; i = (i + 1) % m) {
    if (ranks[i] < n) {
      ++ranks[i];
      ++total;
    }
  }
  std::vector<ComplexMatrix> parts;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (Eigen::Index r : ranks) {
    const ComplexMatrix g = gaussian_matrix(n, r, rng);
    parts.push_back(g * g.adjoint());
    sum += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (sum + sum.adjoint()));
  const ComplexMatrix inv_sqrt = es.eigenvectors() *
                                 es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                 es.eigenvectors().adjoint();
  std::vector<HermitianOperator> out;
  for (const auto& p : parts) {
    const ComplexMatrix e = inv_sqrt * p * inv_sqrt;
    out.emplace_back(0.5 * (e + e.adjoint()));
  }
  return out;
}

inline std::vector<double> random_pmf(std::size_t m, Rng& rng, double zero_fraction = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(m);
  double total = 0.0;
  for (auto& x : p) {
    x = u(rng) < zero_fraction ? 0.0 : u(rng);
    total += x;
  }
  if (total == 0.0) {
    p[0] = 1.0;
    return p;
  }
  for (auto& x : p) x /= total;
  return p;
}

struct Point2 {
  double x;
  double y;
};

/// Upper concave hull of every (pf, pd) reachable by some subset of outcomes,
/// enumerated exhaustively. Collinear points are dropped.
inline std::vector<Point2> brute_force_lrt_vertices(const std::vector<double>& p0,
                                                    const std::vector<double>& p1) {
  const std::size_t m = p0.size();
  std::vector<Point2> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Point2 pt{0.0, 0.0};
    for (std::size_t s = 0; s < m; ++s) {
      if (mask >> s & 1U) {
        pt.x += p0[s];
        pt.y += p1[s];
      }
    }
    pts.push_back(pt);
  }
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y > b.y);
  });
  std::vector<Point2> hull;
  for (const Point2& p : pts) {
    if (!hull.empty() && std::abs(p.x - hull.back().x) < 1e-15) continue;  // keep top of column
    while (hull.size() >= 2) {
      const Point2& a = hull[hull.size() - 2];
      const Point2& b = hull.back();
      const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      if (cross >= -1e-13) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  // The leftmost column's top may sit above (0,0); the curve starts at (0,0).
  if (hull.front().y > 1e-15) hull.insert(hull.begin(), Point2{0.0, 0.0});
  return hull;
}

/// min over all 2^M regions of P(H0) pf + P(H1) (1 - pd).
inline double brute_force_min_error(const std::vector<double>& p0, const std::vector<double>& p1,
                                    double h0, double h1) {
  const std::size_t m = p0.size();
  double best = 2.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double pf = 0.0;
    double pd = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      if (mask >> s & 1U) {
        pf += p0[s];
        pd += p1[s];
      }
    }
    best = std::min(best, h0 * pf + h1 * (1.0 - pd));
  }
  return best;
}

/// Eight-outcome example PMFs: uniform, and the triangular profile 2,4,6,8,7,5,3,1
/// normalized by its total 36.
inline std::vector<double> triangle8_a() { return std::vector<double>(8, 1.0 / 8.0); }
inline std::vector<double> triangle8_b() {
  return {2.0 / 36, 4.0 / 36, 6.0 / 36, 8.0 / 36, 7.0 / 36, 5.0 / 36, 3.0 / 36, 1.0 / 36};
}

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace qoc::testing
