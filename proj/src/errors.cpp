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

#include "qoc/errors.hpp"

namespace qoc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "non_hermitian";
    case ErrorCode::kNotPositive: return "not_positive";
    case ErrorCode::kTraceMismatch: return "trace_mismatch";
    case ErrorCode::kNegativeProbability: return "negative_probability";
    case ErrorCode::kProbabilitySum: return "probability_sum";
    case ErrorCode::kNotOrthonormal: return "not_orthonormal";
    case ErrorCode::kNotNormalized: return "not_normalized";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kLinearlyDependent: return "linearly_dependent";
    case ErrorCode::kIncompletePovm: return "incomplete_povm";
    case ErrorCode::kInfeasiblePrior: return "infeasible_prior";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kMissingEndpoints: return "missing_endpoints";
    case ErrorCode::kInfeasibleFrameCount: return "infeasible_frame_count";
    case ErrorCode::kUnknownSeedBasis: return "unknown_seed_basis";
    case ErrorCode::kDegenerateConic: return "degenerate_conic";
    case ErrorCode::kNotEigenvectors: return "not_eigenvectors";
    case ErrorCode::kNotReducible: return "not_reducible";
  }
  return "unknown";
}

}  // namespace qoc
