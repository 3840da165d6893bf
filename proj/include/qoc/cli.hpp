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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qoc/characteristics.hpp"
#include "qoc/decision.hpp"
#include "qoc/measurement.hpp"
#include "qoc/operators.hpp"
#include "qoc/priors.hpp"

namespace qoc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSchema = 2,
  kExitPrecondition = 3,
  kExitResidual = 4,
};

/// Malformed or invariant-violating input file. The message carries the
/// source name and, when it can be located, the line.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Problem {
  std::string source;
  Eigen::Index dimension = 0;
  DensityOperator rho0 = DensityOperator::maximally_mixed(1);
  DensityOperator rho1 = DensityOperator::maximally_mixed(1);
  Priors priors = Priors::equal();
  std::optional<QubitDiscriminationSetup> qubit_setup;
};

Problem parse_problem(std::string_view text, const std::string& source);
Problem load_problem(const std::string& path);

/// Operator file: {"schema": 1, "elements": [M, ...]} or {"schema": 1,
/// "pi0": M, "pi1": M}, optionally with "rho0"/"rho1" densities.
struct OperatorSet {
  std::vector<HermitianOperator> elements;
  std::optional<DensityOperator> rho0;
  std::optional<DensityOperator> rho1;
  bool binary = false;
};

OperatorSet parse_operator_set(std::string_view text, const std::string& source);
OperatorSet load_operator_set(const std::string& path);

/// True when the document at `path` has a "rho0" or "qubit_setup" member
/// and so reads as a problem file rather than an operator file.
bool looks_like_problem(const std::string& path);

/// Shortest-round-trip-safe text for a double: 17 significant digits.
std::string format_double(double v);

std::string curve_csv(const OperatingCharacteristic& curve, std::string_view param_name);
std::string sweep_csv(const PriorSweep& sweep);

/// One --k token: "3", "rank" or "rank+2".
struct FrameCountSpec {
  bool relative = false;
  std::size_t value = 0;
  std::size_t resolve(std::size_t rank) const { return relative ? rank + value : value; }
};
std::vector<FrameCountSpec> parse_frame_counts(std::string_view list);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qoc::cli
