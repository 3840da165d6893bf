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

namespace qoc {

/// Prior probabilities of the two hypotheses. h0 + h1 = 1 within 1e-12.
class Priors {
 public:
  Priors(double h0, double h1);
  static Priors from_h1(double h1) { return Priors(1.0 - h1, h1); }
  static Priors equal() { return Priors(0.5, 0.5); }

  double h0() const { return h0_; }
  double h1() const { return h1_; }
  /// C = P(H0) / P(H1); +inf when h1 == 0.
  double ratio() const;

 private:
  double h0_;
  double h1_;
};

}  // namespace qoc
