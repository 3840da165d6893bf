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

#include <cmath>
#include <cstdio>
#include <string>

#include "qoc/cli.hpp"
#include "qoc/errors.hpp"

namespace qoc::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string curve_csv(const OperatingCharacteristic& curve, std::string_view param_name) {
  std::string out(param_name);
  out += ",pf,pd\n";
  for (const OperatingPoint& pt : curve.points) {
    out += format_double(pt.param.value);
    out += ',';
    out += format_double(pt.pf);
    out += ',';
    out += format_double(pt.pd);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const PriorSweep& sweep) {
  std::string out = "p_h1,pf,pd,rank_pi1\n";
  for (std::size_t i = 0; i < sweep.curve.points.size(); ++i) {
    const OperatingPoint& pt = sweep.curve.points[i];
    out += format_double(pt.param.value);
    out += ',';
    out += format_double(pt.pf);
    out += ',';
    out += format_double(pt.pd);
    out += ',';
    out += std::to_string(sweep.rank_pi1[i]);
    out += '\n';
  }
  return out;
}

std::vector<FrameCountSpec> parse_frame_counts(std::string_view list) {
  std::vector<FrameCountSpec> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    std::string tok(list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - start));
    const auto bad = [&] {
      return Error(ErrorCode::kOutOfRange,
                   "bad frame count '" + tok + "' (expected N, rank or rank+N)");
    };
    FrameCountSpec spec;
    std::string digits = tok;
    if (tok.rfind("rank", 0) == 0) {
      spec.relative = true;
      digits = tok.substr(4);
      if (digits.empty()) {
        digits = "0";
      } else if (digits[0] == '+') {
        digits = digits.substr(1);
      } else {
        throw bad();
      }
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    spec.value = std::stoul(digits);
    out.push_back(spec);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qoc::cli
