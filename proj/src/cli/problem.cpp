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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qoc/cli.hpp"
#include "qoc/errors.hpp"

namespace qoc::cli {
namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Best-effort line of the deepest object key named in `pointer`.
std::optional<std::size_t> locate(std::string_view text, const json::json_pointer& pointer) {
  std::vector<std::string> tokens;
  for (json::json_pointer p = pointer; !p.empty(); p = p.parent_pointer()) tokens.push_back(p.back());
  std::reverse(tokens.begin(), tokens.end());
  std::size_t pos = 0;
  std::optional<std::size_t> found;
  for (const std::string& t : tokens) {
    if (!t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      continue;
    }
    const std::size_t at = text.find('"' + t + '"', pos);
    if (at == std::string_view::npos) break;
    pos = at;
    found = at;
  }
  if (!found) return std::nullopt;
  return line_at(text, *found);
}

class Reader {
 public:
  Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  json parse() const {
    try {
      return json::parse(text_);
    } catch (const json::parse_error& e) {
      std::ostringstream os;
      os << source_ << ":" << line_at(text_, e.byte == 0 ? 0 : e.byte - 1)
         << ": invalid JSON: " << e.what();
      throw SchemaError(os.str());
    }
  }

  [[noreturn]] void fail(const json::json_pointer& where, const std::string& what) const {
    std::ostringstream os;
    os << source_;
    if (const auto line = locate(text_, where)) os << ":" << *line;
    os << ": " << (where.empty() ? std::string("/") : where.to_string()) << ": " << what;
    throw SchemaError(os.str());
  }

  const json& member(const json& obj, const json::json_pointer& at, const char* key) const {
    if (!obj.is_object()) fail(at, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(at, std::string("missing required field \"") + key + "\"");
    return *it;
  }

  double number(const json& v, const json::json_pointer& at) const {
    if (!v.is_number()) fail(at, "expected a number");
    return v.get<double>();
  }

  Complex complex(const json& v, const json::json_pointer& at) const {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail(at, "expected a complex number as [re, im]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }

  ComplexVector vector(const json& v, const json::json_pointer& at, Eigen::Index n) const {
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n) {
      fail(at, "expected a vector of " + std::to_string(n) + " complex entries");
    }
    ComplexVector out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out(i) = complex(v[static_cast<std::size_t>(i)], at / static_cast<std::size_t>(i));
    }
    return out;
  }

  ComplexMatrix matrix(const json& v, const json::json_pointer& at, Eigen::Index n) const {
    if (!v.is_array() || (n > 0 && static_cast<Eigen::Index>(v.size()) != n)) {
      fail(at, "expected " + (n > 0 ? std::to_string(n) : std::string("N")) + " rows");
    }
    if (n == 0) n = static_cast<Eigen::Index>(v.size());
    if (n == 0) fail(at, "matrix must have at least one row");
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m.row(i) = vector(v[static_cast<std::size_t>(i)], at / static_cast<std::size_t>(i), n).transpose();
    }
    return m;
  }

  HermitianOperator hermitian(const json& v, const json::json_pointer& at, Eigen::Index n) const {
    const ComplexMatrix m = matrix(v, at, n);
    try {
      return HermitianOperator(m);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  DensityOperator density(const json& v, const json::json_pointer& at, Eigen::Index n) const {
    if (!v.is_object()) fail(at, "expected an object with \"matrix\" or \"eigenvalues\"");
    const bool has_matrix = v.contains("matrix");
    const bool has_eig = v.contains("eigenvalues") || v.contains("eigenvectors");
    if (has_matrix == has_eig) {
      fail(at, "give exactly one of \"matrix\" or \"eigenvalues\"/\"eigenvectors\"");
    }
    try {
      if (has_matrix) return DensityOperator(hermitian(v["matrix"], at / "matrix", n));
      const json& vals = member(v, at, "eigenvalues");
      const json& vecs = member(v, at, "eigenvectors");
      if (!vals.is_array() || static_cast<Eigen::Index>(vals.size()) != n) {
        fail(at / "eigenvalues", "expected " + std::to_string(n) + " eigenvalues");
      }
      if (!vecs.is_array() || static_cast<Eigen::Index>(vecs.size()) != n) {
        fail(at / "eigenvectors", "expected " + std::to_string(n) + " eigenvectors");
      }
      std::vector<double> probs;
      ComplexMatrix cols(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        probs.push_back(number(vals[k], at / "eigenvalues" / k));
        cols.col(i) = vector(vecs[k], at / "eigenvectors" / k, n);
      }
      return DensityOperator::from_eigensystem(probs, cols);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  void check_schema(const json& doc) const {
    const json& s = member(doc, json::json_pointer(), "schema");
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion) {
      fail(json::json_pointer("/schema"), "unsupported schema version (expected 1)");
    }
  }

 private:
  std::string_view text_;
  std::string source_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Problem parse_problem(std::string_view text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  r.check_schema(doc);
  using P = json::json_pointer;

  Problem p;
  p.source = source;
  const json& dim = r.member(doc, P(), "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    r.fail(P("/dimension"), "expected a positive integer");
  }
  p.dimension = static_cast<Eigen::Index>(dim.get<long long>());

  const json& pri = r.member(doc, P(), "priors");
  const double h1 = r.number(r.member(pri, P("/priors"), "p_h1"), P("/priors/p_h1"));
  try {
    p.priors = Priors::from_h1(h1);
  } catch (const Error& e) {
    r.fail(P("/priors/p_h1"), e.what());
  }

  if (doc.contains("qubit_setup")) {
    const json& q = doc["qubit_setup"];
    const P at("/qubit_setup");
    const double alpha = r.number(r.member(q, at, "alpha"), at / "alpha");
    const double a0 = r.number(r.member(q, at, "a0"), at / "a0");
    const double b0 = r.number(r.member(q, at, "b0"), at / "b0");
    try {
      p.qubit_setup = QubitDiscriminationSetup::make(alpha, a0, b0);
    } catch (const Error& e) {
      r.fail(at, e.what());
    }
  }

  const bool has0 = doc.contains("rho0");
  const bool has1 = doc.contains("rho1");
  if (has0 != has1) r.fail(P(), "rho0 and rho1 must be given together");
  if (has0) {
    p.rho0 = r.density(doc["rho0"], P("/rho0"), p.dimension);
    p.rho1 = r.density(doc["rho1"], P("/rho1"), p.dimension);
  } else if (p.qubit_setup) {
    if (p.dimension != 2) r.fail(P("/dimension"), "a qubit_setup without rho0/rho1 needs dimension 2");
    auto [r0, r1] = p.qubit_setup->densities();
    p.rho0 = std::move(r0);
    p.rho1 = std::move(r1);
  } else {
    r.fail(P(), "missing required field \"rho0\" (or a qubit_setup)");
  }
  return p;
}

Problem load_problem(const std::string& path) { return parse_problem(read_file(path), path); }

OperatorSet parse_operator_set(std::string_view text, const std::string& source) {
  const Reader r(text, source);
  const json doc = r.parse();
  r.check_schema(doc);
  using P = json::json_pointer;

  OperatorSet set;
  Eigen::Index n = 0;
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1) {
      r.fail(P("/dimension"), "expected a positive integer");
    }
    n = static_cast<Eigen::Index>(doc["dimension"].get<long long>());
  }
  if (doc.contains("elements")) {
    const json& els = doc["elements"];
    if (!els.is_array() || els.empty()) r.fail(P("/elements"), "expected a non-empty array");
    for (std::size_t m = 0; m < els.size(); ++m) {
      set.elements.push_back(r.hermitian(els[m], P("/elements") / m, n));
      n = set.elements.back().dim();
    }
  } else if (doc.contains("pi0") || doc.contains("pi1")) {
    set.elements.push_back(r.hermitian(r.member(doc, P(), "pi0"), P("/pi0"), n));
    n = set.elements.back().dim();
    set.elements.push_back(r.hermitian(r.member(doc, P(), "pi1"), P("/pi1"), n));
    set.binary = true;
  } else {
    r.fail(P(), "missing required field \"elements\" (or \"pi0\"/\"pi1\")");
  }
  if (doc.contains("rho0") != doc.contains("rho1")) r.fail(P(), "rho0 and rho1 must be given together");
  if (doc.contains("rho0")) {
    set.rho0 = r.density(doc["rho0"], P("/rho0"), n);
    set.rho1 = r.density(doc["rho1"], P("/rho1"), n);
  }
  return set;
}

OperatorSet load_operator_set(const std::string& path) {
  return parse_operator_set(read_file(path), path);
}

bool looks_like_problem(const std::string& path) {
  const std::string text = read_file(path);
  const json doc = Reader(text, path).parse();
  return doc.is_object() && (doc.contains("qubit_setup") ||
                             (doc.contains("rho0") && doc.contains("priors")));
}

}  // namespace qoc::cli
