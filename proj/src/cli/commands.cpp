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
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qoc/characteristics.hpp"
#include "qoc/cli.hpp"
#include "qoc/errors.hpp"
#include "qoc/frames.hpp"
#include "qoc/helstrom.hpp"

namespace qoc::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr double kEllipseResidualTol = 1e-9;
constexpr double kChanceTol = 1e-12;
constexpr double kConcavityTol = 1e-12;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson matrix_json(const ComplexMatrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// Columns as a list of complex vectors.
ojson columns_json(const ComplexMatrix& m) {
  ojson cols = ojson::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    ojson v = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back({m(i, j).real(), m(i, j).imag()});
    cols.push_back(std::move(v));
  }
  return cols;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

// --- helstrom -------------------------------------------------------------

struct HelstromArgs {
  std::string problem;
  std::string emit;
};

int cmd_helstrom(const HelstromArgs& a, Io io) {
  const Problem p = load_problem(a.problem);
  const Eigen::Index n = p.dimension;
  HermitianOperator pi1 = HermitianOperator::zero(n);
  HermitianOperator pi0 = HermitianOperator::identity(n);
  double min_error = 0.0;
  std::vector<double> eta;
  std::vector<std::size_t> w1;
  if (p.priors.h1() > 0.0) {
    const HelstromSolution s = helstrom_binary(p.rho0, p.rho1, p.priors);
    pi1 = s.pi1;
    pi0 = s.pi0;
    min_error = s.min_error;
    eta.assign(s.eigen.values.data(), s.eigen.values.data() + s.eigen.values.size());
    w1 = s.w1_indices;
  }

  std::ostringstream os;
  os << "min_error " << format_double(min_error) << "\n";
  os << "eigenvalues";
  for (double e : eta) os << ' ' << format_double(e);
  os << "\nw1_indices";
  for (std::size_t m : w1) os << ' ' << m;
  os << "\n";
  io.out << os.str();

  const double completeness =
      max_abs(pi0.matrix() + pi1.matrix() - ComplexMatrix::Identity(n, n));
  const double overlap = (pi1.matrix() * pi0.matrix()).cwiseAbs().maxCoeff();
  if (!a.emit.empty()) {
    ojson j;
    j["schema"] = 1;
    j["min_error"] = min_error;
    j["pi0"] = matrix_json(pi0.matrix());
    j["pi1"] = matrix_json(pi1.matrix());
    write_text(a.emit, dump(j), io.out);
  }
  if (completeness > tol::kCompleteness || overlap > 1e-10) {
    io.err << "helstrom: projector check failed (completeness " << format_double(completeness)
           << ", overlap " << format_double(overlap) << ")\n";
    return kExitResidual;
  }
  return kExitOk;
}

// --- qdoc -----------------------------------------------------------------

struct QdocArgs {
  std::string problem;
  std::string rule = "lrt";
  std::vector<std::string> povm{"canonical"};
  std::string out;
};

int cmd_qdoc(const QdocArgs& a, Io io) {
  const Problem p = load_problem(a.problem);
  const std::string& kind = a.povm.front();
  std::optional<Povm> povm;
  if (kind == "helstrom") {
    if (a.povm.size() != 1) throw CLI::ValidationError("--povm helstrom takes no path");
    povm = helstrom_rank_one(p.rho0, p.rho1, p.priors).povm;
  } else if (kind == "canonical") {
    if (a.povm.size() != 1) throw CLI::ValidationError("--povm canonical takes no path");
    povm = Povm::canonical(p.dimension);
  } else if (kind == "file") {
    if (a.povm.size() != 2) throw CLI::ValidationError("--povm file needs a PATH");
    povm = Povm(load_operator_set(a.povm[1]).elements);
  } else {
    throw CLI::ValidationError("--povm must be helstrom, canonical or file PATH");
  }
  const DecisionRule rule = a.rule == "svt" ? DecisionRule::kSvt : DecisionRule::kLrt;
  const OperatingCharacteristic curve = qdoc(p.rho0, p.rho1, *povm, rule);
  write_text(a.out, curve_csv(curve, "param"), io.out);
  if (rule == DecisionRule::kLrt) {
    const double slack = min_chord_slack(curve);
    if (slack < -kConcavityTol) {
      io.err << "qdoc: LRT curve not concave (chord slack " << format_double(slack) << ")\n";
      return kExitResidual;
    }
  }
  return kExitOk;
}

// --- qmoc -----------------------------------------------------------------

struct QmocArgs {
  std::string problem;
  std::size_t samples = 720;
  std::string out;
  std::string ellipse_out;
};

const char* conic_name(ConicKind k) {
  switch (k) {
    case ConicKind::kEllipse: return "ellipse";
    case ConicKind::kSegment: return "segment";
    case ConicKind::kPoint: return "point";
  }
  return "unknown";
}

int cmd_qmoc(const QmocArgs& a, Io io) {
  const Problem p = load_problem(a.problem);
  const QubitDiscriminationSetup setup =
      p.qubit_setup ? *p.qubit_setup : reduce_to_qubit(p.rho0, p.rho1);
  const std::vector<double> thetas = uniform_angles(a.samples);
  write_text(a.out, curve_csv(qmoc_qubit(setup, thetas), "theta"), io.out);

  const EllipseParams params = qmoc_ellipse_params(setup);
  bool failed = false;
  ojson j;
  j["schema"] = 1;
  j["alpha"] = setup.alpha();
  j["a0"] = setup.a0();
  j["a1"] = setup.a1();
  j["b0"] = setup.b0();
  j["b1"] = setup.b1();
  j["beta"] = params.beta;
  j["q"] = params.q;
  j["r"] = params.r;
  j["kind"] = conic_name(params.kind);
  j["degenerate"] = params.degenerate();
  if (!params.degenerate()) {
    const EllipseCheck chk = verify_ellipse(setup, params, a.samples);
    j["eccentricity"] = params.eccentricity();
    j["max_residual"] = chk.max_residual;
    j["discriminant"] = chk.discriminant;
    j["inside_rectangle"] = chk.inside_rectangle;
    failed = !(chk.max_residual <= kEllipseResidualTol) || !(chk.discriminant < 0.0) ||
             !chk.inside_rectangle;
    if (failed) {
      io.err << "qmoc: ellipse check failed (residual " << format_double(chk.max_residual)
             << ", discriminant " << format_double(chk.discriminant) << ")\n";
    }
  } else {
    j["eccentricity"] = nullptr;
    j["max_residual"] = nullptr;
    j["discriminant"] = nullptr;
    j["inside_rectangle"] = nullptr;
  }
  if (!a.ellipse_out.empty()) write_text(a.ellipse_out, dump(j), io.out);
  return failed ? kExitResidual : kExitOk;
}

// --- sweep-priors ---------------------------------------------------------

struct SweepArgs {
  std::string problem;
  std::size_t grid = 1001;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, Io io) {
  const Problem p = load_problem(a.problem);
  const std::vector<double> grid = uniform_prior_grid(a.grid);
  const PriorSweep sweep = prior_sweep(p.rho0, p.rho1, grid);
  write_text(a.out, sweep_csv(sweep), io.out);
  if (!a.out.empty() && a.out != "-") io.out << "segments " << sweep.segment_count() << "\n";
  for (const OperatingPoint& pt : sweep.curve.points) {
    if (pt.pd < pt.pf - kChanceTol) {
      io.err << "sweep-priors: point below chance at p_h1 = " << format_double(pt.param.value)
             << "\n";
      return kExitResidual;
    }
  }
  return kExitOk;
}

// --- frames ---------------------------------------------------------------

struct FramesArgs {
  std::string input;
  std::string k = "rank";
  std::string seed_basis = "canonical";
  std::uint64_t rng_seed = 0;
  std::vector<std::size_t> region;
  bool region_given = false;
  std::string out;
};

int cmd_frames(const FramesArgs& a, Io io) {
  std::vector<HermitianOperator> elements;
  std::optional<DensityOperator> rho0;
  std::optional<DensityOperator> rho1;
  bool binary = false;
  if (looks_like_problem(a.input)) {
    const Problem p = load_problem(a.input);
    const HelstromSolution s = helstrom_binary(p.rho0, p.rho1, p.priors);
    elements = {s.pi0, s.pi1};
    rho0 = p.rho0;
    rho1 = p.rho1;
    binary = true;
  } else {
    OperatorSet set = load_operator_set(a.input);
    elements = std::move(set.elements);
    rho0 = std::move(set.rho0);
    rho1 = std::move(set.rho1);
    binary = set.binary;
  }
  const Povm source(elements);
  const std::size_t m_count = source.size();

  const std::vector<FrameCountSpec> specs = parse_frame_counts(a.k);
  if (specs.size() != 1 && specs.size() != m_count) {
    throw Error(ErrorCode::kDimensionMismatch, "--k lists " + std::to_string(specs.size()) +
                                                   " counts for " + std::to_string(m_count) +
                                                   " elements");
  }
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> counts;
  for (std::size_t m = 0; m < m_count; ++m) {
    ranks.push_back(static_cast<std::size_t>(numerical_rank(source[m])));
    counts.push_back((specs.size() == 1 ? specs.front() : specs[m]).resolve(ranks.back()));
  }
  for (std::size_t m = 0; m < m_count; ++m) {
    if (counts[m] < ranks[m]) {
      ojson j;
      j["schema"] = 1;
      j["status"] = "error";
      j["reason"] = "K < rank(E)";
      j["element"] = m;
      j["k"] = counts[m];
      j["rank"] = ranks[m];
      j["message"] = "element " + std::to_string(m) + " has rank " + std::to_string(ranks[m]) +
                     " and cannot be resolved by " + std::to_string(counts[m]) + " vectors";
      write_text(a.out, dump(j), io.out);
      return kExitPrecondition;
    }
  }

  const SeedBasis seed = SeedBasis::parse(a.seed_basis, a.rng_seed);
  const SeedBasis seeds[] = {seed};
  const FrameExpansion ex = expand_povm(source, counts, seeds);

  std::vector<std::size_t> base = a.region;
  if (!a.region_given) base = binary || m_count == 2 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{};
  const DecisionRegion region(m_count, base);
  const MeasurementSystem original{source, region};
  const MeasurementSystem expanded = build_equivalent_system(ex, region);

  double worst = 0.0;
  ojson els = ojson::array();
  for (std::size_t m = 0; m < m_count; ++m) {
    const ElementExpansion& e = ex.elements[m];
    const double res = resolution_residual(e.vectors, source[m]);
    const double gram = e.gram_residual();
    worst = std::max({worst, res, gram});
    ojson el;
    el["index"] = m;
    el["rank"] = ranks[m];
    el["k"] = counts[m];
    el["eigenvalues"] = std::vector<double>(e.lambdas.data(), e.lambdas.data() + e.lambdas.size());
    el["coefficients"] = matrix_json(e.coefficients);
    el["vectors"] = columns_json(e.vectors);
    el["resolution_residual"] = res;
    el["gram_residual"] = gram;
    els.push_back(std::move(el));
  }
  const double parseval = resolution_residual(ex.pooled_vectors(), HermitianOperator::identity(source.dim()));
  const double grouping = grouping_residual(original, expanded);
  worst = std::max({worst, parseval, grouping});
  double deviation = std::numeric_limits<double>::quiet_NaN();
  if (rho0 && rho1) {
    deviation = verify_equivalence(original, expanded, *rho0, *rho1);
    worst = std::max(worst, deviation);
  }

  ojson j;
  j["schema"] = 1;
  j["status"] = worst <= tol::kFrame ? "ok" : "residual";
  j["seed_basis"] = seed.name();
  j["rng_seed"] = a.rng_seed;
  j["dimension"] = source.dim();
  j["elements"] = std::move(els);
  j["grouping"] = ex.grouping;
  j["region"] = region.indices();
  j["expanded_region"] = expanded.region.indices();
  j["expanded_outcomes"] = ex.expanded.size();
  j["is_standard"] = is_standard(ex.expanded);
  j["is_rank_one"] = is_rank_one(ex.expanded);
  j["parseval_residual"] = parseval;
  j["grouping_residual"] = grouping;
  j["equivalence_deviation"] = number_or_null(deviation);
  write_text(a.out, dump(j), io.out);
  if (worst > tol::kFrame) {
    io.err << "frames: residual " << format_double(worst) << " exceeds " << format_double(tol::kFrame)
           << "\n";
    return kExitResidual;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary quantum hypothesis testing: Helstrom measurements, operating "
               "characteristics and Parseval-frame expansions."};
  app.name("qoc");
  app.require_subcommand(1);

  HelstromArgs ha;
  auto* helstrom = app.add_subcommand("helstrom", "Minimum-error measurement for a problem file");
  helstrom->add_option("problem", ha.problem, "Problem JSON")->required();
  helstrom->add_option("--emit-operators", ha.emit, "Write Pi0/Pi1 as JSON to PATH");

  QdocArgs qa;
  auto* qdoc_cmd = app.add_subcommand("qdoc", "Operating characteristic of a fixed POVM");
  qdoc_cmd->add_option("problem", qa.problem, "Problem JSON")->required();
  qdoc_cmd->add_option("--rule", qa.rule, "Decision rule")->check(CLI::IsMember({"svt", "lrt"}));
  qdoc_cmd->add_option("--povm", qa.povm, "helstrom | canonical | file PATH")->expected(1, 2);
  qdoc_cmd->add_option("--out", qa.out, "CSV output (default stdout)");

  QmocArgs ma;
  auto* qmoc_cmd = app.add_subcommand("qmoc", "Qubit measurement characteristic and its ellipse");
  qmoc_cmd->add_option("problem", ma.problem, "Problem JSON")->required();
  qmoc_cmd->add_option("--samples", ma.samples, "Angles over [0, 2pi)")->check(CLI::PositiveNumber);
  qmoc_cmd->add_option("--out", ma.out, "CSV output (default stdout)");
  qmoc_cmd->add_option("--ellipse-out", ma.ellipse_out, "Ellipse parameters JSON");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep-priors", "Optimal operating point per prior");
  sweep->add_option("problem", sa.problem, "Problem JSON")->required();
  sweep->add_option("--grid", sa.grid, "Uniform grid size over [0, 1], endpoints included")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  sweep->add_option("--out", sa.out, "CSV output (default stdout)");

  FramesArgs fa;
  auto* frames = app.add_subcommand("frames", "Parseval-frame expansion of a POVM");
  frames->add_option("input", fa.input, "Problem JSON or operator JSON")->required();
  frames->add_option("--k", fa.k, "Frame sizes: N, rank or rank+N; one value or one per element");
  frames->add_option("--seed-basis", fa.seed_basis, "canonical | dft | haar");
  frames->add_option("--rng-seed", fa.rng_seed, "Seed for the haar basis");
  auto* region_opt =
      frames->add_option("--region", fa.region, "Source outcomes deciding '1'")->delimiter(',');
  frames->add_option("--out", fa.out, "JSON output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  fa.region_given = region_opt->count() > 0;

  const Io io{out, err};
  try {
    if (*helstrom) return cmd_helstrom(ha, io);
    if (*qdoc_cmd) return cmd_qdoc(qa, io);
    if (*qmoc_cmd) return cmd_qmoc(ma, io);
    if (*sweep) return cmd_sweep(sa, io);
    if (*frames) return cmd_frames(fa, io);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const nlohmann::json::exception& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qoc::cli
