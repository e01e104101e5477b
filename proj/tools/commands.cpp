#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zalcman/errors.hpp"
#include "zalcman/extremal_algebra.hpp"
#include "zalcman/families.hpp"
#include "zalcman/functionals.hpp"
#include "zalcman/quad_diff.hpp"
#include "zalcman/schiffer.hpp"
#include "zalcman/search.hpp"

namespace zalcman::cli {

namespace {

ordered_json complex_json(Complex z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

ordered_json driving_json(const DrivingFunction& d) {
  return ordered_json{{"phases", d.phases()}, {"breakpoints", d.breakpoints()}};
}

ordered_json coeffs_json(const CoefficientVector& f) {
  ordered_json arr = ordered_json::array();
  for (const Complex& a : f.coeffs()) arr.push_back(complex_json(a));
  return arr;
}

std::string optional_path(const std::optional<std::filesystem::path>& p) {
  return p ? p->string() : std::string{};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SearchOptions search_options(int K, int starts, std::uint64_t seed, double dt, double horizon,
                             int max_evals, int threads) {
  SearchOptions o;
  o.K = K;
  o.starts = starts;
  o.seed = seed;
  o.dt = dt;
  o.horizon = horizon;
  o.max_evals = max_evals;
  o.threads = threads;
  return o;
}

}  // namespace

ordered_json run_eval(const EvalConfig& config, std::vector<std::string>& warnings) {
  const ZalcmanSpec spec{config.lambda, config.n, config.m};
  spec.validate();
  const CoefficientVector f = koebe_rotation(config.theta, std::max(2, spec.required_order()));
  const Complex value = zalcman_value(f, spec);
  const double modulus = std::abs(value);
  const double bound = zalcman_bound(spec);
  const LambdaThresholds thresholds = lambda_thresholds(spec.n, spec.m);
  const bool attained = bound >= 0.0 && std::abs(modulus - bound) <= 1e-10 * std::max(1.0, bound);
  if (config.lambda < thresholds.low) {
    warnings.push_back("lambda below (n+m-1)/(nm) = " + std::to_string(thresholds.low) +
                       ": the conjectured bound is negative");
  }
  return ordered_json{
      {"command", "eval"},
      {"config",
       {{"theta", config.theta}, {"lambda", config.lambda}, {"n", config.n}, {"m", config.m}}},
      {"value", complex_json(value)},
      {"modulus", modulus},
      {"bound", bound},
      {"attained", attained},
      {"thresholds", {{"low", thresholds.low}, {"mono", thresholds.mono}}},
      {"warnings", warnings},
  };
}

ordered_json run_schiffer(const SchifferConfig& config, std::vector<std::string>& warnings) {
  const CoefficientVector original = koebe_rotation(config.theta, 4);
  const double literal_symmetry =
      check_reciprocal_symmetry(rhs_polynomial(config.lambda, original));
  const RotatedCoefficients frame = rotate_to_real_functional(config.lambda, original);
  if (frame.psi != 0.0) {
    warnings.push_back("functional not real for this rotation; rotated by psi = " +
                       std::to_string(frame.psi) + " before building the extremal equation");
  }
  const CoefficientVector& f = frame.f;
  const LaurentPoly g = rhs_polynomial(config.lambda, f);
  const auto data = schaeffer_spencer(gradient(config.lambda, f).as_list(), f, 4);

  ordered_json doc{
      {"command", "schiffer"},
      {"config", {{"theta", config.theta}, {"lambda", config.lambda}}},
      {"rotationPsi", frame.psi},
      {"coefficients", coeffs_json(f)},
      {"P", complex_json(g.coeff(-2))},
      {"Q", complex_json(g.coeff(-1))},
      {"R", complex_json(g.coeff(0))},
      {"S", complex_json(g.coeff(1))},
      {"T", complex_json(g.coeff(2))},
      {"symmetryResidual", check_reciprocal_symmetry(g)},
      {"literalSymmetryResidual", literal_symmetry},
      {"schaefferSpencer",
       {{"A", {complex_json(data.a_coeff(2)), complex_json(data.a_coeff(3)),
               complex_json(data.a_coeff(4))}},
        {"Bv", {complex_json(data.b_coeff(1)), complex_json(data.b_coeff(2)),
                complex_json(data.b_coeff(3))}},
        {"B", complex_json(data.B)}}},
  };

  const DoubleRootOutcome outcome = double_root_fit(g);
  ordered_json roots = ordered_json::array();
  for (const Complex& r : outcome.roots) roots.push_back(complex_json(r));
  doc["numeratorRoots"] = roots;
  doc["doubleZeroFound"] = outcome.fit.has_value();
  if (!outcome.fit) {
    warnings.push_back("no unimodular double zero: " + outcome.reason);
    doc["doubleZeroReason"] = outcome.reason;
    doc["E"] = nullptr;
    doc["EOriginalFrame"] = nullptr;
    doc["quarticQ"] = nullptr;
    doc["doubleZeroResidual"] = outcome.best_residual;
    doc["matchingResiduals"] = nullptr;
    doc["relationResiduals"] = nullptr;
  } else {
    const FactorizedG& fac = *outcome.fit;
    const auto matching = matching_residuals(fac, f, config.lambda);
    const auto relations = relation_check(fac);
    doc["doubleZeroReason"] = "";
    doc["E"] = complex_json(fac.E);
    doc["EOriginalFrame"] = complex_json(std::polar(1.0, frame.psi) * fac.E);
    doc["quarticQ"] = {complex_json(fac.A()), complex_json(fac.B()), complex_json(fac.C()),
                       complex_json(fac.D())};
    doc["doubleZeroResidual"] = fac.residual;
    doc["matchingResiduals"] = matching;
    doc["relationResiduals"] = {{"d", relations.d}, {"c", relations.c}};
  }
  doc["warnings"] = warnings;
  return doc;
}

ordered_json run_gmax(const GmaxConfig& config, std::vector<std::string>& warnings) {
  const TwoStageMaximum best = maximize_two_stage();
  const GridMaximum grid = manifold_grid_max(config.grid, config.grid);
  const GridMaximum free = unconstrained_grid_max(config.diagnostic_grid, config.diagnostic_grid);
  if (free.value > best.g_max) {
    warnings.push_back("unconstrained G exceeds the manifold maximum (" + std::to_string(free.value) +
                       " > " + std::to_string(best.g_max) + "); the bound applies on the manifold only");
  }
  const auto critical = g_critical_points();
  ordered_json crit = ordered_json::array();
  for (const auto& c : critical) crit.push_back({{"R", c.R}, {"constraint", to_string(c.constraint)}});
  return ordered_json{
      {"command", "gmax"},
      {"config", {{"grid", config.grid}, {"diagnosticGrid", config.diagnostic_grid}}},
      {"gMax", best.g_max},
      {"bound", best.bound},
      {"criticalR", best.interior_R},
      {"interiorValue", best.interior_value},
      {"argmax", {{"R", best.argmax_R}, {"phi", best.argmax_phi}}},
      {"criticalPoints", crit},
      {"manifoldGridMax", {{"value", grid.value}, {"R", grid.R}, {"phi", grid.phi}}},
      {"unconstrainedDiagnostic",
       {{"value", free.value}, {"R", free.R}, {"theta", free.theta}, {"phi", free.phi}}},
      {"warnings", warnings},
  };
}

ordered_json run_qd(const QdConfig& config, std::vector<std::string>& warnings) {
  const QuadDiffT1 qd(Complex{config.a2re, config.a2im});  // throws HypothesisError
  const RealAxisReport axis = real_axis_report(qd);
  const Singularities sing = critical_points(qd);

  TraceOptions options;
  options.ds = config.ds;
  options.max_steps = config.max_steps;
  std::vector<TrajectoryPolyline> lines;
  lines.push_back(trace_from_pole(qd, options));
  const HalfPlaneVerdict gamma_verdict = half_plane_check(std::span(lines.data(), 1), 1e-3);

  // Critical trajectories from the zeros, drawn for context; not part of the verdict.
  ordered_json from_zeros = ordered_json::array();
  for (std::size_t zi = 0; zi < sing.zeros.size(); ++zi) {
    for (const Complex& dir : zero_directions(qd, sing.zeros[zi])) {
      TraceOptions zopts = options;
      zopts.initial_heading = dir;
      TrajectoryPolyline line = trace_trajectory(qd, sing.zeros[zi] + 0.5 * config.ds * dir, 1, zopts);
      line.points.insert(line.points.begin(), sing.zeros[zi]);
      const HalfPlaneVerdict v = half_plane_check(std::span(&line, 1), 1e-3);
      from_zeros.push_back({{"zero", zi},
                            {"direction", complex_json(dir)},
                            {"termination", to_string(line.termination)},
                            {"points", line.points.size()},
                            {"crossings", v.crossings}});
      lines.push_back(std::move(line));
    }
  }

  if (config.svg) {
    SvgAnnotations ann{{sing.zeros[0], sing.zeros[1]}, {sing.simple_pole}, axis.xi_star};
    emit_svg(lines, ann, *config.svg);
  }
  if (config.csv) write_polyline_csv(lines.front(), *config.csv);
  if (!gamma_verdict.verdict) {
    warnings.push_back("critical trajectory from the origin crosses the real axis");
  }

  const TrajectoryPolyline& gamma = lines.front();
  return ordered_json{
      {"command", "qd"},
      {"config",
       {{"a2re", config.a2re},
        {"a2im", config.a2im},
        {"ds", config.ds},
        {"maxSteps", config.max_steps},
        {"svg", optional_path(config.svg)},
        {"csv", optional_path(config.csv)}}},
      {"xiStar", axis.xi_star},
      {"reAtXiStar", axis.re_at_xi_star},
      {"reDirect", axis.re_direct},
      {"imSlopeCheck", axis.im_slope_check},
      {"imSignChanges", {{"positive", axis.im_sign_changes_pos}, {"negative", axis.im_sign_changes_neg}}},
      {"zeros", {complex_json(sing.zeros[0]), complex_json(sing.zeros[1])}},
      {"gamma",
       {{"points", gamma.points.size()},
        {"termination", to_string(gamma.termination)},
        {"end", complex_json(gamma.points.back())},
        {"defect", trajectory_defect(qd, gamma)}}},
      {"crossings", gamma_verdict.crossings},
      {"verdict", gamma_verdict.verdict},
      {"zeroTrajectories", from_zeros},
      {"warnings", warnings},
  };
}

ordered_json run_search(const SearchConfig& config, std::vector<std::string>& warnings) {
  const ZalcmanSpec spec{config.lambda, config.n, config.m};
  spec.validate();
  const SearchOptions options = search_options(config.K, config.starts, config.seed, config.dt,
                                               config.horizon, config.max_evals, config.threads);
  const SearchResult r = optimize(spec, options);
  if (r.red_flag) {
    warnings.push_back("RED FLAG: best value " + std::to_string(r.best_value) +
                       " exceeds the conjectured bound " + std::to_string(r.bound) + " by more than " +
                       std::to_string(options.red_flag_margin));
  }
  ordered_json doc{
      {"command", "search"},
      {"config",
       {{"lambda", config.lambda},
        {"n", config.n},
        {"m", config.m},
        {"K", config.K},
        {"starts", config.starts},
        {"seed", config.seed},
        {"dt", config.dt},
        {"horizon", config.horizon},
        {"maxEvals", config.max_evals},
        {"out", optional_path(config.out)}}},
      {"bestValue", r.best_value},
      {"bound", r.bound},
      {"redFlag", r.red_flag},
      {"bestDriving", driving_json(r.best_driving)},
      {"bestCoeffs", coeffs_json(r.best_coeffs)},
      {"startsRun", r.starts},
      {"converged", r.converged},
      {"evals", r.evals},
      {"warnings", warnings},
  };
  if (config.out) write_text(*config.out, doc.dump(2) + "\n");
  return doc;
}

ordered_json run_sweep(const SweepConfig& config, std::vector<std::string>& warnings) {
  const SearchOptions options = search_options(config.K, config.starts, config.seed, config.dt,
                                               config.horizon, config.max_evals, config.threads);
  const auto rows = lambda_sweep(config.n, config.m, config.lambdas, options);
  ordered_json table = ordered_json::array();
  std::ostringstream csv;
  csv << kSweepCsvHeader << '\n';
  char buf[128];
  for (const SweepRow& row : rows) {
    if (row.gap < 0.0) {
      warnings.push_back("negative gap at lambda = " + std::to_string(row.lambda) +
                         " (empirical max above the conjectured bound)");
    }
    table.push_back({{"lambda", row.lambda},
                     {"empiricalMax", row.empirical_max},
                     {"conjecturedBound", row.conjectured_bound},
                     {"gap", row.gap}});
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.lambda, row.empirical_max,
                  row.conjectured_bound, row.gap);
    csv << buf;
  }
  if (config.out) write_text(*config.out, csv.str());
  return ordered_json{
      {"command", "sweep"},
      {"config",
       {{"n", config.n},
        {"m", config.m},
        {"lambdas", config.lambdas},
        {"K", config.K},
        {"starts", config.starts},
        {"seed", config.seed},
        {"dt", config.dt},
        {"horizon", config.horizon},
        {"maxEvals", config.max_evals},
        {"out", optional_path(config.out)}}},
      {"rows", table},
      {"warnings", warnings},
  };
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("lambda grid: cannot parse '" + item + "'");
    }
    if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) {
      throw DomainError("lambda grid: trailing characters in '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw DomainError("lambda grid: no values");
  return out;
}

}  // namespace zalcman::cli
