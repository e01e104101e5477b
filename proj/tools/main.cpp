// zalcman: command-line front end for the generalized Zalcman laboratory.
//
// Exit codes: 0 success, 1 computation error, 2 usage or hypothesis error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "zalcman/errors.hpp"

namespace {

constexpr int kComputationError = 1;
constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace zalcman::cli;

  CLI::App app{"Generalized Zalcman functionals on univalent functions"};
  app.require_subcommand(1);

  EvalConfig eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the functional on a Koebe rotation");
  eval_cmd->add_option("--theta", eval.theta, "rotation angle (radians)");
  eval_cmd->add_option("--lambda", eval.lambda, "lambda > 0");
  eval_cmd->add_option("--n", eval.n, "index n >= 2");
  eval_cmd->add_option("--m", eval.m, "index m >= 2");

  SchifferConfig schiffer;
  auto* schiffer_cmd =
      app.add_subcommand("schiffer", "Extremal-equation data and double-zero factorization");
  schiffer_cmd->add_option("--theta", schiffer.theta, "Koebe rotation angle (radians)");
  schiffer_cmd->add_option("--lambda", schiffer.lambda, "lambda");

  GmaxConfig gmax;
  auto* gmax_cmd = app.add_subcommand("gmax", "Maximize G(R, theta, phi) on the extremal manifold");
  gmax_cmd->add_option("--grid", gmax.grid, "manifold grid size per axis")->check(CLI::PositiveNumber);
  gmax_cmd->add_option("--diagnostic-grid", gmax.diagnostic_grid,
                       "unconstrained diagnostic grid size per axis")
      ->check(CLI::PositiveNumber);

  QdConfig qd;
  std::string qd_svg, qd_csv;
  auto* qd_cmd = app.add_subcommand("qd", "Quadratic-differential diagnostics for lambda = 2");
  qd_cmd->add_option("--a2re", qd.a2re, "Re a_2 (> 0)");
  qd_cmd->add_option("--a2im", qd.a2im, "Im a_2 (!= 0)");
  qd_cmd->add_option("--ds", qd.ds, "trajectory step")->check(CLI::PositiveNumber);
  qd_cmd->add_option("--max-steps", qd.max_steps, "trajectory step limit")->check(CLI::PositiveNumber);
  qd_cmd->add_option("--svg", qd_svg, "SVG output path");
  qd_cmd->add_option("--csv", qd_csv, "CSV polyline output path");

  SearchConfig search;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "Multistart Loewner search for the maximum");
  search_cmd->add_option("--lambda", search.lambda, "lambda > 0");
  search_cmd->add_option("--n", search.n, "index n >= 2");
  search_cmd->add_option("--m", search.m, "index m >= 2");
  search_cmd->add_option("--K", search.K, "phases per driving function")->check(CLI::PositiveNumber);
  search_cmd->add_option("--starts", search.starts, "random starts")->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search.seed, "seed");
  search_cmd->add_option("--dt", search.dt, "Loewner step")->check(CLI::PositiveNumber);
  search_cmd->add_option("--horizon", search.horizon, "driving horizon")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-evals", search.max_evals, "evaluations per start")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", search.threads, "worker threads (0 = hardware)");
  search_cmd->add_option("--out", search_out, "results JSON path");

  SweepConfig sweep;
  std::string sweep_grid = "1.5,2,2.5,3";
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Empirical maximum versus conjectured bound over lambda");
  sweep_cmd->add_option("--n", sweep.n, "index n >= 2");
  sweep_cmd->add_option("--m", sweep.m, "index m >= 2");
  sweep_cmd->add_option("--lambda-grid", sweep_grid, "comma-separated lambda values");
  sweep_cmd->add_option("--K", sweep.K, "phases per driving function")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--starts", sweep.starts, "random starts per lambda")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "seed");
  sweep_cmd->add_option("--dt", sweep.dt, "Loewner step")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--horizon", sweep.horizon, "driving horizon")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-evals", sweep.max_evals, "evaluations per start")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--out", sweep_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  std::vector<std::string> warnings;
  try {
    ordered_json doc;
    if (*eval_cmd) {
      doc = run_eval(eval, warnings);
    } else if (*schiffer_cmd) {
      doc = run_schiffer(schiffer, warnings);
    } else if (*gmax_cmd) {
      doc = run_gmax(gmax, warnings);
    } else if (*qd_cmd) {
      if (!qd_svg.empty()) qd.svg = qd_svg;
      if (!qd_csv.empty()) qd.csv = qd_csv;
      doc = run_qd(qd, warnings);
    } else if (*search_cmd) {
      if (!search_out.empty()) search.out = search_out;
      doc = run_search(search, warnings);
    } else if (*sweep_cmd) {
      sweep.lambdas = parse_lambda_grid(sweep_grid);
      if (!sweep_out.empty()) sweep.out = sweep_out;
      doc = run_sweep(sweep, warnings);
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    std::cout << doc.dump(2) << '\n';
  } catch (const zalcman::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return 0;
}
