#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace zalcman::cli {

using nlohmann::ordered_json;

struct EvalConfig {
  double theta = 0.0;
  double lambda = 3.0;
  int n = 2;
  int m = 3;
};

struct SchifferConfig {
  double theta = 0.0;
  double lambda = 3.0;
};

struct GmaxConfig {
  int grid = 2000;
  int diagnostic_grid = 120;
};

struct QdConfig {
  double a2re = 1.0;
  double a2im = 1.0;
  double ds = 1e-3;
  int max_steps = 1'000'000;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> csv;
};

struct SearchConfig {
  double lambda = 3.0;
  int n = 2;
  int m = 3;
  int K = 4;
  int starts = 16;
  std::uint64_t seed = 1;
  double dt = 2e-3;
  double horizon = 4.0;
  int max_evals = 600;
  int threads = 0;
  std::optional<std::filesystem::path> out;
};

struct SweepConfig {
  int n = 2;
  int m = 3;
  std::vector<double> lambdas{1.5, 2.0, 2.5, 3.0};
  int K = 4;
  int starts = 8;
  std::uint64_t seed = 1;
  double dt = 2e-3;
  double horizon = 4.0;
  int max_evals = 600;
  int threads = 0;
  std::optional<std::filesystem::path> out;
};

/// Every command returns its JSON document; `warnings` collects messages the
/// caller should echo to stderr. Domain and hypothesis violations throw
/// zalcman::DomainError (exit code 2); other failures exit with 1.
ordered_json run_eval(const EvalConfig& config, std::vector<std::string>& warnings);
ordered_json run_schiffer(const SchifferConfig& config, std::vector<std::string>& warnings);
ordered_json run_gmax(const GmaxConfig& config, std::vector<std::string>& warnings);
ordered_json run_qd(const QdConfig& config, std::vector<std::string>& warnings);
ordered_json run_search(const SearchConfig& config, std::vector<std::string>& warnings);
ordered_json run_sweep(const SweepConfig& config, std::vector<std::string>& warnings);

/// Fixed CSV header of the sweep table.
inline constexpr const char* kSweepCsvHeader = "lambda,empirical_max,conjectured_bound,gap";

/// Parses "1.5,2,2.5" into doubles; throws DomainError on malformed input.
std::vector<double> parse_lambda_grid(const std::string& text);

}  // namespace zalcman::cli
