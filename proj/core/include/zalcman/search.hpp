#pragma once

#include <cstdint>
#include <vector>

#include "zalcman/functionals.hpp"
#include "zalcman/loewner.hpp"

namespace zalcman {

struct SearchOptions {
  int K = 4;                  ///< phases per driving function
  int starts = 16;            ///< random starts; one extra constant-driving start is always added
  std::uint64_t seed = 1;
  int N = 0;                  ///< coefficient order; <= 0 selects max(4, n + m - 1)
  double dt = 2e-3;           ///< Loewner step inside the search
  double horizon = 4.0;       ///< driving horizon; pieces are equispaced on [0, horizon]
  int max_evals = 600;        ///< objective evaluations per start
  double initial_step = 0.6;  ///< initial simplex size in radians
  double size_tol = 1e-7;     ///< simplex size at which a start counts as converged
  double red_flag_margin = 0.05;
  int threads = 0;            ///< <= 0 selects hardware concurrency
};

struct SearchResult {
  double best_value = 0.0;
  DrivingFunction best_driving = DrivingFunction::constant(0.0, 1.0);
  CoefficientVector best_coeffs = CoefficientVector(std::vector<Complex>{1.0});
  ZalcmanSpec spec;
  int starts = 0;        ///< starts actually run (random + constant)
  int converged = 0;     ///< starts whose simplex shrank below size_tol
  long evals = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;    ///< zalcman_bound(spec)
  bool red_flag = false; ///< best_value > bound + red_flag_margin
};

/// |lambda a_n a_m - a_{n+m-1}| of the map generated by `driving`. By rotation
/// invariance this is also the supremum of the real part over rotations.
double objective(const DrivingFunction& driving, const ZalcmanSpec& spec, int N, double dt);

/// Multistart Nelder-Mead over the K phases, maximizing the objective.
/// Start 0 is the constant driving; starts 1..starts are random with
/// per-start seeds derived from `seed`, so the result does not depend on
/// the thread count. Throws SearchError if every start fails.
SearchResult optimize(const ZalcmanSpec& spec, const SearchOptions& options = {});

struct SweepRow {
  double lambda;
  double empirical_max;
  double conjectured_bound;
  double gap;  ///< conjectured_bound - empirical_max; negative gaps are reported, not clamped
};

/// One optimize() per lambda, rows sorted by lambda.
std::vector<SweepRow> lambda_sweep(int n, int m, std::vector<double> lambdas,
                                   const SearchOptions& options = {});

/// splitmix64 step; derives independent per-start seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace zalcman
