#include "zalcman/search.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "zalcman/errors.hpp"

namespace zalcman {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double objective(const DrivingFunction& driving, const ZalcmanSpec& spec, int N, double dt) {
  spec.validate();
  if (N < spec.required_order()) throw DomainError("objective: N below n + m - 1");
  return std::abs(zalcman_value(evolve(driving, N, dt), spec));
}

namespace {

struct StartOutcome {
  bool ok = false;
  double value = 0.0;
  std::vector<double> phases;
  long evals = 0;
  bool converged = false;
};

struct ObjectiveContext {
  const DrivingFunction* shape;
  const ZalcmanSpec* spec;
  int N;
  double dt;
  long evals = 0;
};

double negated_objective(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<ObjectiveContext*>(params);
  std::vector<double> phases(x->size);
  for (std::size_t i = 0; i < x->size; ++i) phases[i] = gsl_vector_get(x, i);
  ++ctx->evals;
  try {
    return -objective(ctx->shape->with_phases(std::move(phases)), *ctx->spec, ctx->N, ctx->dt);
  } catch (const HorizonError&) {
    return GSL_POSINF;
  }
}

struct GslVectorDeleter {
  void operator()(gsl_vector* v) const noexcept { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const noexcept { gsl_multimin_fminimizer_free(m); }
};

StartOutcome run_start(const DrivingFunction& init, const ZalcmanSpec& spec, int N,
                       const SearchOptions& options) {
  StartOutcome out;
  ObjectiveContext ctx{&init, &spec, N, options.dt};
  const std::size_t dim = static_cast<std::size_t>(init.pieces());

  std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_vector, GslVectorDeleter> step(gsl_vector_alloc(dim));
  for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x.get(), i, init.phases()[i]);
  gsl_vector_set_all(step.get(), options.initial_step);

  gsl_multimin_function fn{&negated_objective, dim, &ctx};
  std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));
  if (gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), step.get()) != GSL_SUCCESS) {
    out.evals = ctx.evals;
    return out;
  }
  while (ctx.evals < options.max_evals) {
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer.get());
    if (gsl_multimin_test_size(size, options.size_tol) == GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  const double best = -gsl_multimin_fminimizer_minimum(minimizer.get());
  out.evals = ctx.evals;
  if (!std::isfinite(best)) return out;
  const gsl_vector* xbest = gsl_multimin_fminimizer_x(minimizer.get());
  out.phases.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.phases[i] = gsl_vector_get(xbest, i);
  out.value = best;
  out.ok = true;
  return out;
}

}  // namespace

SearchResult optimize(const ZalcmanSpec& spec, const SearchOptions& options) {
  spec.validate();
  if (options.starts < 1) throw DomainError("optimize: starts must be >= 1");
  if (options.K < 1) throw DomainError("optimize: K must be >= 1");
  const int N = options.N > 0 ? options.N : std::max(4, spec.required_order());
  if (N < spec.required_order()) throw DomainError("optimize: N below n + m - 1");

  gsl_set_error_handler_off();

  // Start 0: constant driving (Koebe) expressed on the same K pieces.
  const DrivingFunction shape = random_driving(options.K, options.horizon, options.seed);
  std::vector<DrivingFunction> inits;
  inits.push_back(shape.with_phases(std::vector<double>(static_cast<std::size_t>(options.K), 0.0)));
  for (int s = 1; s <= options.starts; ++s) {
    inits.push_back(random_driving(options.K, options.horizon, derive_seed(options.seed, s)));
  }

  std::vector<StartOutcome> outcomes(inits.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(options.threads > 0 ? static_cast<unsigned>(options.threads) : hw,
                         static_cast<unsigned>(inits.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inits.size(); i = next++) {
      outcomes[i] = run_start(inits[i], spec, N, options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchResult result;
  result.spec = spec;
  result.seed = options.seed;
  result.starts = static_cast<int>(inits.size());
  result.bound = zalcman_bound(spec);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    result.evals += outcomes[i].evals;
    if (outcomes[i].converged) ++result.converged;
    if (!outcomes[i].ok) continue;
    // Ties resolve to the lowest start index, independent of scheduling.
    if (!best || outcomes[i].value > outcomes[*best].value) best = i;
  }
  if (!best) {
    throw SearchError("optimize: all " + std::to_string(inits.size()) +
                      " starts failed (every evaluation hit the horizon check)");
  }
  result.best_driving = inits[*best].with_phases(outcomes[*best].phases);
  result.best_coeffs = evolve(result.best_driving, N, options.dt);
  result.best_value = std::abs(zalcman_value(result.best_coeffs, spec));
  result.red_flag = result.best_value > result.bound + options.red_flag_margin;
  return result;
}

std::vector<SweepRow> lambda_sweep(int n, int m, std::vector<double> lambdas,
                                   const SearchOptions& options) {
  if (lambdas.empty()) throw DomainError("lambda_sweep: no lambda values");
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    const ZalcmanSpec spec{lambda, n, m};
    const SearchResult r = optimize(spec, options);
    const double bound = zalcman_bound(spec);
    rows.push_back({lambda, r.best_value, bound, bound - r.best_value});
  }
  return rows;
}

}  // namespace zalcman
