#include "zalcman/loewner.hpp"

#include <algorithm>
#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "zalcman/errors.hpp"
#include "zalcman/power_series.hpp"

namespace zalcman {

DrivingFunction::DrivingFunction(std::vector<double> phases, std::vector<double> breakpoints)
    : phases_(std::move(phases)), breakpoints_(std::move(breakpoints)) {
  if (phases_.empty()) throw DomainError("DrivingFunction: need at least one phase");
  if (breakpoints_.size() != phases_.size() + 1) {
    throw DomainError("DrivingFunction: breakpoints must number phases + 1");
  }
  if (breakpoints_.front() != 0.0) throw DomainError("DrivingFunction: first breakpoint must be 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw DomainError("DrivingFunction: breakpoints must increase strictly");
    }
  }
}

DrivingFunction DrivingFunction::constant(double phase, double horizon) {
  return DrivingFunction({phase}, {0.0, horizon});
}

DrivingFunction DrivingFunction::rotated(double delta) const {
  std::vector<double> shifted = phases_;
  for (auto& p : shifted) p += delta;
  return DrivingFunction(std::move(shifted), breakpoints_);
}

DrivingFunction DrivingFunction::with_phases(std::vector<double> phases) const {
  return DrivingFunction(std::move(phases), breakpoints_);
}

DrivingFunction random_driving(int K, double T, std::uint64_t seed) {
  if (K < 1) throw DomainError("random_driving: K must be >= 1");
  if (!(T > 0.0)) throw DomainError("random_driving: T must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::vector<double> phases(static_cast<std::size_t>(K));
  for (auto& p : phases) p = phase(rng);
  std::vector<double> breaks(static_cast<std::size_t>(K) + 1);
  for (int j = 0; j <= K; ++j) breaks[j] = T * j / K;
  breaks.back() = T;
  return DrivingFunction(std::move(phases), std::move(breaks));
}

namespace {

using State = std::vector<Complex>;

/// Right-hand side of the coefficient ODE for a fixed driving value.
struct LoewnerRhs {
  Complex kappa;
  int order;

  void operator()(const State& h, State& dhdt, double t) const {
    const TruncatedSeries series(h);
    TruncatedSeries power = series;  // h^{k+1} in the loop
    std::fill(dhdt.begin(), dhdt.end(), Complex{});
    // Terms with k >= order start beyond z^order.
    Complex weight = 2.0 * kappa * std::exp(-t);  // 2 (-1)^{k+1} k^k e^{-kt}
    const Complex factor = -kappa * std::exp(-t);
    for (int k = 1; k < order; ++k) {
      power = multiply(power, series);
      const auto pc = power.coeffs();
      for (int d = k + 1; d <= order; ++d) dhdt[d - 1] += weight * pc[d - 1];
      weight *= factor;
    }
  }
};

/// f = h / (1 - k e^{-t} h)^2 = sum_j j (k e^{-t})^{j-1} h^j.
TruncatedSeries close_tail(const State& h, Complex kappa, double t) {
  const TruncatedSeries series(h);
  const int order = series.order();
  TruncatedSeries total = series;
  TruncatedSeries power = series;
  const Complex q = kappa * std::exp(-t);
  Complex scale = 1.0;
  for (int j = 2; j <= order; ++j) {
    power = multiply(power, series);
    scale *= q;
    TruncatedSeries term = power;
    term *= static_cast<double>(j) * scale;
    total += term;
  }
  total.at(1) = 1.0;
  return total;
}

}  // namespace

CoefficientVector evolve(const DrivingFunction& driving, int N, const EvolveOptions& options) {
  if (N < 2) throw DomainError("evolve: N must be >= 2");
  if (!(options.dt > 0.0)) throw DomainError("evolve: dt must be positive");

  State h(static_cast<std::size_t>(N), Complex{});
  h[0] = 1.0;
  boost::numeric::odeint::runge_kutta4<State> stepper;

  const double horizon = driving.horizon();
  const double check_time = horizon - 1.0;
  std::optional<TruncatedSeries> estimate_at_check;

  const auto& breaks = driving.breakpoints();
  for (int piece = 0; piece < driving.pieces(); ++piece) {
    const LoewnerRhs rhs{std::polar(1.0, driving.phases()[piece]), N};
    const double t0 = breaks[piece];
    const double t1 = breaks[piece + 1];
    // Equal sub-steps no larger than dt, landing exactly on t1.
    const auto steps = static_cast<long>(std::ceil((t1 - t0) / options.dt - 1e-9));
    const double h_step = (t1 - t0) / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
      const double t = t0 + h_step * static_cast<double>(s);
      if (!estimate_at_check && check_time >= t && check_time < t + h_step && check_time >= 0.0) {
        // Snapshot at the grid point nearest below T - 1.
        estimate_at_check = close_tail(h, rhs.kappa, t);
      }
      stepper.do_step(rhs, h, t, h_step);
      h[0] = 1.0;
    }
  }

  const Complex last_kappa = std::polar(1.0, driving.phases().back());
  TruncatedSeries f = close_tail(h, last_kappa, horizon);
  if (estimate_at_check) {
    const double delta = max_abs_diff(f, *estimate_at_check);
    if (delta > options.convergence_tol) {
      throw HorizonError("evolve: coefficients moved by " + std::to_string(delta) +
                             " over the final unit of time; lengthen the horizon or the last piece",
                         delta);
    }
  }
  return CoefficientVector(std::move(f));
}

}  // namespace zalcman
