#pragma once

#include <cstdint>
#include <vector>

#include "zalcman/families.hpp"

namespace zalcman {

/// Piecewise-constant unimodular driving k(t) = e^{i phase_j} on
/// [t_j, t_{j+1}), with 0 = t_0 < t_1 < ... < t_K = T.
///
/// Convention: a constant phase alpha generates the Koebe rotation
/// z / (1 - e^{i alpha} z)^2, i.e. phase alpha corresponds to theta = alpha.
class DrivingFunction {
 public:
  /// Throws DomainError unless breakpoints.size() == phases.size() + 1,
  /// breakpoints start at 0 and increase strictly.
  DrivingFunction(std::vector<double> phases, std::vector<double> breakpoints);

  /// Single phase held on [0, horizon].
  static DrivingFunction constant(double phase, double horizon);

  const std::vector<double>& phases() const noexcept { return phases_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  double horizon() const noexcept { return breakpoints_.back(); }
  int pieces() const noexcept { return static_cast<int>(phases_.size()); }

  /// Same breakpoints, every phase shifted by delta.
  DrivingFunction rotated(double delta) const;
  /// Same breakpoints, new phases (count must match).
  DrivingFunction with_phases(std::vector<double> phases) const;

  friend bool operator==(const DrivingFunction&, const DrivingFunction&) = default;

 private:
  std::vector<double> phases_;
  std::vector<double> breakpoints_;
};

/// K pseudo-random phases in [-pi, pi) on equispaced breakpoints over [0, T].
/// Deterministic for a given seed.
DrivingFunction random_driving(int K, double T, std::uint64_t seed);

struct EvolveOptions {
  double dt = 1e-3;
  /// Max coefficient movement allowed over the final unit of time.
  double convergence_tol = 1e-9;
};

/// Coefficients a_1..a_N of the univalent map generated by the driving.
///
/// Integrates the radial Loewner equation dw/dt = -w (1 - k w)/(1 + k w),
/// w(z, 0) = z, written for h(t) = e^t w(z, t) as the truncated-series ODE
///   dh/dt = 2 sum_{k>=1} (-1)^{k+1} k(t)^k e^{-k t} h^{k+1}
/// with RK4, stepping exactly onto every breakpoint. Past the horizon the last
/// phase is held, where the flow is explicit: f = sum_j j (k e^{-T})^{j-1} h(T)^j.
///
/// Throws HorizonError if the estimate of f still moves by more than
/// `convergence_tol` over [T - 1, T].
CoefficientVector evolve(const DrivingFunction& driving, int N, const EvolveOptions& options = {});

inline CoefficientVector evolve(const DrivingFunction& driving, int N, double dt) {
  return evolve(driving, N, EvolveOptions{dt});
}

}  // namespace zalcman
