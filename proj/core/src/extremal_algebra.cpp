#include "zalcman/extremal_algebra.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zalcman/errors.hpp"

namespace zalcman {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(double R, const char* where) {
  if (!(R > 0.0 && R <= 2.0)) {
    throw DomainError(std::string(where) + ": R must lie in (0, 2], got " + std::to_string(R));
  }
}

}  // namespace

void TrigState::validate(double tol) const {
  check_radius(R, "TrigState");
  if (r > 0.0) {
    const Complex unit = std::polar(1.0, beta + theta);
    const Complex expected = (p % 2 == 0) ? Complex{1.0} : Complex{-1.0};
    if (std::abs(unit - expected) > tol) {
      throw DomainError("TrigState: e^{i(beta+theta)} differs from e^{i p pi}");
    }
  }
}

TrigState trig_state_from(const FactorizedG& fac, const CoefficientVector& f) {
  TrigState st;
  st.theta = std::arg(fac.E);
  st.s = std::abs(fac.B());
  st.alpha = std::arg(fac.B());
  st.r = std::abs(fac.C());
  st.beta = std::arg(fac.C());
  // beta + theta is a multiple of pi; pick the nearest one.
  st.p = static_cast<int>(std::lround((st.beta + st.theta) / kPi));
  const Complex minus_a2 = -f[2];
  st.R = std::abs(minus_a2);
  st.phi = std::arg(minus_a2);
  return st;
}

double real_part_identity(const TrigState& state) noexcept {
  return (2.0 / 3.0) * (state.r * std::cos(state.p * kPi) - state.s * std::cos(state.alpha));
}

double g_function(double R, double theta, double phi) {
  check_radius(R, "g_function");
  return -6.0 * R * R * std::cos(2.0 * phi - theta) + R * std::cos(2.0 * theta - phi) +
         std::cos(3.0 * theta);
}

GPartials g_partials(double R, double theta, double phi) noexcept {
  return {-12.0 * R * std::cos(2.0 * phi - theta) + std::cos(2.0 * theta - phi),
          12.0 * R * R * std::sin(2.0 * phi - theta) - R * std::sin(phi - 2.0 * theta)};
}

std::vector<GCriticalPoint> g_critical_points() {
  // -12 R e^{i(theta - 2phi)} + e^{i(2theta - phi)} = 0 forces equal moduli,
  // 12 R = 1, and equal phases, theta - 2phi = 2theta - phi, i.e. phi = -theta.
  return {{1.0 / 12.0, CriticalConstraint::PhiEqualsMinusTheta}};
}

double g_on_manifold(double R, double phi) {
  check_radius(R, "g_on_manifold");
  return (-6.0 * R * R + R + 1.0) * std::cos(3.0 * phi);
}

TwoStageMaximum maximize_two_stage() {
  TwoStageMaximum out{};
  // Interior stage.
  const auto critical = g_critical_points();
  out.interior_R = critical.front().R;
  out.interior_value = g_on_manifold(out.interior_R, 0.0);

  // Boundary stage: on theta = -phi, G = (-6R^2 + R + 1) cos 3phi and the
  // radial factor is extremal at R = 2 over (0, 2] away from the interior point.
  // cos 3phi sweeps [-1, 1], so the maximum picks whichever sign of the factor is larger.
  double best = -std::numeric_limits<double>::infinity();
  for (const double R : {out.interior_R, 2.0}) {
    const double radial = -6.0 * R * R + R + 1.0;
    for (const double cos3phi : {1.0, -1.0}) {
      const double value = radial * cos3phi;
      if (value > best) {
        best = value;
        out.argmax_R = R;
        out.argmax_phi = cos3phi > 0 ? 0.0 : kPi / 3.0;
      }
    }
  }
  out.g_max = best;
  out.bound = (2.0 / 3.0) * best;
  return out;
}

GridMaximum manifold_grid_max(int nR, int nPhi) {
  if (nR < 1 || nPhi < 1) throw DomainError("manifold_grid_max: grid sizes must be positive");
  GridMaximum best{-std::numeric_limits<double>::infinity(), 0, 0, 0};
  for (int j = 0; j < nPhi; ++j) {
    const double phi = 2.0 * kPi * j / nPhi;
    const double c = std::cos(3.0 * phi);
    for (int i = 1; i <= nR; ++i) {
      const double R = 2.0 * i / nR;
      const double value = (-6.0 * R * R + R + 1.0) * c;
      if (value > best.value) best = {value, R, -phi, phi};
    }
  }
  return best;
}

GridMaximum unconstrained_grid_max(int nR, int nAngle) {
  if (nR < 1 || nAngle < 1) throw DomainError("unconstrained_grid_max: grid sizes must be positive");
  GridMaximum best{-std::numeric_limits<double>::infinity(), 0, 0, 0};
  for (int a = 0; a < nAngle; ++a) {
    const double theta = 2.0 * kPi * a / nAngle;
    for (int b = 0; b < nAngle; ++b) {
      const double phi = 2.0 * kPi * b / nAngle;
      for (int i = 1; i <= nR; ++i) {
        const double R = 2.0 * i / nR;
        const double value = g_function(R, theta, phi);
        if (value > best.value) best = {value, R, theta, phi};
      }
    }
  }
  return best;
}

std::string to_string(CriticalConstraint c) {
  switch (c) {
    case CriticalConstraint::PhiEqualsMinusTheta:
      return "phi = -theta (mod 2pi)";
  }
  return "unknown";
}

}  // namespace zalcman
