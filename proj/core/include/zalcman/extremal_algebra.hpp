#pragma once

#include <string>
#include <vector>

#include "zalcman/families.hpp"
#include "zalcman/schiffer.hpp"

namespace zalcman {

/// Polar parameterization of the factorized extremal equation for lambda = 3:
/// E = e^{i theta}, A = e^{-2 i theta}, B = s e^{i alpha}, C = r e^{i beta},
/// e^{i(beta + theta)} = e^{i p pi}, -a_2 = R e^{i phi}.
struct TrigState {
  double theta = 0.0;
  double alpha = 0.0;
  double s = 0.0;
  double beta = 0.0;
  double r = 0.0;
  int p = 0;
  double phi = 0.0;
  double R = 1.0;

  /// Throws DomainError if e^{i(beta+theta)} is not +-1 to `tol` (for r > 0)
  /// or R is outside (0, 2].
  void validate(double tol = 1e-9) const;
};

/// Reads the polar data off a double-zero factorization and the coefficients.
TrigState trig_state_from(const FactorizedG& fac, const CoefficientVector& f);

/// Re(3 a_2 a_3 - a_4) = (2/3)(r cos(p pi) - s cos alpha).
double real_part_identity(const TrigState& state) noexcept;

/// G(R, theta, phi) = -6 R^2 cos(2 phi - theta) + R cos(2 theta - phi) + cos(3 theta),
/// 0 < R <= 2.
double g_function(double R, double theta, double phi);

struct GPartials {
  double dR;
  double dphi;
};

/// dG/dR = -12 R cos(2phi - theta) + cos(2theta - phi),
/// dG/dphi = 12 R^2 sin(2phi - theta) - R sin(phi - 2theta).
GPartials g_partials(double R, double theta, double phi) noexcept;

enum class CriticalConstraint {
  PhiEqualsMinusTheta,  ///< e^{i phi} = e^{-i theta}
};

struct GCriticalPoint {
  double R;
  CriticalConstraint constraint;
};

/// Joint zeros of dG/dR and dG/dphi, from -12 R e^{i(theta - 2phi)} + e^{i(2theta - phi)} = 0.
std::vector<GCriticalPoint> g_critical_points();

/// (-6R^2 + R + 1) cos(3 phi), the value of G on the manifold theta = -phi.
double g_on_manifold(double R, double phi);

struct TwoStageMaximum {
  double g_max;           ///< 21
  double bound;           ///< (2/3) g_max = 14
  double argmax_R;        ///< 2
  double argmax_phi;      ///< pi/3 (mod 2pi/3)
  double interior_R;      ///< 1/12
  double interior_value;  ///< G at the interior critical point with phi = 0: 25/24
};

/// Two-stage maximization: the interior critical manifold R = 1/12, then the
/// boundary R = 2 restricted to theta = -phi, scanning the sign of cos(3 phi).
TwoStageMaximum maximize_two_stage();

struct GridMaximum {
  double value;
  double R;
  double theta;  ///< equals -phi for the manifold scan
  double phi;
};

/// max of g_on_manifold over R in (0, 2] x phi in [0, 2pi) on an nR x nPhi grid
/// (R_i = 2 i / nR, i = 1..nR; phi_j = 2 pi j / nPhi).
GridMaximum manifold_grid_max(int nR, int nPhi);

/// Diagnostic only: max of g_function over a free (R, theta, phi) grid. Exceeds 21;
/// the bound holds only on the extremal manifold.
GridMaximum unconstrained_grid_max(int nR, int nAngle);

std::string to_string(CriticalConstraint c);

}  // namespace zalcman
