#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zalcman/families.hpp"

namespace zalcman {

/// Coefficients of the Schaeffer-Spencer differential equation
///
///   (z w')^2 sum_{v=2}^{n} A_v w^{-v-1} = B + sum_{v=1}^{n-1} (B_v z^{v-n} + conj(B_v) z^{n-v})
///
/// satisfied by extremal functions of a coefficient functional of a_2..a_n.
struct SchifferData {
  int n = 0;
  std::vector<Complex> A;   ///< A_2..A_n
  std::vector<Complex> Bv;  ///< B_1..B_{n-1}
  Complex B;

  Complex a_coeff(int v) const { return A.at(static_cast<std::size_t>(v - 2)); }
  Complex b_coeff(int v) const { return Bv.at(static_cast<std::size_t>(v - 1)); }
};

/// A_v = sum_{k=v}^{n} a_k^{(v)} J_k, B_v = sum_{k=1}^{v} k a_k J_{n+k-v},
/// B = sum_{k=2}^{n} (k-1) a_k J_k, with a_k^{(v)} from power series powers.
/// `grad` holds J_2..J_n.
SchifferData schaeffer_spencer(std::span<const Complex> grad, const CoefficientVector& f, int n);

/// Finite Laurent polynomial sum_k c_k z^k over low_degree..low_degree+size-1.
struct LaurentPoly {
  int low_degree = 0;
  std::vector<Complex> coeffs;

  int high_degree() const noexcept { return low_degree + static_cast<int>(coeffs.size()) - 1; }
  /// c_k, zero outside the stored range.
  Complex coeff(int degree) const noexcept;
  Complex operator()(Complex z) const;
};

/// A rotation f_psi(z) = e^{-i psi} f(e^{i psi} z) of f, with a_n -> a_n e^{i(n-1) psi}.
struct RotatedCoefficients {
  CoefficientVector f;
  double psi;
};

/// Rotates f so that J = a_4 - lambda a_2 a_3 becomes real, choosing the
/// smallest such |psi| (psi in (-pi/6, pi/6]). J picks up e^{3 i psi} under
/// rotation; the extremal equation below is written for this representative,
/// whose center coefficient R is real. A boundary point E of the rotated map
/// corresponds to e^{i psi} E for the original f.
RotatedCoefficients rotate_to_real_functional(double lambda, const CoefficientVector& f);

/// Right-hand side of the extremal equation for J = a_4 - lambda a_2 a_3:
/// z^{-3}(1 + P z + Q z^2 + R z^3 + S z^4 + T z^5 + z^6) with
/// P = (2-lambda) a_2, Q = (3-lambda) a_3 - 2 lambda a_2^2, R = 3(a_4 - lambda a_2 a_3),
/// S = conj(Q), T = conj(P).
LaurentPoly rhs_polynomial(double lambda, const CoefficientVector& f);

/// max_k |c_k - conj(c_{-k})|; zero iff g(z) = conj(g(1/conj(z))).
/// Throws DomainError unless the degree range is symmetric.
double check_reciprocal_symmetry(const LaurentPoly& g);

/// g(z) = z^{-3} (z - E)^2 (z^4 + D z^3 + C z^2 + B z + A).
///
/// The quartic is stored as q = {A, B, C, D} (constant term first). These
/// letters are unrelated to the Schaeffer-Spencer A_v, B_v, B.
struct FactorizedG {
  Complex E;
  std::array<Complex, 4> q;
  double residual = 0.0;

  Complex A() const noexcept { return q[0]; }
  Complex B() const noexcept { return q[1]; }
  Complex C() const noexcept { return q[2]; }
  Complex D() const noexcept { return q[3]; }
};

/// Outcome of the double-zero search. `fit` is empty when no unimodular
/// double zero exists below the threshold; the remaining fields explain why.
struct DoubleRootOutcome {
  std::optional<FactorizedG> fit;
  std::vector<Complex> roots;        ///< all six numerator roots
  double nearest_pair_distance = 0;  ///< closest pair among `roots`
  double best_residual = 0;          ///< residual of the best candidate examined
  std::string reason;                ///< empty on success
};

struct DoubleRootOptions {
  double threshold = 1e-6;        ///< max admissible residual
  double cluster_radius = 1e-4;   ///< root pairs closer than this are merged
  double unimodular_tol = 1e-9;   ///< | |E| - 1 | allowance
};

/// Finds a unimodular double zero E of the degree-6 numerator p(z) = z^3 g(z)
/// and deflates p by (z - E)^2. Requires degrees -3..3 with c_{-3} = c_3 = 1.
DoubleRootOutcome double_root_fit(const LaurentPoly& g, const DoubleRootOptions& options = {});

/// |lhs - rhs| of the five coefficient identities obtained by expanding
/// (z - E)^2 (z^4 + D z^3 + C z^2 + B z + A) against P, Q, R, S, T:
///   B E^2 - 2 A E = P,  A - 2 E B + E^2 C = Q,  B - 2 E C + E^2 D = R,
///   C - 2 E D + E^2 = S,  D - 2 E = T.
std::array<double, 5> matching_residuals(const FactorizedG& fac, const CoefficientVector& f,
                                         double lambda = 3.0);

struct RelationResiduals {
  double d;  ///< |D - conj(B) A|
  double c;  ///< |C - conj(C) A|
};

RelationResiduals relation_check(const FactorizedG& fac) noexcept;

}  // namespace zalcman
