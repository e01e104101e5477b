#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zalcman/families.hpp"

namespace zalcman {

/// The triple (lambda, n, m) of the generalized Zalcman functional
/// lambda a_n a_m - a_{n+m-1}.
struct ZalcmanSpec {
  double lambda = 1.0;
  int n = 2;
  int m = 2;

  /// Throws DomainError unless n >= 2, m >= 2 and lambda > 0.
  void validate() const;
  /// Highest coefficient index the functional touches: n + m - 1.
  int required_order() const noexcept { return n + m - 1; }
};

/// lambda a_n a_m - a_{n+m-1}. The reported quantity is its modulus.
Complex zalcman_value(const CoefficientVector& f, const ZalcmanSpec& spec);

/// Conjectured modulus bound lambda n m - n - m + 1 (attained by Koebe).
double zalcman_bound(const ZalcmanSpec& spec) noexcept;

struct LambdaThresholds {
  double low;   ///< (n+m-1)/(nm): the bound is nonnegative from here on.
  double mono;  ///< nm/(n+m-1): hypothesis of the monotone extension.
};

LambdaThresholds lambda_thresholds(int n, int m);

/// Result of extending a known bound at lambda to some mu >= lambda.
/// Either a certified bound or a refusal with its reason; refusal is not an error.
struct BoundExtension {
  std::optional<double> bound;
  std::string refusal;

  bool certified() const noexcept { return bound.has_value(); }
};

/// If |lambda a_n a_m - a_{n+m-1}| <= lambda nm - n - m + 1 holds on S and
/// mu >= lambda >= nm/(n+m-1), then |a_k| <= k gives
/// |mu a_n a_m - a_{n+m-1}| <= (mu - lambda) nm + (lambda nm - n - m + 1).
BoundExtension extend_bound_by_monotonicity(double mu, double lambda, bool holds_at_lambda, int n,
                                            int m);

/// Wirtinger gradient dJ/da_v = (1/2)(d/dx_v - i d/dy_v) of J = a_4 - lambda a_2 a_3.
///
/// Note the sign: J is the negative of the Zalcman functional with
/// (n, m) = (2, 3). Only this case is provided.
struct FunctionalGradient {
  Complex J2;
  Complex J3;
  Complex J4;

  /// (J_2, J_3, J_4) in the layout schaeffer_spencer expects.
  std::vector<Complex> as_list() const { return {J2, J3, J4}; }
};

/// J2 = -lambda a_3, J3 = -lambda a_2, J4 = 1. Requires f.order() >= 4.
FunctionalGradient gradient(double lambda, const CoefficientVector& f);

}  // namespace zalcman
