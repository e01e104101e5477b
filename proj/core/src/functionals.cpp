#include "zalcman/functionals.hpp"

#include <string>

#include "zalcman/errors.hpp"

namespace zalcman {

void ZalcmanSpec::validate() const {
  if (n < 2 || m < 2) throw DomainError("ZalcmanSpec: n and m must be >= 2");
  if (!(lambda > 0.0)) throw DomainError("ZalcmanSpec: lambda must be positive");
}

Complex zalcman_value(const CoefficientVector& f, const ZalcmanSpec& spec) {
  spec.validate();
  if (f.order() < spec.required_order()) {
    throw DomainError("zalcman_value: need order >= " + std::to_string(spec.required_order()) +
                      ", got " + std::to_string(f.order()));
  }
  return spec.lambda * f[spec.n] * f[spec.m] - f[spec.required_order()];
}

double zalcman_bound(const ZalcmanSpec& spec) noexcept {
  const double n = spec.n;
  const double m = spec.m;
  return spec.lambda * n * m - n - m + 1.0;
}

LambdaThresholds lambda_thresholds(int n, int m) {
  if (n < 2 || m < 2) throw DomainError("lambda_thresholds: n and m must be >= 2");
  const double nm = static_cast<double>(n) * m;
  const double s = static_cast<double>(n + m - 1);
  return {s / nm, nm / s};
}

BoundExtension extend_bound_by_monotonicity(double mu, double lambda, bool holds_at_lambda, int n,
                                            int m) {
  if (n < 2 || m < 2) return {std::nullopt, "n and m must be >= 2"};
  if (!holds_at_lambda) return {std::nullopt, "bound not known to hold at lambda"};
  if (mu < lambda) return {std::nullopt, "mu < lambda"};
  const auto thresholds = lambda_thresholds(n, m);
  if (lambda < thresholds.mono) {
    return {std::nullopt, "lambda below nm/(n+m-1) = " + std::to_string(thresholds.mono)};
  }
  const double nm = static_cast<double>(n) * m;
  const double at_lambda = zalcman_bound({lambda, n, m});
  return {(mu - lambda) * nm + at_lambda, {}};
}

FunctionalGradient gradient(double lambda, const CoefficientVector& f) {
  if (f.order() < 4) throw DomainError("gradient: need order >= 4");
  return {-lambda * f[3], -lambda * f[2], Complex{1.0, 0.0}};
}

}  // namespace zalcman
