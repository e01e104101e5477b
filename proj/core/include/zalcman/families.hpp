#pragma once

#include <span>
#include <vector>

#include "zalcman/power_series.hpp"

namespace zalcman {

/// Normalized Taylor coefficients a_1 = 1, a_2, ..., a_N of a candidate
/// f(z) = z + a_2 z^2 + ... in the class S.
class CoefficientVector {
 public:
  /// Takes a_1..a_N. Throws DomainError unless a_1 == 1 exactly.
  explicit CoefficientVector(std::vector<Complex> a);
  explicit CoefficientVector(TruncatedSeries series);

  int order() const noexcept { return series_.order(); }
  /// a_n, 1-based; zero beyond the order.
  Complex operator[](int n) const noexcept { return series_[n]; }
  std::span<const Complex> coeffs() const noexcept { return series_.coeffs(); }
  const TruncatedSeries& series() const noexcept { return series_; }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  TruncatedSeries series_;
};

/// Coefficients of z / (1 - e^{i theta} z)^2: a_n = n e^{i (n-1) theta}.
CoefficientVector koebe_rotation(double theta, int order);

}  // namespace zalcman
