#include "zalcman/families.hpp"

#include <cmath>

#include "zalcman/errors.hpp"

namespace zalcman {

CoefficientVector::CoefficientVector(std::vector<Complex> a)
    : CoefficientVector(TruncatedSeries(std::move(a))) {}

CoefficientVector::CoefficientVector(TruncatedSeries series) : series_(std::move(series)) {
  if (!series_.is_normalized()) throw DomainError("CoefficientVector: a_1 must equal 1");
}

CoefficientVector koebe_rotation(double theta, int order) {
  if (order < 2) throw DomainError("koebe_rotation: order must be >= 2");
  std::vector<Complex> a(static_cast<std::size_t>(order));
  a[0] = 1.0;
  for (int n = 2; n <= order; ++n) a[n - 1] = static_cast<double>(n) * std::polar(1.0, (n - 1) * theta);
  return CoefficientVector(std::move(a));
}

}  // namespace zalcman
