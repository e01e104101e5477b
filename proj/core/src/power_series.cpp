#include "zalcman/power_series.hpp"

#include <algorithm>
#include <string>

#include "zalcman/errors.hpp"

namespace zalcman {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 1) throw DomainError("TruncatedSeries: order must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order), Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("TruncatedSeries: order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries z(order);
  z.coeffs_[0] = 1.0;
  return z;
}

Complex& TruncatedSeries::at(int k) {
  if (k < 1 || k > order()) {
    throw DomainError("TruncatedSeries::at: degree " + std::to_string(k) + " outside 1.." +
                      std::to_string(order()));
  }
  return coeffs_[k - 1];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw OrderMismatch("TruncatedSeries: order mismatch in +=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) noexcept {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("multiply: orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()) + " differ");
  }
  const int n = a.order();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(n), Complex{});
  // Degree i+j with i, j >= 1, so only i + j <= n contributes.
  for (int i = 1; i < n; ++i) {
    const Complex ai = ac[i - 1];
    if (ai == Complex{}) continue;
    for (int j = 1; i + j <= n; ++j) out[i + j - 1] += ai * bc[j - 1];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries power(const TruncatedSeries& f, int v) {
  if (!f.is_normalized()) throw DomainError("power: leading coefficient must be exactly 1");
  if (v < 1 || v > f.order()) {
    throw DomainError("power: exponent " + std::to_string(v) + " outside 1.." +
                      std::to_string(f.order()));
  }
  // Square-and-multiply; keeps the leading coefficient exactly 1.
  TruncatedSeries result = f;
  TruncatedSeries base = f;
  int e = v - 1;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch("max_abs_diff: order mismatch");
  double worst = 0.0;
  for (int k = 1; k <= a.order(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace zalcman
