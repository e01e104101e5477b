#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace zalcman {

using Complex = std::complex<double>;

/// Power series c_1 z + c_2 z^2 + ... + c_N z^N truncated at a fixed order N.
///
/// The constant term is implicitly zero; every series handled here vanishes
/// at the origin. The order is fixed at construction and no operation ever
/// extends it, so products silently discard degrees above N.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit TruncatedSeries(int order);
  /// Takes c_1..c_N; the order is coeffs.size().
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  /// The series z.
  static TruncatedSeries identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of z^k; zero outside 1..N.
  Complex operator[](int k) const noexcept {
    return (k >= 1 && k <= order()) ? coeffs_[k - 1] : Complex{};
  }
  /// Mutable coefficient of z^k, 1 <= k <= N.
  Complex& at(int k);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// True when c_1 == 1 exactly.
  bool is_normalized() const noexcept { return coeffs_.front() == Complex{1.0, 0.0}; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(Complex scale) noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated at the common order. Throws OrderMismatch.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// f^v for normalized f, giving the coefficients a_k^{(v)} of
/// f(z)^v = sum_{k>=v} a_k^{(v)} z^k. Requires c_1 == 1 and 1 <= v <= order.
TruncatedSeries power(const TruncatedSeries& f, int v);

/// Largest coefficient-wise modulus difference.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace zalcman
