#include "zalcman/schiffer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zalcman/errors.hpp"
#include "zalcman/power_series.hpp"

namespace zalcman {

SchifferData schaeffer_spencer(std::span<const Complex> grad, const CoefficientVector& f, int n) {
  if (n < 2) throw DomainError("schaeffer_spencer: n must be >= 2");
  if (static_cast<int>(grad.size()) != n - 1) {
    throw DomainError("schaeffer_spencer: expected " + std::to_string(n - 1) +
                      " gradient entries, got " + std::to_string(grad.size()));
  }
  if (f.order() < n) throw DomainError("schaeffer_spencer: coefficient order below n");

  auto J = [&](int k) { return grad[static_cast<std::size_t>(k - 2)]; };

  // Powers are taken on the series truncated at n; a_k^{(v)} for k <= n is unaffected.
  std::vector<Complex> head(f.coeffs().begin(), f.coeffs().begin() + n);
  const TruncatedSeries series(std::move(head));

  SchifferData out;
  out.n = n;
  out.A.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 2; v <= n; ++v) {
    const TruncatedSeries fv = power(series, v);
    Complex acc{};
    for (int k = v; k <= n; ++k) acc += fv[k] * J(k);
    out.A.push_back(acc);
  }
  out.Bv.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 1; v <= n - 1; ++v) {
    Complex acc{};
    for (int k = 1; k <= v; ++k) acc += static_cast<double>(k) * f[k] * J(n + k - v);
    out.Bv.push_back(acc);
  }
  for (int k = 2; k <= n; ++k) out.B += static_cast<double>(k - 1) * f[k] * J(k);
  return out;
}

Complex LaurentPoly::coeff(int degree) const noexcept {
  if (degree < low_degree || degree > high_degree()) return {};
  return coeffs[static_cast<std::size_t>(degree - low_degree)];
}

Complex LaurentPoly::operator()(Complex z) const {
  if (low_degree < 0 && z == Complex{}) throw PoleError("LaurentPoly: evaluation at z = 0");
  Complex acc{};
  for (int k = high_degree(); k >= low_degree; --k) acc = acc * z + coeff(k);
  return acc * std::pow(z, low_degree);
}

RotatedCoefficients rotate_to_real_functional(double lambda, const CoefficientVector& f) {
  if (f.order() < 4) throw DomainError("rotate_to_real_functional: need order >= 4");
  const Complex J = f[4] - lambda * f[2] * f[3];
  double psi = 0.0;
  if (J != Complex{} && J.imag() != 0.0) {
    constexpr double third_pi = std::numbers::pi / 3.0;
    psi = -std::arg(J) / 3.0;  // in (-pi/3, pi/3]
    if (psi > third_pi / 2.0) psi -= third_pi;
    if (psi <= -third_pi / 2.0) psi += third_pi;
  }
  std::vector<Complex> a(f.coeffs().begin(), f.coeffs().end());
  for (int n = 2; n <= f.order(); ++n) a[n - 1] *= std::polar(1.0, (n - 1) * psi);
  a[0] = 1.0;
  return {CoefficientVector(std::move(a)), psi};
}

LaurentPoly rhs_polynomial(double lambda, const CoefficientVector& f) {
  if (f.order() < 4) throw DomainError("rhs_polynomial: need order >= 4");
  const Complex a2 = f[2];
  const Complex a3 = f[3];
  const Complex a4 = f[4];
  const Complex P = (2.0 - lambda) * a2;
  const Complex Q = (3.0 - lambda) * a3 - 2.0 * lambda * a2 * a2;
  const Complex R = 3.0 * (a4 - lambda * a2 * a3);
  return {-3, {1.0, P, Q, R, std::conj(Q), std::conj(P), 1.0}};
}

double check_reciprocal_symmetry(const LaurentPoly& g) {
  if (g.low_degree != -g.high_degree()) {
    throw DomainError("check_reciprocal_symmetry: degree range must be symmetric about 0");
  }
  double worst = 0.0;
  for (int k = g.low_degree; k <= g.high_degree(); ++k) {
    worst = std::max(worst, std::abs(g.coeff(k) - std::conj(g.coeff(-k))));
  }
  return worst;
}

namespace {

using Poly = std::vector<Complex>;  // constant term first

Complex horner(const Poly& p, Complex z) {
  Complex acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

/// Divides p by (z - root); returns the quotient and stores p(root) in `remainder`.
Poly deflate(const Poly& p, Complex root, Complex& remainder) {
  const std::size_t deg = p.size() - 1;
  Poly quotient(deg);
  Complex carry = p[deg];
  for (std::size_t k = deg; k-- > 0;) {
    quotient[k] = carry;
    carry = p[k] + carry * root;
  }
  remainder = carry;
  return quotient;
}

std::vector<Complex> monic_roots(const Poly& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + deg);
  // Eigen's ordering is unspecified; sort for reproducible diagnostics.
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

/// Newton on p' from a starting point near a double zero of p.
Complex polish_double_root(const Poly& p, Complex start) {
  const Poly d1 = derivative(p);
  const Poly d2 = derivative(d1);
  Complex z = start;
  for (int iter = 0; iter < 60; ++iter) {
    const Complex curvature = horner(d2, z);
    if (std::abs(curvature) == 0.0) break;
    const Complex step = horner(d1, z) / curvature;
    z -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) {
      break;
    }
  }
  return z;
}

}  // namespace

DoubleRootOutcome double_root_fit(const LaurentPoly& g, const DoubleRootOptions& options) {
  if (g.low_degree != -3 || g.high_degree() != 3) {
    throw DomainError("double_root_fit: expected a Laurent polynomial over degrees -3..3");
  }
  if (g.coeff(-3) != Complex{1.0} || g.coeff(3) != Complex{1.0}) {
    throw DomainError("double_root_fit: outer coefficients must equal 1");
  }
  const Poly p(g.coeffs.begin(), g.coeffs.end());

  DoubleRootOutcome out;
  out.roots = monic_roots(p);
  out.nearest_pair_distance = std::numeric_limits<double>::infinity();
  out.best_residual = std::numeric_limits<double>::infinity();

  std::optional<Complex> candidate;
  double best_circle_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < out.roots.size(); ++j) {
      const double dist = std::abs(out.roots[i] - out.roots[j]);
      out.nearest_pair_distance = std::min(out.nearest_pair_distance, dist);
      if (dist >= options.cluster_radius) continue;
      const Complex mid = 0.5 * (out.roots[i] + out.roots[j]);
      const double gap = std::abs(std::abs(mid) - 1.0);
      if (gap < best_circle_gap) {
        best_circle_gap = gap;
        candidate = mid;
      }
    }
  }
  if (!candidate) {
    out.reason = "no pair of numerator roots within the cluster radius";
    return out;
  }

  const Complex E = polish_double_root(p, *candidate);
  Complex rem1{};
  Complex rem2{};
  const Poly once = deflate(p, E, rem1);
  const Poly quartic = deflate(once, E, rem2);
  const double residual = std::max({std::abs(horner(p, E)), std::abs(horner(derivative(p), E)),
                                    std::abs(rem1), std::abs(rem2)});
  out.best_residual = residual;

  if (residual > options.threshold) {
    out.reason = "double-zero residual " + std::to_string(residual) + " above threshold";
    return out;
  }
  if (std::abs(std::abs(E) - 1.0) > options.unimodular_tol) {
    out.reason = "double zero is not on the unit circle (|E| = " + std::to_string(std::abs(E)) + ")";
    return out;
  }
  out.fit = FactorizedG{E, {quartic[0], quartic[1], quartic[2], quartic[3]}, residual};
  return out;
}

std::array<double, 5> matching_residuals(const FactorizedG& fac, const CoefficientVector& f,
                                         double lambda) {
  const LaurentPoly g = rhs_polynomial(lambda, f);
  const Complex E = fac.E;
  const Complex A = fac.A(), B = fac.B(), C = fac.C(), D = fac.D();
  return {
      std::abs(B * E * E - 2.0 * A * E - g.coeff(-2)),
      std::abs(A - 2.0 * E * B + E * E * C - g.coeff(-1)),
      std::abs(B - 2.0 * E * C + E * E * D - g.coeff(0)),
      std::abs(C - 2.0 * E * D + E * E - g.coeff(1)),
      std::abs(D - 2.0 * E - g.coeff(2)),
  };
}

RelationResiduals relation_check(const FactorizedG& fac) noexcept {
  const Complex A = fac.A(), B = fac.B(), C = fac.C(), D = fac.D();
  return {std::abs(D - std::conj(B) * A), std::abs(C - std::conj(C) * A)};
}

}  // namespace zalcman
