#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "zalcman/errors.hpp"
#include "zalcman/families.hpp"
#include "zalcman/functionals.hpp"
#include "zalcman/schiffer.hpp"

using namespace zalcman;
constexpr double kPi = std::numbers::pi;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

FactorizedG koebe_fit(double theta) {
  const auto g = rhs_polynomial(3.0, koebe_rotation(theta, 4));
  const auto out = double_root_fit(g);
  REQUIRE(out.fit.has_value());
  return *out.fit;
}

}  // namespace

TEST_CASE("schaeffer_spencer reproduces the closed forms") {
  const CoefficientVector f(std::vector<Complex>{1.0, {0.4, -1.2}, {2.1, 0.3}, {-0.5, 1.7}});
  const double lambda = 2.7;
  const auto d = schaeffer_spencer(gradient(lambda, f).as_list(), f, 4);
  const auto ref = oracle::closed_schiffer(lambda, {f.coeffs().begin(), f.coeffs().end()});
  CHECK(std::abs(d.a_coeff(2) - ref.A2) < 1e-12);
  CHECK(std::abs(d.a_coeff(3) - ref.A3) < 1e-12);
  CHECK(std::abs(d.a_coeff(4) - ref.A4) < 1e-12);
  CHECK(std::abs(d.b_coeff(1) - ref.B1) < 1e-12);
  CHECK(std::abs(d.b_coeff(2) - ref.B2) < 1e-12);
  CHECK(std::abs(d.b_coeff(3) - ref.B3) < 1e-12);
  CHECK(std::abs(d.B - ref.B) < 1e-12);
}

TEST_CASE("schaeffer_spencer rejects a gradient of the wrong length") {
  const auto f = koebe_rotation(0.0, 4);
  const std::vector<Complex> grad{1.0, 2.0};
  CHECK_THROWS_AS(schaeffer_spencer(grad, f, 4), DomainError);
}

TEST_CASE("rhs_polynomial examples") {
  auto g = rhs_polynomial(3.0, koebe_rotation(0.0, 4));
  CHECK(g.low_degree == -3);
  CHECK(max_diff(g.coeffs, {1.0, -2.0, -24.0, -42.0, -24.0, -2.0, 1.0}) < 1e-12);

  const Complex w = std::polar(1.0, kPi / 3.0);
  g = rhs_polynomial(3.0, koebe_rotation(kPi / 3.0, 4));
  CHECK(max_diff(g.coeffs, {1.0, -2.0 * w, -24.0 * w * w, 42.0, -24.0 * std::conj(w * w),
                            -2.0 * std::conj(w), 1.0}) < 1e-12);

  g = rhs_polynomial(2.0, CoefficientVector(std::vector<Complex>{1.0, 0.0, 0.0, 0.0}));
  CHECK(max_diff(g.coeffs, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}) == 0.0);
}

TEST_CASE("check_reciprocal_symmetry") {
  CHECK(check_reciprocal_symmetry(rhs_polynomial(3.0, koebe_rotation(0.0, 4))) == 0.0);
  CHECK(check_reciprocal_symmetry(rhs_polynomial(3.0, koebe_rotation(kPi / 3.0, 4))) < 1e-12);
  const LaurentPoly centered{-1, {0.0, {0.0, 1.0}, 0.0}};
  CHECK(check_reciprocal_symmetry(centered) == doctest::Approx(2.0));
  CHECK_THROWS_AS(check_reciprocal_symmetry(LaurentPoly{-1, {1.0, 1.0}}), DomainError);
}

TEST_CASE("literal RHS at theta = 1.2 is not symmetric; the normalized frame is") {
  const auto f = koebe_rotation(1.2, 4);
  CHECK(check_reciprocal_symmetry(rhs_polynomial(3.0, f)) > 1.0);
  const auto frame = rotate_to_real_functional(3.0, f);
  CHECK(frame.psi > -kPi / 6.0);
  CHECK(frame.psi <= kPi / 6.0);
  CHECK(check_reciprocal_symmetry(rhs_polynomial(3.0, frame.f)) < 1e-12);
  CHECK(rotate_to_real_functional(3.0, koebe_rotation(0.0, 4)).psi == 0.0);
}

TEST_CASE("double_root_fit on Koebe at theta = 0 and pi/3") {
  auto fac = koebe_fit(0.0);
  CHECK(std::abs(fac.E - Complex{-1.0}) < 1e-9);
  CHECK(fac.residual < 1e-9);

  fac = koebe_fit(kPi / 3.0);
  CHECK(std::abs(fac.E + std::polar(1.0, -kPi / 3.0)) < 1e-9);
  CHECK(fac.residual < 1e-9);
}

TEST_CASE("perturbed Koebe has no double zero") {
  auto a = std::vector<Complex>{1.0, 2.0, 3.0, 4.5};
  const auto g = rhs_polynomial(3.0, CoefficientVector(a));
  const auto out = double_root_fit(g);
  CHECK_FALSE(out.fit.has_value());
  CHECK_FALSE(out.reason.empty());
  // Independent root finder: the former double root has split apart.
  const auto roots = oracle::durand_kerner(g.coeffs);
  CHECK(oracle::nearest_pair_distance(roots) > 1e-4);
  CHECK(out.nearest_pair_distance == doctest::Approx(oracle::nearest_pair_distance(roots)).epsilon(1e-6));
}

TEST_CASE("double_root_fit precondition") {
  CHECK_THROWS_AS(double_root_fit(LaurentPoly{-2, {1.0, 0.0, 0.0, 0.0, 1.0}}), DomainError);
}

TEST_CASE("matching_residuals and relation_check on Koebe fits") {
  for (const double theta : {0.0, kPi / 3.0}) {
    const auto fac = koebe_fit(theta);
    const auto f = koebe_rotation(theta, 4);
    for (const double r : matching_residuals(fac, f)) CHECK(r < 1e-8);
    const auto rel = relation_check(fac);
    CHECK(rel.d < 1e-8);
    CHECK(rel.c < 1e-8);
  }
}

TEST_CASE("negating E breaks the matching") {
  auto fac = koebe_fit(0.0);
  fac.E = -fac.E;
  const auto r = matching_residuals(fac, koebe_rotation(0.0, 4));
  CHECK(*std::max_element(r.begin(), r.end()) > 1.0);
}

TEST_CASE("relation_check by hand") {
  const FactorizedG fac{Complex{1.0}, {Complex{1.0}, Complex{1.0}, Complex{0.0, 1.0}, Complex{0.0}}, 0.0};
  const auto rel = relation_check(fac);
  CHECK(rel.d == doctest::Approx(1.0));
  CHECK(rel.c == doctest::Approx(2.0));
}
