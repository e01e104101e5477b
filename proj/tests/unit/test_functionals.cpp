#include <doctest.h>

#include "zalcman/errors.hpp"
#include "zalcman/families.hpp"
#include "zalcman/functionals.hpp"

using namespace zalcman;

TEST_CASE("zalcman_value on Koebe and on the zero vector") {
  const auto k = koebe_rotation(0.0, 4);
  CHECK(std::abs(zalcman_value(k, {3.0, 2, 3})) == doctest::Approx(14.0));
  CHECK(std::abs(zalcman_value(k, {2.0, 2, 3})) == doctest::Approx(8.0));
  const CoefficientVector id(std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
  CHECK(zalcman_value(id, {2.5, 2, 3}) == Complex{});
  CHECK(zalcman_value(id, {2.5, 2, 2}) == Complex{});
}

TEST_CASE("zalcman_value rejects short vectors and bad specs") {
  const auto k = koebe_rotation(0.0, 3);
  CHECK_THROWS_AS(zalcman_value(k, {3.0, 2, 3}), DomainError);
  CHECK_THROWS_AS(ZalcmanSpec({3.0, 1, 3}).validate(), DomainError);
  CHECK_THROWS_AS(ZalcmanSpec({0.0, 2, 3}).validate(), DomainError);
}

TEST_CASE("zalcman_bound and thresholds") {
  CHECK(zalcman_bound({3.0, 2, 3}) == 14.0);
  CHECK(zalcman_bound({1.0, 2, 2}) == 1.0);
  CHECK(zalcman_bound({2.0, 2, 3}) == 8.0);

  auto t = lambda_thresholds(2, 3);
  CHECK(t.low == doctest::Approx(4.0 / 6.0));
  CHECK(t.mono == doctest::Approx(1.5));
  t = lambda_thresholds(2, 2);
  CHECK(t.low == doctest::Approx(0.75));
  CHECK(t.mono == doctest::Approx(4.0 / 3.0));
  t = lambda_thresholds(5, 5);
  CHECK(t.low == doctest::Approx(9.0 / 25.0));
  CHECK(t.mono == doctest::Approx(25.0 / 9.0));
}

TEST_CASE("extend_bound_by_monotonicity") {
  auto e = extend_bound_by_monotonicity(4.0, 3.0, true, 2, 3);
  REQUIRE(e.certified());
  CHECK(*e.bound == doctest::Approx(20.0));
  e = extend_bound_by_monotonicity(3.0, 3.0, true, 2, 3);
  REQUIRE(e.certified());
  CHECK(*e.bound == doctest::Approx(14.0));

  e = extend_bound_by_monotonicity(1.0, 3.0, true, 2, 3);
  CHECK_FALSE(e.certified());
  CHECK_FALSE(e.refusal.empty());
  CHECK_FALSE(extend_bound_by_monotonicity(4.0, 3.0, false, 2, 3).certified());
  CHECK_FALSE(extend_bound_by_monotonicity(2.0, 1.0, true, 2, 3).certified());
}

TEST_CASE("gradient examples") {
  auto g = gradient(3.0, koebe_rotation(0.0, 4));
  CHECK(g.J2 == Complex{-9.0});
  CHECK(g.J3 == Complex{-6.0});
  CHECK(g.J4 == Complex{1.0});

  const CoefficientVector f(std::vector<Complex>{1.0, {0.0, 1.0}, 1.0, 0.0});
  g = gradient(0.0, f);
  CHECK(std::abs(g.J2) == 0.0);
  CHECK(std::abs(g.J3) == 0.0);
  CHECK(g.J4 == Complex{1.0});

  // Frozen from central finite differences of Re J and Im J at step 1e-6.
  g = gradient(2.0, f);
  CHECK(std::abs(g.J2 - Complex{-2.0}) < 1e-12);
  CHECK(std::abs(g.J3 - Complex{0.0, -2.0}) < 1e-12);
  CHECK(g.J4 == Complex{1.0});
  CHECK(g.as_list().size() == 3);

  CHECK_THROWS_AS(gradient(3.0, koebe_rotation(0.0, 3)), DomainError);
}
