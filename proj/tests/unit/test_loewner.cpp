#include <doctest.h>

#include <numbers>

#include "zalcman/errors.hpp"
#include "zalcman/families.hpp"
#include "zalcman/loewner.hpp"

using namespace zalcman;
constexpr double kPi = std::numbers::pi;

TEST_CASE("constant driving reproduces the Koebe rotation") {
  for (const double theta : {0.0, 1.2, -2.5}) {
    const auto f = evolve(DrivingFunction::constant(theta, 25.0), 8, 1e-3);
    CHECK(max_abs_diff(f.series(), koebe_rotation(theta, 8).series()) < 1e-6);
  }
}

TEST_CASE("|a_2| <= 2 on random drivings") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = evolve(random_driving(4, 4.0, seed), 4, 2e-3);
    CHECK(std::abs(f[2]) <= 2.0 + 1e-6);
  }
}

TEST_CASE("two equal phases match one phase") {
  const DrivingFunction one({0.8}, {0.0, 6.0});
  const DrivingFunction two({0.8, 0.8}, {0.0, 2.5, 6.0});
  const auto a = evolve(one, 6, 1e-3);
  const auto b = evolve(two, 6, 1e-3);
  CHECK(max_abs_diff(a.series(), b.series()) < 1e-9);
}

TEST_CASE("random_driving") {
  CHECK(random_driving(3, 5.0, 42) == random_driving(3, 5.0, 42));
  CHECK_FALSE(random_driving(3, 5.0, 42) == random_driving(3, 5.0, 43));
  CHECK(random_driving(1, 5.0, 7).pieces() == 1);

  const auto d = random_driving(5, 10.0, 9);
  CHECK(d.pieces() == 5);
  const std::vector<double> expected{0.0, 2.0, 4.0, 6.0, 8.0, 10.0};
  REQUIRE(d.breakpoints().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(d.breakpoints()[i] == doctest::Approx(expected[i]));
  for (const double p : d.phases()) {
    CHECK(p >= -kPi);
    CHECK(p < kPi);
  }
}

TEST_CASE("DrivingFunction validation and helpers") {
  CHECK_THROWS_AS(DrivingFunction({0.0}, {0.0}), DomainError);
  CHECK_THROWS_AS(DrivingFunction({0.0}, {0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(DrivingFunction({0.0, 1.0}, {0.0, 1.0, 1.0}), DomainError);
  const auto d = DrivingFunction({0.1, 0.2}, {0.0, 1.0, 3.0});
  CHECK(d.horizon() == 3.0);
  CHECK(d.rotated(0.5).phases()[1] == doctest::Approx(0.7));
  CHECK_THROWS_AS(d.with_phases({1.0}), DomainError);
}

TEST_CASE("coarse steps fail the horizon convergence check") {
  try {
    (void)evolve(random_driving(3, 4.0, 5), 6, 0.2);
    FAIL("expected HorizonError");
  } catch (const HorizonError& e) {
    CHECK(e.last_delta() > 1e-9);
  }
}
