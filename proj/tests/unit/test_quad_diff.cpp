#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "zalcman/errors.hpp"
#include "zalcman/quad_diff.hpp"

using namespace zalcman;
constexpr double kPi = std::numbers::pi;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("QuadDiffT1 hypotheses") {
  CHECK_THROWS_AS(QuadDiffT1({-1.0, 1.0}), HypothesisError);
  CHECK_THROWS_AS(QuadDiffT1({0.0, 1.0}), HypothesisError);
  CHECK_THROWS_AS(QuadDiffT1({1.0, 0.0}), HypothesisError);
}

TEST_CASE("q_of_xi examples") {
  // a2 = 1 itself violates the hypothesis; a vanishing imaginary part is algebraically the same.
  const QuadDiffT1 near_one({1.0, 1e-300});
  CHECK(std::abs(q_of_xi(near_one, 1.0) - Complex{1.0}) < 1e-14);
  CHECK_THROWS_AS(q_of_xi(near_one, 0.0), PoleError);
  CHECK_THROWS_AS(q_star_of_w(near_one, 0.0), PoleError);

  const QuadDiffT1 qd({1.0, 1.0});
  for (const double xi : {-3.0, 0.5, 6.0, 11.0}) {
    const Complex qx = q_of_xi(qd, xi) * xi;
    CHECK(qx.imag() == doctest::Approx(6.0 * 1.0 * 1.0 - 1.0 * xi));
  }
  for (const Complex z : critical_points(qd).zeros) CHECK(std::abs(q_of_xi(qd, z)) < 1e-10);
}

TEST_CASE("real_axis_report examples") {
  auto r = real_axis_report(QuadDiffT1({1.0, 1.0}));
  CHECK(r.xi_star == doctest::Approx(6.0));
  CHECK(r.re_at_xi_star == doctest::Approx(-7.0));
  CHECK(r.re_direct == doctest::Approx(-7.0));
  CHECK(r.im_slope_check < 1e-12);
  CHECK(r.im_sign_changes_pos == 1);
  CHECK(r.im_sign_changes_neg == 0);

  r = real_axis_report(QuadDiffT1({2.0, 1.0}));
  CHECK(r.xi_star == doctest::Approx(12.0));
  CHECK(r.re_at_xi_star == doctest::Approx(-159.0 / 12.0));
}

TEST_CASE("critical_points examples") {
  const double s13 = std::sqrt(13.0);
  auto sing = critical_points(QuadDiffT1({1.0, 1e-300}));
  CHECK(sing.zeros[0].real() == doctest::Approx(1.30278).epsilon(1e-5));
  CHECK(sing.zeros[1].real() == doctest::Approx(-2.30278).epsilon(1e-5));
  CHECK(sing.simple_pole == Complex{});
  CHECK(sing.pole_order_at_infinity == 5);

  sing = critical_points(QuadDiffT1({1e-300, 1.0}));
  CHECK(std::abs(sing.zeros[0] - Complex{0.0, (-1.0 + s13) / 2.0}) < 1e-12);
  CHECK(std::abs(sing.zeros[1] - Complex{0.0, (-1.0 - s13) / 2.0}) < 1e-12);
}

TEST_CASE("zero directions are three directions 2pi/3 apart along which Q u^2 > 0") {
  const QuadDiffT1 qd({1.0, 0.5});
  for (const Complex z0 : critical_points(qd).zeros) {
    const auto dirs = zero_directions(qd, z0);
    for (int i = 0; i < 3; ++i) {
      const double gap = std::arg(dirs[(i + 1) % 3] / dirs[i]);
      CHECK(std::abs(std::abs(gap) - 2.0 * kPi / 3.0) < 1e-9);
      const Complex w = q_of_xi(qd, z0 + 1e-6 * dirs[i]) * dirs[i] * dirs[i];
      CHECK(w.real() > 0.0);
      CHECK(std::abs(w.imag()) < 1e-3 * std::abs(w));
    }
  }
}

TEST_CASE("trajectory from the pole: single direction, small defect, half-plane verdict") {
  for (const Complex a2 : {Complex{1.0, 0.5}, Complex{1.0, -0.5}}) {
    const QuadDiffT1 qd(a2);
    const auto line = trace_from_pole(qd);
    CHECK(line.points.front() == Complex{});
    CHECK(std::abs(std::arg(line.points[1] / pole_direction(qd))) < 1e-12);
    CHECK(trajectory_defect(qd, line) < 1e-3);
    const auto v = half_plane_check(std::span(&line, 1), 1e-3);
    CHECK(v.crossings == 0);
    CHECK(v.verdict);
    // Near the origin Q ~ 3 a2^2 / xi, so the trajectory leaves along e^{-2i arg a2}
    // and stays in the half-plane opposite to Im a2.
    CHECK(line.points.back().imag() * a2.imag() < 0.0);
  }
}

TEST_CASE("conjugating a2 mirrors the trajectory") {
  TraceOptions opts;
  opts.ds = 2e-3;
  const auto up = trace_from_pole(QuadDiffT1({1.0, 0.5}), opts);
  const auto down = trace_from_pole(QuadDiffT1({1.0, -0.5}), opts);
  REQUIRE(up.points.size() == down.points.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < up.points.size(); ++i)
    worst = std::max(worst, std::abs(std::conj(up.points[i]) - down.points[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("a trajectory aimed at the origin along the pole direction terminates there") {
  const QuadDiffT1 qd({1.0, 0.5});
  const Complex u = pole_direction(qd);
  TraceOptions opts;
  opts.initial_heading = -u;
  const auto line = trace_trajectory(qd, 0.05 * u, 1, opts);
  CHECK(line.termination == Termination::ReachedPole);
  CHECK(std::abs(line.points.back()) < 2.0 * opts.ds + 1e-12);
}

TEST_CASE("trace_trajectory errors") {
  const QuadDiffT1 qd({1.0, 0.5});
  CHECK_THROWS_AS(trace_trajectory(qd, 0.0, 1), DomainError);
  CHECK_THROWS_AS(trace_trajectory(qd, critical_points(qd).zeros[0], 1), DomainError);
  CHECK_THROWS_AS(trace_trajectory(qd, 1.0, 0), DomainError);
}

TEST_CASE("step limit and escape terminations") {
  const QuadDiffT1 qd({1.0, 0.5});
  TraceOptions opts;
  opts.max_steps = 10;
  CHECK(trace_from_pole(qd, opts).termination == Termination::StepLimit);
  CHECK(trace_from_pole(qd).termination == Termination::EscapedRadius);
  CHECK(to_string(Termination::ReachedZero) == "reached-zero");
}

TEST_CASE("half_plane_check on a synthetic crossing") {
  const TrajectoryPolyline line{{{1.0, 1.0}, {3.0, 0.5}, {3.0, -0.5}, {4.0, -1.0}}, Termination::StepLimit};
  const auto v = half_plane_check(std::span(&line, 1), 1e-3);
  CHECK(v.crossings >= 1);
  CHECK_FALSE(v.verdict);
}

TEST_CASE("SVG output") {
  const TrajectoryPolyline a{{{0.0, 0.0}, {1.0, 1.0}, {2.0, 1.5}}, Termination::StepLimit};
  const TrajectoryPolyline b{{{0.0, 0.0}, {-1.0, 0.5}}, Termination::StepLimit};
  const std::vector<TrajectoryPolyline> lines{a, b};
  const SvgAnnotations ann{{{1.0, 0.2}}, {{0.0, 0.0}}, 6.0};

  const std::string svg = render_svg(lines, ann);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count(svg, "<path") == 2);

  const auto dir = std::filesystem::temp_directory_path() / "zalcman_unit_svg";
  std::filesystem::create_directories(dir);
  emit_svg(lines, ann, dir / "one.svg");
  emit_svg(lines, ann, dir / "two.svg");
  CHECK(slurp(dir / "one.svg") == slurp(dir / "two.svg"));
  CHECK(slurp(dir / "one.svg") == svg);

  CHECK_THROWS_AS(render_svg(std::vector<TrajectoryPolyline>{}, ann), DomainError);
  CHECK_THROWS_AS(emit_svg(lines, ann, dir / "missing" / "x.svg"), IoError);

  write_polyline_csv(a, dir / "a.csv");
  const std::string csv = slurp(dir / "a.csv");
  CHECK(csv.rfind("index,re,im\n", 0) == 0);
  CHECK(count(csv, "\n") == 4);
  std::filesystem::remove_all(dir);
}
