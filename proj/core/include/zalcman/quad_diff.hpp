#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zalcman/power_series.hpp"

namespace zalcman {

/// Quadratic differential Q(xi) dxi^2 = -(-3 a_2^2 + a_2 xi + xi^2) dxi^2 / xi
/// attached to extremals of |2 a_2 a_3 - a_4| after the inversion xi = 1/w.
///
/// At lambda = 2 the w-plane coefficients are A_2 = -3 a_2^2, A_3 = a_2, A_4 = 1,
/// so the differential depends on a_2 alone.
class QuadDiffT1 {
 public:
  /// Throws HypothesisError unless Re a_2 > 0 and Im a_2 != 0.
  explicit QuadDiffT1(Complex a2);

  Complex a2() const noexcept { return a2_; }
  double x2() const noexcept { return a2_.real(); }
  double y2() const noexcept { return a2_.imag(); }

 private:
  Complex a2_;
};

/// Q(xi) = -(-3 a_2^2 + a_2 xi + xi^2) / xi. Throws PoleError at xi = 0.
Complex q_of_xi(const QuadDiffT1& qd, Complex xi);

/// The w-plane form Q*(w) = -(-3 a_2^2 w^2 + a_2 w + 1) / w^5. Throws PoleError at w = 0.
Complex q_star_of_w(const QuadDiffT1& qd, Complex w);

struct RealAxisReport {
  double xi_star;           ///< 6 x_2, the only real zero of Im Q
  double im_slope_check;    ///< max |Im Q(xi) - (6 x_2 y_2 - y_2 xi)/xi| on the grid
  double re_at_xi_star;     ///< -(3 y_2^2 + 39 x_2^2) / (6 x_2)
  double re_direct;         ///< Re Q(6 x_2) by direct evaluation
  int im_sign_changes_pos;  ///< sign changes of Im Q on (0, half_width]
  int im_sign_changes_neg;  ///< sign changes of Im Q on [-half_width, 0)
};

/// Evaluates Im Q and Re Q along real xi on a grid of `samples` points in
/// [-half_width, half_width] \ {0}.
RealAxisReport real_axis_report(const QuadDiffT1& qd, double half_width = 20.0, int samples = 4001);

enum class SingularityKind { SimpleZero, SimplePole, HighOrderPole };

struct Singularities {
  std::array<Complex, 2> zeros;  ///< a_2 (-1 +- sqrt 13) / 2
  Complex simple_pole;           ///< origin
  int pole_order_at_infinity;    ///< Q ~ -xi at infinity: pole of order 5 in the local chart
};

Singularities critical_points(const QuadDiffT1& qd);

/// The three directions exp(i psi) along which trajectories leave a simple zero.
std::array<Complex, 3> zero_directions(const QuadDiffT1& qd, Complex zero);

/// The unique direction in which a trajectory leaves the simple pole at the origin.
Complex pole_direction(const QuadDiffT1& qd);

/// Unit direction u with Q(xi) u^2 > 0, principal branch (arg u in (-pi/2, pi/2]).
Complex principal_direction(const QuadDiffT1& qd, Complex xi);

enum class Termination { ReachedPole, ReachedZero, StepLimit, EscapedRadius };

std::string to_string(Termination t);

struct TrajectoryPolyline {
  std::vector<Complex> points;
  Termination termination = Termination::StepLimit;
};

struct TraceOptions {
  double ds = 1e-3;            ///< nominal Euclidean step in the xi-plane
  int max_steps = 1'000'000;
  double escape_radius = 0.0;  ///< <= 0 selects 50 |a_2|
  double capture_radius = 0.0; ///< singularity capture distance; <= 0 selects 2 ds
  int max_halvings = 30;
  std::optional<Complex> initial_heading;  ///< overrides orientation * principal_direction
};

/// Integrates dxi/ds = orientation * e^{i delta(xi)} with Q(xi) e^{2 i delta} > 0,
/// continuing the branch of delta from step to step (RK4 with aligned stages).
/// Steps are halved while the heading turns by more than pi/4; a turn above
/// pi/2 at the smallest step raises BranchError.
TrajectoryPolyline trace_trajectory(const QuadDiffT1& qd, Complex start, int orientation,
                                    const TraceOptions& options = {});

/// The critical trajectory leaving the origin (the candidate image of the unit circle).
TrajectoryPolyline trace_from_pole(const QuadDiffT1& qd, const TraceOptions& options = {});

struct HalfPlaneVerdict {
  int crossings;
  bool verdict;
};

/// Counts sign changes of Im xi along each polyline, ignoring points within
/// `tol` of the origin. The verdict holds iff no crossing is found.
HalfPlaneVerdict half_plane_check(std::span<const TrajectoryPolyline> polylines, double tol);

/// Largest per-step |Im(Q (dxi)^2)| / |Q (dxi)^2| along a polyline, Q at segment midpoints.
double trajectory_defect(const QuadDiffT1& qd, const TrajectoryPolyline& line);

struct SvgAnnotations {
  std::vector<Complex> zeros;
  std::vector<Complex> poles;
  std::optional<double> xi_star;
};

/// Writes an SVG 1.1 picture: one path per polyline, the real axis, singularities
/// and the point xi = 6 x_2. Deterministic for fixed input. Throws DomainError on
/// empty input and IoError if the file cannot be written.
void emit_svg(std::span<const TrajectoryPolyline> polylines, const SvgAnnotations& annotations,
              const std::filesystem::path& output);

/// Renders the SVG document without touching the filesystem.
std::string render_svg(std::span<const TrajectoryPolyline> polylines,
                       const SvgAnnotations& annotations);

/// CSV with header "index,re,im".
void write_polyline_csv(const TrajectoryPolyline& line, const std::filesystem::path& output);

}  // namespace zalcman
