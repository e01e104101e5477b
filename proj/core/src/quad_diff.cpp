#include "zalcman/quad_diff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "zalcman/errors.hpp"

namespace zalcman {

namespace {

constexpr double kPi = std::numbers::pi;

double turn_angle(Complex from, Complex to) { return std::abs(std::arg(to * std::conj(from))); }

}  // namespace

QuadDiffT1::QuadDiffT1(Complex a2) : a2_(a2) {
  if (!(a2.real() > 0.0)) throw HypothesisError("QuadDiffT1: requires Re a_2 > 0");
  if (a2.imag() == 0.0) throw HypothesisError("QuadDiffT1: requires Im a_2 != 0");
}

Complex q_of_xi(const QuadDiffT1& qd, Complex xi) {
  if (xi == Complex{}) throw PoleError("q_of_xi: simple pole at xi = 0");
  const Complex a2 = qd.a2();
  return -(-3.0 * a2 * a2 + a2 * xi + xi * xi) / xi;
}

Complex q_star_of_w(const QuadDiffT1& qd, Complex w) {
  if (w == Complex{}) throw PoleError("q_star_of_w: pole at w = 0");
  const Complex a2 = qd.a2();
  return -(-3.0 * a2 * a2 * w * w + a2 * w + 1.0) / std::pow(w, 5);
}

RealAxisReport real_axis_report(const QuadDiffT1& qd, double half_width, int samples) {
  if (samples < 3 || !(half_width > 0.0)) throw DomainError("real_axis_report: bad grid");
  const double x2 = qd.x2();
  const double y2 = qd.y2();
  RealAxisReport out{};
  out.xi_star = 6.0 * x2;
  out.re_at_xi_star = -(3.0 * y2 * y2 + 39.0 * x2 * x2) / (6.0 * x2);
  out.re_direct = q_of_xi(qd, out.xi_star).real();

  int last_pos = 0;
  int last_neg = 0;
  auto count = [](int& last, double value, int& changes) {
    const int sign = (value > 0) - (value < 0);
    if (sign == 0) return;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  };
  // Walk outward from the pole on each side so the pole itself never counts.
  const int half = samples / 2;
  for (int i = 1; i <= half; ++i) {
    const double t = half_width * i / half;
    for (const double xi : {t, -t}) {
      const double im = q_of_xi(qd, xi).imag();
      const double closed = (6.0 * x2 * y2 - y2 * xi) / xi;
      out.im_slope_check = std::max(out.im_slope_check, std::abs(im - closed));
      if (xi > 0) {
        count(last_pos, im, out.im_sign_changes_pos);
      } else {
        count(last_neg, im, out.im_sign_changes_neg);
      }
    }
  }
  return out;
}

Singularities critical_points(const QuadDiffT1& qd) {
  const double root13 = std::sqrt(13.0);
  const Complex a2 = qd.a2();
  return {{a2 * (-1.0 + root13) / 2.0, a2 * (-1.0 - root13) / 2.0}, Complex{}, 5};
}

std::array<Complex, 3> zero_directions(const QuadDiffT1& qd, Complex zero) {
  // Near a simple zero Q ~ Q'(zero)(xi - zero); along xi = zero + rho e^{i psi}
  // Q dxi^2 > 0 needs arg Q'(zero) + 3 psi = 0 mod 2 pi.
  // Q(xi) = -(xi + a_2 - 3 a_2^2 / xi), so Q'(xi) = -(1 + 3 a_2^2 / xi^2).
  const Complex a2 = qd.a2();
  const Complex slope = -(1.0 + 3.0 * a2 * a2 / (zero * zero));
  const double base = -std::arg(slope) / 3.0;
  return {std::polar(1.0, base), std::polar(1.0, base + 2.0 * kPi / 3.0),
          std::polar(1.0, base + 4.0 * kPi / 3.0)};
}

Complex pole_direction(const QuadDiffT1& qd) {
  // Q ~ 3 a_2^2 / xi near 0; with xi = rho e^{i psi}: 3 a_2^2 e^{i psi} > 0.
  return std::polar(1.0, -2.0 * std::arg(qd.a2()));
}

Complex principal_direction(const QuadDiffT1& qd, Complex xi) {
  return std::polar(1.0, -0.5 * std::arg(q_of_xi(qd, xi)));
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::ReachedPole:
      return "reached-pole";
    case Termination::ReachedZero:
      return "reached-zero";
    case Termination::StepLimit:
      return "step-limit";
    case Termination::EscapedRadius:
      return "escaped-radius";
  }
  return "unknown";
}

TrajectoryPolyline trace_trajectory(const QuadDiffT1& qd, Complex start, int orientation,
                                    const TraceOptions& options) {
  if (!(options.ds > 0.0)) throw DomainError("trace_trajectory: ds must be positive");
  if (orientation != 1 && orientation != -1) {
    throw DomainError("trace_trajectory: orientation must be +1 or -1");
  }
  const Singularities sing = critical_points(qd);
  if (start == sing.simple_pole || start == sing.zeros[0] || start == sing.zeros[1]) {
    throw DomainError("trace_trajectory: start is a singularity");
  }
  const double escape = options.escape_radius > 0 ? options.escape_radius : 50.0 * std::abs(qd.a2());
  const double capture = options.capture_radius > 0 ? options.capture_radius : 2.0 * options.ds;

  auto field = [&](Complex xi, Complex reference) {
    Complex u = principal_direction(qd, xi);
    if ((u * std::conj(reference)).real() < 0.0) u = -u;
    return u;
  };
  // Inside the capture disk and moving towards its centre.
  auto approaching = [&](Complex xi, Complex heading, Complex centre) {
    const Complex offset = xi - centre;
    return std::abs(offset) < capture && (heading * std::conj(offset)).real() < 0.0;
  };

  TrajectoryPolyline line;
  line.points.push_back(start);
  Complex xi = start;
  Complex heading = options.initial_heading
                        ? *options.initial_heading / std::abs(*options.initial_heading)
                        : static_cast<double>(orientation) * principal_direction(qd, xi);

  for (int step = 0; step < options.max_steps; ++step) {
    if (std::abs(xi) > escape) {
      line.termination = Termination::EscapedRadius;
      return line;
    }
    if (approaching(xi, heading, sing.simple_pole)) {
      line.termination = Termination::ReachedPole;
      return line;
    }
    if (approaching(xi, heading, sing.zeros[0]) || approaching(xi, heading, sing.zeros[1])) {
      line.termination = Termination::ReachedZero;
      return line;
    }

    double h = options.ds;
    Complex delta;
    Complex next_heading;
    for (int halving = 0;; ++halving) {
      const Complex k1 = field(xi, heading);
      const Complex k2 = field(xi + 0.5 * h * k1, k1);
      const Complex k3 = field(xi + 0.5 * h * k2, k2);
      const Complex k4 = field(xi + h * k3, k3);
      delta = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      next_heading = k4;
      const double turn = std::max(turn_angle(heading, k1), turn_angle(k1, k4));
      if (turn <= kPi / 4.0) break;
      if (halving >= options.max_halvings) {
        if (turn > kPi / 2.0) {
          throw BranchError("trace_trajectory: heading jumped by " + std::to_string(turn) +
                            " rad at xi = (" + std::to_string(xi.real()) + ", " +
                            std::to_string(xi.imag()) + ")");
        }
        break;
      }
      h *= 0.5;
    }
    xi += delta;
    heading = next_heading;
    line.points.push_back(xi);
  }
  line.termination = Termination::StepLimit;
  return line;
}

TrajectoryPolyline trace_from_pole(const QuadDiffT1& qd, const TraceOptions& options) {
  const Complex dir = pole_direction(qd);
  TraceOptions opts = options;
  opts.initial_heading = dir;
  TrajectoryPolyline line = trace_trajectory(qd, 0.5 * options.ds * dir, 1, opts);
  line.points.insert(line.points.begin(), Complex{});
  return line;
}

HalfPlaneVerdict half_plane_check(std::span<const TrajectoryPolyline> polylines, double tol) {
  int crossings = 0;
  for (const auto& line : polylines) {
    int last = 0;
    for (const Complex& p : line.points) {
      if (std::abs(p) <= tol) continue;
      const int sign = (p.imag() > 0) - (p.imag() < 0);
      if (sign == 0) continue;
      if (last != 0 && sign != last) ++crossings;
      last = sign;
    }
  }
  return {crossings, crossings == 0};
}

double trajectory_defect(const QuadDiffT1& qd, const TrajectoryPolyline& line) {
  double worst = 0.0;
  for (std::size_t i = 1; i < line.points.size(); ++i) {
    const Complex step = line.points[i] - line.points[i - 1];
    const Complex mid = 0.5 * (line.points[i] + line.points[i - 1]);
    if (step == Complex{} || mid == Complex{}) continue;
    const Complex form = q_of_xi(qd, mid) * step * step;
    worst = std::max(worst, std::abs(form.imag()) / std::abs(form));
  }
  return worst;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(std::span<const TrajectoryPolyline> polylines,
                       const SvgAnnotations& annotations) {
  if (polylines.empty()) throw DomainError("emit_svg: no polylines to draw");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  auto extend = [&](Complex p) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  };
  for (const auto& line : polylines) std::for_each(line.points.begin(), line.points.end(), extend);
  std::for_each(annotations.zeros.begin(), annotations.zeros.end(), extend);
  std::for_each(annotations.poles.begin(), annotations.poles.end(), extend);
  if (annotations.xi_star) extend(Complex{*annotations.xi_star, 0.0});
  extend(Complex{});
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad = 0.05 * span;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double stroke = span / 400.0;
  const double marker = span / 120.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
      << "viewBox=\"" << fmt(min_x) << ' ' << fmt(-max_y) << ' ' << fmt(max_x - min_x) << ' '
      << fmt(max_y - min_y) << "\">\n";
  // The y axis is flipped so Im(xi) grows upwards.
  svg << "<line class=\"real-axis\" x1=\"" << fmt(min_x) << "\" y1=\"0\" x2=\"" << fmt(max_x)
      << "\" y2=\"0\" stroke=\"#888888\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  for (std::size_t i = 0; i < polylines.size(); ++i) {
    const auto& pts = polylines[i].points;
    if (pts.empty()) continue;
    svg << "<path class=\"trajectory\" id=\"trajectory-" << i << "\" fill=\"none\" stroke=\""
        << (i == 0 ? "#c0392b" : "#2c3e50") << "\" stroke-width=\"" << fmt(stroke) << "\" d=\"M";
    // Thin to roughly one vertex per 1/2000 of the picture.
    const double min_gap = span / 2000.0;
    Complex last = pts.front();
    svg << ' ' << fmt(last.real()) << ' ' << fmt(-last.imag());
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (k + 1 != pts.size() && std::abs(pts[k] - last) < min_gap) continue;
      last = pts[k];
      svg << " L " << fmt(last.real()) << ' ' << fmt(-last.imag());
    }
    svg << "\"/>\n";
  }
  for (const Complex& z : annotations.zeros) {
    svg << "<circle class=\"zero\" cx=\"" << fmt(z.real()) << "\" cy=\"" << fmt(-z.imag())
        << "\" r=\"" << fmt(marker) << "\" fill=\"#27ae60\"/>\n";
  }
  for (const Complex& z : annotations.poles) {
    svg << "<circle class=\"pole\" cx=\"" << fmt(z.real()) << "\" cy=\"" << fmt(-z.imag())
        << "\" r=\"" << fmt(marker) << "\" fill=\"none\" stroke=\"#8e44ad\" stroke-width=\""
        << fmt(stroke) << "\"/>\n";
  }
  if (annotations.xi_star) {
    svg << "<circle class=\"xi-star\" cx=\"" << fmt(*annotations.xi_star) << "\" cy=\"0\" r=\""
        << fmt(marker) << "\" fill=\"#f39c12\"/>\n"
        << "<text x=\"" << fmt(*annotations.xi_star) << "\" y=\"" << fmt(-2.0 * marker)
        << "\" font-size=\"" << fmt(3.0 * marker) << "\">xi = 6 x2</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(std::span<const TrajectoryPolyline> polylines, const SvgAnnotations& annotations,
              const std::filesystem::path& output) {
  const std::string doc = render_svg(polylines, annotations);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw IoError("emit_svg: cannot open " + output.string());
  out << doc;
  if (!out) throw IoError("emit_svg: write failed for " + output.string());
}

void write_polyline_csv(const TrajectoryPolyline& line, const std::filesystem::path& output) {
  std::ofstream out(output, std::ios::binary);
  if (!out) throw IoError("write_polyline_csv: cannot open " + output.string());
  out << "index,re,im\n";
  char buf[96];
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, line.points[i].real(),
                  line.points[i].imag());
    out << buf;
  }
  if (!out) throw IoError("write_polyline_csv: write failed for " + output.string());
}

}  // namespace zalcman
