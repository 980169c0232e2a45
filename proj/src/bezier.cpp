#include "newtonprofile/bezier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace newtonprofile {

namespace {

constexpr double kMinSpeed = 1e-14;
constexpr double kInversionSlack = 1e-9;

void require_unit(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string(what) + " = " + std::to_string(value) +
                            " lies outside [0,1]");
  }
}

}  // namespace

QuadraticBezier::QuadraticBezier(double apex) : apex_(apex) {
  require_unit(apex, "apex");
}

std::array<Point2, 3> QuadraticBezier::control_points() const noexcept {
  return {Point2{0.0, 0.0}, Point2{apex_, 1.0}, Point2{1.0, 0.0}};
}

bool QuadraticBezier::has_cartesian_form() const noexcept {
  return apex_ > 0.0 && apex_ < 1.0;
}

void QuadraticBezier::require_cartesian(const char* op) const {
  if (!has_cartesian_form()) {
    throw std::domain_error(std::string(op) + ": apex = " + std::to_string(apex_) +
                            " has no cartesian representation (needs 0 < apex < 1)");
  }
}

Point2 QuadraticBezier::eval(double t) const {
  require_unit(t, "t");
  // Bernstein form keeps the endpoints exact.
  const double s = 1.0 - t;
  const double mid = 2.0 * s * t;
  return {apex_ * mid + t * t, mid};
}

Point2 QuadraticBezier::deriv(double t) const {
  require_unit(t, "t");
  const double s = 1.0 - t;
  return {2.0 * (apex_ * s + (1.0 - apex_) * t), 2.0 - 4.0 * t};
}

double QuadraticBezier::cartesian_slope(double t) const {
  require_cartesian("cartesian_slope");
  const Point2 d = deriv(t);
  if (d.x <= kMinSpeed) {
    throw std::domain_error("cartesian_slope: b1'(t) vanishes at t = " + std::to_string(t));
  }
  return d.y / d.x;
}

double QuadraticBezier::cartesian_curvature(double t) const {
  require_cartesian("cartesian_curvature");
  const Point2 d = deriv(t);
  const double xpp = 2.0 * (1.0 - 2.0 * apex_);
  const double ypp = -4.0;
  return (ypp * d.x - xpp * d.y) / (d.x * d.x * d.x);
}

Sign QuadraticBezier::cartesian_curvature_numerator_sign() const {
  require_cartesian("cartesian_curvature_numerator_sign");
  // Constant in t up to rounding; report the largest sampled value.
  double worst = -std::numeric_limits<double>::infinity();
  for (double t : {0.0, 0.5, 1.0}) {
    const Point2 d = deriv(t);
    const double numerator = -4.0 * d.x - 2.0 * (1.0 - 2.0 * apex_) * d.y;
    worst = std::max(worst, numerator);
  }
  if (worst < 0.0) return Sign::negative;
  if (worst > 0.0) return Sign::positive;
  return Sign::zero;
}

double QuadraticBezier::invert_x(double x) const {
  require_unit(x, "x");
  require_cartesian("invert_x");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  // Root of (1-2a) t^2 + 2a t - x = 0 in the cancellation-free form
  // t = x / (a + sqrt(a^2 + (1-2a) x)); also covers a = 1/2 where t = x.
  const double a = apex_;
  const double disc = (a - x) * (a - x) + x * (1.0 - x);
  double t = x / (a + std::sqrt(disc));

  if (!(t >= -kInversionSlack && t <= 1.0 + kInversionSlack)) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200 && lo < hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (eval(mid).x < x) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    t = 0.5 * (lo + hi);
  }
  return std::clamp(t, 0.0, 1.0);
}

}  // namespace newtonprofile
