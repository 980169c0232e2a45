#pragma once

#include <array>

namespace newtonprofile {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Quadratic Bezier profile with control points (0,0), (apex,1), (1,0).
///
/// The apex may sit anywhere in [0,1]. Parametric evaluation is defined on the
/// closed range; the cartesian operations (slope, curvature, x-inversion) need
/// b1'(t) > 0 on all of [0,1] and therefore reject apex == 0 and apex == 1.
class QuadraticBezier {
 public:
  explicit QuadraticBezier(double apex);

  double apex() const noexcept { return apex_; }
  std::array<Point2, 3> control_points() const noexcept;

  /// True when the cartesian representation y = f(x) exists, i.e. 0 < apex < 1.
  bool has_cartesian_form() const noexcept;

  /// (b1(t), b2(t)). Endpoints map to (0,0) and (1,0) exactly.
  Point2 eval(double t) const;

  /// (b1'(t), b2'(t)).
  Point2 deriv(double t) const;

  /// f'(x(t)) = b2'(t) / b1'(t).
  double cartesian_slope(double t) const;

  /// f''(x(t)) = (b2'' b1' - b1'' b2') / b1'^3, which reduces to -4 / b1'^3.
  double cartesian_curvature(double t) const;

  /// Sign of the curvature numerator b2'' b1' - b1'' b2'. It is the constant -4
  /// for the whole family, so every admissible profile is concave-down (convex body).
  Sign cartesian_curvature_numerator_sign() const;

  /// Unique t in [0,1] with b1(t) = x.
  double invert_x(double x) const;

 private:
  void require_cartesian(const char* op) const;

  double apex_;
};

}  // namespace newtonprofile
