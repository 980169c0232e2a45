#pragma once

#include <vector>

#include "newtonprofile/bezier.hpp"
#include "newtonprofile/quad.hpp"

namespace newtonprofile {

/// Freestream speed v(x) = sum_k c_k x^k, coefficients in ascending powers.
/// An empty coefficient list is the zero flow.
class VelocityPolynomial {
 public:
  VelocityPolynomial() = default;
  explicit VelocityPolynomial(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  /// Horner evaluation.
  double operator()(double x) const noexcept;

  VelocityPolynomial scaled(double factor) const;

 private:
  std::vector<double> coefficients_;
};

/// Fluid density plus the freestream speed profile. Default rho = 1; rho only
/// scales the force, so it never moves the optimal apex.
struct FlowConfig {
  double rho = 1.0;
  VelocityPolynomial velocity;

  /// Throws std::invalid_argument unless rho >= 0 and finite.
  void validate() const;
};

double velocity_at(const VelocityPolynomial& v, double x) noexcept;

/// Newton sin-squared law: rho v(x)^2 sin^2(alpha) = rho v(x)^2 / (1 + slope^2).
double pressure(const FlowConfig& cfg, double x, double slope) noexcept;

/// rho v(b1)^2 b1'^3 / (b1'^2 + b2'^2): the resistance integrand in the curve
/// parameter t. Finite on the closed family apex in [0,1].
double parametric_integrand(const FlowConfig& cfg, const QuadraticBezier& curve, double t);

/// The same integrand written out for v(x) = -5x^3 and rho = 1:
/// 50 t^6 (a+t-2at)^3 (2a+t-2at)^6 / ((a+t-2at)^2 + (1-2t)^2).
double eq8_integrand(double apex, double t) noexcept;

/// F(a) = rho * int_0^1 v(b1)^2 b1'^3 / (b1'^2 + b2'^2) dt.
double total_force_parametric(const FlowConfig& cfg, const QuadraticBezier& curve,
                              const QuadratureSpec& quad);

/// F = rho * int_0^1 v(x)^2 / (1 + f'(x)^2) dx with f' found through
/// invert_x and cartesian_slope. Requires 0 < apex < 1.
double total_force_cartesian(const FlowConfig& cfg, const QuadraticBezier& curve,
                             const QuadratureSpec& quad);

}  // namespace newtonprofile
