#include "newtonprofile/flow.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace newtonprofile {

VelocityPolynomial::VelocityPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw std::invalid_argument("velocity coefficients must be finite");
  }
}

double VelocityPolynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

VelocityPolynomial VelocityPolynomial::scaled(double factor) const {
  std::vector<double> out = coefficients_;
  for (double& c : out) c *= factor;
  return VelocityPolynomial(std::move(out));
}

void FlowConfig::validate() const {
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("density rho must be finite and >= 0, got " +
                                std::to_string(rho));
  }
}

double velocity_at(const VelocityPolynomial& v, double x) noexcept { return v(x); }

double pressure(const FlowConfig& cfg, double x, double slope) noexcept {
  const double v = cfg.velocity(x);
  return cfg.rho * v * v / (1.0 + slope * slope);
}

namespace {

// Integrand without the rho factor; rho is applied once after integration.
double unit_density_integrand(const VelocityPolynomial& v, const QuadraticBezier& curve,
                              double t) {
  const Point2 p = curve.eval(t);
  const Point2 d = curve.deriv(t);
  const double speed = v(p.x);
  return speed * speed * d.x * d.x * d.x / (d.x * d.x + d.y * d.y);
}

}  // namespace

double parametric_integrand(const FlowConfig& cfg, const QuadraticBezier& curve, double t) {
  return cfg.rho * unit_density_integrand(cfg.velocity, curve, t);
}

double eq8_integrand(double apex, double t) noexcept {
  const double a = apex;
  const double u = a + t - 2.0 * a * t;
  const double w = 2.0 * a + t - 2.0 * a * t;
  const double s = 1.0 - 2.0 * t;
  const double t2 = t * t;
  const double t6 = t2 * t2 * t2;
  const double w2 = w * w;
  const double w6 = w2 * w2 * w2;
  return 50.0 * t6 * (u * u * u) * w6 / (u * u + s * s);
}

double total_force_parametric(const FlowConfig& cfg, const QuadraticBezier& curve,
                              const QuadratureSpec& quad) {
  cfg.validate();
  const double integral = integrate(
      [&](double t) { return unit_density_integrand(cfg.velocity, curve, t); }, quad);
  return cfg.rho * integral;
}

double total_force_cartesian(const FlowConfig& cfg, const QuadraticBezier& curve,
                             const QuadratureSpec& quad) {
  cfg.validate();
  if (!curve.has_cartesian_form()) {
    throw std::domain_error("total_force_cartesian needs 0 < apex < 1, got apex = " +
                            std::to_string(curve.apex()));
  }
  const FlowConfig unit{1.0, cfg.velocity};
  const double integral = integrate(
      [&](double x) { return pressure(unit, x, curve.cartesian_slope(curve.invert_x(x))); }, quad);
  return cfg.rho * integral;
}

}  // namespace newtonprofile
