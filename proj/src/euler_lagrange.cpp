#include "newtonprofile/euler_lagrange.hpp"

#include <cmath>
#include <stdexcept>

namespace newtonprofile {

namespace {

constexpr double kMergeDistance = 1e-9;

// Bisection on a sign change of g over [lo, hi]; runs until the midpoint
// stops moving.
template <typename Fn>
double bisect(const Fn& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  const double glo_abs = std::abs(g(lo));
  const double ghi_abs = std::abs(g(hi));
  return glo_abs <= ghi_abs ? lo : hi;
}

}  // namespace

double quartic_value(const ELProblem& prob, double x, double p) noexcept {
  const double q = 1.0 + p * p;
  return x * x * p + prob.c * q * q;
}

double quartic_root_bound(const ELProblem& prob, double x) {
  if (prob.c == 0.0) throw std::invalid_argument("root bound undefined for c = 0");
  return 1.0 + (x * x + 16.0 * std::abs(prob.c)) / std::abs(prob.c);
}

std::vector<double> quartic_real_roots(const ELProblem& prob, double x) {
  if (prob.c == 0.0) return {0.0};

  const double bound = quartic_root_bound(prob, x);
  const auto g = [&](double p) { return quartic_value(prob, x, p); };
  const auto dg = [&](double p) { return x * x + 4.0 * prob.c * p * (1.0 + p * p); };

  // g' runs from sign(-c)*inf to sign(c)*inf; its single zero is the turning point.
  const double x2 = x * x;
  double turning = 0.0;
  if (x2 != 0.0) {
    const double reach = std::cbrt(x2 / (4.0 * std::abs(prob.c))) + 1.0;
    turning = bisect(dg, -reach, reach);
  }
  const double extreme = g(turning);

  // c > 0: g is convex with minimum `extreme`; c < 0: concave with maximum.
  const bool crosses = prob.c > 0.0 ? extreme < 0.0 : extreme > 0.0;
  if (!crosses) {
    if (extreme == 0.0) return {turning};
    return {};
  }

  const double left = bisect(g, -bound, turning);
  const double right = bisect(g, turning, bound);
  if (right - left <= kMergeDistance) return {0.5 * (left + right)};
  return {left, right};
}

double el_bracket(double x, double slope) noexcept {
  const double q = 1.0 + slope * slope;
  return x * x * slope / (q * q);
}

double linear_velocity_coefficient(const VelocityPolynomial& v) {
  const auto& cs = v.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i != 1 && cs[i] != 0.0) {
      throw std::invalid_argument("Euler-Lagrange residual needs a velocity of the form k*x");
    }
  }
  return cs.size() > 1 ? cs[1] : 0.0;
}

double el_residual(const FlowConfig& cfg, const SlopeField& slope, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step h must be positive");
  if (!(x - h >= 0.0)) throw std::invalid_argument("el_residual needs x - h >= 0");
  const double k = linear_velocity_coefficient(cfg.velocity);
  const double fwd = el_bracket(x + h, slope(x + h));
  const double bwd = el_bracket(x - h, slope(x - h));
  return -2.0 * cfg.rho * k * k * (fwd - bwd) / (2.0 * h);
}

}  // namespace newtonprofile
