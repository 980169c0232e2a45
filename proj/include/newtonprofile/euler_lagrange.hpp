#pragma once

#include <functional>
#include <vector>

#include "newtonprofile/flow.hpp"

namespace newtonprofile {

/// Stationarity problem for the linear freestream v(x) = k x. Integrating the
/// Euler-Lagrange equation once gives x^2 p + c (1 + p^2)^2 = 0 for the slope
/// p = f'(x), with c the integration constant.
struct ELProblem {
  double k = 1.0;
  double c = 0.0;
};

/// x^2 p + c (1 + p^2)^2.
double quartic_value(const ELProblem& prob, double x, double p) noexcept;

/// Root bound R = 1 + (x^2 + 16|c|) / |c| for c != 0.
double quartic_root_bound(const ELProblem& prob, double x);

/// Real roots of the slope quartic at abscissa x, ascending, roots closer than
/// 1e-9 merged. The quartic's derivative x^2 + 4cp(1+p^2) is strictly monotone
/// in p, so there is a single turning point and at most two distinct real
/// roots; both are bracketed against that turning point and bisected to full
/// double precision.
///
/// For c = 0 the equation collapses to x^2 p = 0 and the result is {0}.
std::vector<double> quartic_real_roots(const ELProblem& prob, double x);

/// x^2 p / (1 + p^2)^2, the quantity held constant along a stationary profile.
double el_bracket(double x, double slope) noexcept;

using SlopeField = std::function<double(double)>;

/// Central-difference residual of the Euler-Lagrange equation,
///   -2 rho k^2 d/dx [x^2 f'(x) / (1 + f'(x)^2)^2],
/// at x with step h. cfg.velocity must be of the form k x.
double el_residual(const FlowConfig& cfg, const SlopeField& slope, double x, double h);

/// k from a velocity polynomial of the form [0, k] (trailing zeros allowed).
/// Throws std::invalid_argument for any other shape.
double linear_velocity_coefficient(const VelocityPolynomial& v);

}  // namespace newtonprofile
