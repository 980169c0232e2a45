#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace newtonprofile {

enum class QuadMethod { adaptive_simpson, gauss_legendre, riemann_oracle };

/// Integration settings for integrals over [0,1].
/// abs_tol and max_depth drive adaptive Simpson; node_count drives
/// Gauss-Legendre (nodes) and the Riemann oracle (midpoint panels).
struct QuadratureSpec {
  QuadMethod method = QuadMethod::adaptive_simpson;
  double abs_tol = 1e-10;
  int max_depth = 40;
  int node_count = 64;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;

  static QuadratureSpec simpson(double abs_tol = 1e-10, int max_depth = 40);
  static QuadratureSpec gauss(int nodes = 64);
  static QuadratureSpec riemann(int panels);
};

/// Raised when adaptive refinement hits max_depth with an interval still
/// above its share of the tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double left, double right)
      : std::runtime_error(what), left_(left), right_(right) {}
  double left() const noexcept { return left_; }
  double right() const noexcept { return right_; }

 private:
  double left_;
  double right_;
};

using Integrand = std::function<double(double)>;

/// Gauss-Legendre rule on [-1,1]; nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Nodes from Newton iteration on P_n, started at the Chebyshev-like guess
  /// cos(pi (i - 1/4) / (n + 1/2)). Weights 2 / ((1 - x^2) P_n'(x)^2).
  static GaussLegendreRule build(int n);
};

double integrate(const Integrand& fn, const QuadratureSpec& spec);

double integrate_adaptive_simpson(const Integrand& fn, double abs_tol, int max_depth);
double integrate_gauss_legendre(const Integrand& fn, const GaussLegendreRule& rule);
double integrate_riemann(const Integrand& fn, long panels);

}  // namespace newtonprofile
