#include "newtonprofile/quad.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <numbers>
#include <sstream>

namespace newtonprofile {

void QuadratureSpec::validate() const {
  switch (method) {
    case QuadMethod::adaptive_simpson:
      if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw std::invalid_argument("quadrature abs_tol must be positive and finite");
      }
      if (max_depth < 1 || max_depth > 60) {
        throw std::invalid_argument("quadrature max_depth must lie in [1, 60]");
      }
      break;
    case QuadMethod::gauss_legendre:
    case QuadMethod::riemann_oracle:
      if (node_count < 2) {
        throw std::invalid_argument("quadrature node_count must be at least 2");
      }
      break;
  }
}

QuadratureSpec QuadratureSpec::simpson(double abs_tol, int max_depth) {
  QuadratureSpec spec;
  spec.method = QuadMethod::adaptive_simpson;
  spec.abs_tol = abs_tol;
  spec.max_depth = max_depth;
  return spec;
}

QuadratureSpec QuadratureSpec::gauss(int nodes) {
  QuadratureSpec spec;
  spec.method = QuadMethod::gauss_legendre;
  spec.node_count = nodes;
  return spec;
}

QuadratureSpec QuadratureSpec::riemann(int panels) {
  QuadratureSpec spec;
  spec.method = QuadMethod::riemann_oracle;
  spec.node_count = panels;
  return spec;
}

namespace {

struct SimpsonState {
  const Integrand& fn;
  int max_depth;
};

double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const SimpsonState& st, double a, double b, double fa, double fm,
                       double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.fn(lm);
  const double frm = st.fn(rm);
  const double left = simpson_rule(a, m, fa, flm, fm);
  const double right = simpson_rule(m, b, fm, frm, fb);
  const double delta = left + right - whole;

  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= st.max_depth) {
    std::ostringstream msg;
    msg << "adaptive Simpson did not converge on [" << a << ", " << b << "]: error estimate "
        << std::abs(delta) / 15.0 << " exceeds " << tol << " at max_depth " << st.max_depth;
    throw QuadratureError(msg.str(), a, b);
  }
  return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive_simpson(const Integrand& fn, double abs_tol, int max_depth) {
  const double fa = fn(0.0);
  const double fm = fn(0.5);
  const double fb = fn(1.0);
  const SimpsonState st{fn, max_depth};
  return simpson_recurse(st, 0.0, 1.0, fa, fm, fb, simpson_rule(0.0, 1.0, fa, fm, fb), abs_tol,
                         1);
}

GaussLegendreRule GaussLegendreRule::build(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  // Returns {P_n(x), P_n'(x)} via the three-term recurrence.
  const auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, dpn] = legendre(x);
      const double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    const double dpn = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);

    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

double integrate_gauss_legendre(const Integrand& fn, const GaussLegendreRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * fn(0.5 * (rule.nodes[i] + 1.0));
  }
  return 0.5 * sum;
}

double integrate_riemann(const Integrand& fn, long panels) {
  if (panels < 1) throw std::invalid_argument("Riemann oracle needs at least one panel");
  const double h = 1.0 / static_cast<double>(panels);
  // Blocked summation; panel counts run to 10^7.
  constexpr long kBlock = 1024;
  double total = 0.0;
  for (long start = 0; start < panels; start += kBlock) {
    const long stop = std::min(panels, start + kBlock);
    double block = 0.0;
    for (long i = start; i < stop; ++i) {
      block += fn((static_cast<double>(i) + 0.5) * h);
    }
    total += block;
  }
  return total * h;
}

double integrate(const Integrand& fn, const QuadratureSpec& spec) {
  spec.validate();
  switch (spec.method) {
    case QuadMethod::adaptive_simpson:
      return integrate_adaptive_simpson(fn, spec.abs_tol, spec.max_depth);
    case QuadMethod::gauss_legendre:
      return integrate_gauss_legendre(fn, GaussLegendreRule::build(spec.node_count));
    case QuadMethod::riemann_oracle:
      return integrate_riemann(fn, spec.node_count);
  }
  throw std::logic_error("unknown quadrature method");
}

}  // namespace newtonprofile
