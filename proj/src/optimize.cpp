#include "newtonprofile/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace newtonprofile {

namespace {

void require_range(double a_min, double a_max) {
  if (!(a_min >= 0.0 && a_min < a_max && a_max <= 1.0)) {
    std::ostringstream msg;
    msg << "apex range [" << a_min << ", " << a_max << "] must satisfy 0 <= lo < hi <= 1";
    throw std::invalid_argument(msg.str());
  }
}

double grid_point(double a_min, double a_max, int i, int n) {
  if (i == n - 1) return a_max;
  const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
  return a_min + (a_max - a_min) * frac;
}

constexpr int kMaxGoldenIterations = 200;

}  // namespace

ForceEvaluationError::ForceEvaluationError(double apex, const std::string& cause)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg.precision(17);
        msg << "force evaluation failed at apex = " << apex << ": " << cause;
        return msg.str();
      }()),
      apex_(apex) {}

std::size_t SweepResult::argmin() const {
  if (samples.empty()) throw std::logic_error("argmin of an empty sweep");
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].force < samples[best].force) best = i;
  }
  return best;
}

double force_at(const FlowConfig& cfg, const QuadratureSpec& quad, double apex) {
  try {
    return total_force_parametric(cfg, QuadraticBezier(apex), quad);
  } catch (const QuadratureError& e) {
    throw ForceEvaluationError(apex, e.what());
  }
}

SweepResult sweep(const FlowConfig& cfg, const QuadratureSpec& quad, double a_min, double a_max,
                  int n) {
  require_range(a_min, a_max);
  if (n < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
  cfg.validate();
  quad.validate();

  SweepResult out;
  out.grid_size = n;
  out.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double apex = grid_point(a_min, a_max, i, n);
    out.samples.push_back({apex, force_at(cfg, quad, apex)});
  }
  return out;
}

OptimizationResult minimize(const FlowConfig& cfg, const QuadratureSpec& quad, double a_min,
                            double a_max, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("optimizer tol must be positive");

  OptimizationResult res;
  res.prescan = sweep(cfg, quad, a_min, a_max, kPrescanPoints);
  res.evaluations = kPrescanPoints;

  const auto& grid = res.prescan.samples;
  const std::size_t k = res.prescan.argmin();
  res.apex_opt = grid[k].apex;
  res.force_opt = grid[k].force;

  if (k == 0 || k + 1 == grid.size()) {
    const std::size_t inner = k == 0 ? 1 : k - 1;
    res.bracket = {std::min(grid[k].apex, grid[inner].apex),
                   std::max(grid[k].apex, grid[inner].apex)};
    res.converged = false;
    return res;
  }

  res.bracket = {grid[k - 1].apex, grid[k + 1].apex};

  const auto eval = [&](double apex) {
    ++res.evaluations;
    const double f = force_at(cfg, quad, apex);
    if (f < res.force_opt) {
      res.apex_opt = apex;
      res.force_opt = f;
    }
    return f;
  };

  // Golden-section search; invphi = 1/phi.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = res.bracket.lo;
  double hi = res.bracket.hi;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  for (int iter = 0; hi - lo > tol && iter < kMaxGoldenIterations; ++iter) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = eval(d);
    }
  }
  res.converged = hi - lo <= tol;
  return res;
}

}  // namespace newtonprofile
