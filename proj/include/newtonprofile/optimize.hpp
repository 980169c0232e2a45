#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "newtonprofile/flow.hpp"
#include "newtonprofile/quad.hpp"

namespace newtonprofile {

struct ForceSample {
  double apex = 0.0;
  double force = 0.0;
};

/// F(a) sampled on an equally spaced apex grid (ascending).
struct SweepResult {
  std::vector<ForceSample> samples;
  int grid_size = 0;

  /// Index of the smallest force; the leftmost one on ties.
  std::size_t argmin() const;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct OptimizationResult {
  double apex_opt = 0.0;
  double force_opt = 0.0;
  /// Pre-scan neighbours around the coarse minimum.
  Bracket bracket;
  /// Number of functional evaluations, pre-scan included.
  int evaluations = 0;
  /// False when the coarse minimum sits on the edge of the apex range.
  bool converged = false;
  SweepResult prescan;
};

/// Quadrature failure while evaluating F at a particular apex.
class ForceEvaluationError : public std::runtime_error {
 public:
  ForceEvaluationError(double apex, const std::string& cause);
  double apex() const noexcept { return apex_; }

 private:
  double apex_;
};

inline constexpr int kPrescanPoints = 101;

/// F at a single apex by total_force_parametric, rethrowing quadrature
/// failures as ForceEvaluationError.
double force_at(const FlowConfig& cfg, const QuadratureSpec& quad, double apex);

SweepResult sweep(const FlowConfig& cfg, const QuadratureSpec& quad, double a_min, double a_max,
                  int n);

/// Coarse 101-point scan, then golden-section refinement on the two grid
/// cells around the lowest interior sample until the bracket is <= tol wide.
OptimizationResult minimize(const FlowConfig& cfg, const QuadratureSpec& quad, double a_min,
                            double a_max, double tol);

}  // namespace newtonprofile
