#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "newtonprofile/flow.hpp"
#include "newtonprofile/quad.hpp"

namespace newtonprofile::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // check failed or a computation error
  kNotConverged = 2,  // optimize: minimum on the edge of the apex range
  kUsage = 64,
};

struct RunConfig {
  std::vector<double> velocity_coeffs;
  double rho = 1.0;
  double a_min = 0.0;
  double a_max = 1.0;
  int grid_size = 101;
  double opt_tol = 1e-8;
  QuadratureSpec quad;
  /// Empty means standard output.
  std::string output_path;

  // profile only
  double apex = 0.682564;
  int samples = 201;

  FlowConfig flow() const;
  /// Throws std::invalid_argument on the first violated constraint.
  void validate() const;
};

/// Parses "0,0,0,-5" into {0,0,0,-5}.
std::vector<double> parse_coefficients(const std::string& text);

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The pieces of the library the self-check exercises; tests swap members to
/// confirm that a broken implementation is caught.
struct CheckSuite {
  std::function<double(const FlowConfig&, const QuadraticBezier&, const QuadratureSpec&)>
      force_parametric = total_force_parametric;
  std::function<double(const FlowConfig&, const QuadraticBezier&, const QuadratureSpec&)>
      force_cartesian = total_force_cartesian;
  std::function<double(const FlowConfig&, const QuadraticBezier&, double)> integrand =
      parametric_integrand;
  std::function<double(double, double)> eq8 = eq8_integrand;
};

int cmd_check(std::ostream& out, const CheckSuite& suite = {});

/// Full command-line entry point (subcommand dispatch and flag parsing).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace newtonprofile::cli
