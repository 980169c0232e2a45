#include "newtonprofile/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "newtonprofile/csv.hpp"
#include "newtonprofile/optimize.hpp"

namespace newtonprofile::cli {

FlowConfig RunConfig::flow() const { return FlowConfig{rho, VelocityPolynomial(velocity_coeffs)}; }

void RunConfig::validate() const {
  if (velocity_coeffs.empty()) throw std::invalid_argument("--velocity is required");
  flow().validate();
  if (!(a_min >= 0.0 && a_min < a_max && a_max <= 1.0)) {
    throw std::invalid_argument("apex range must satisfy 0 <= a-min < a-max <= 1");
  }
  if (grid_size < 2) throw std::invalid_argument("--grid must be at least 2");
  if (!(opt_tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  quad.validate();
}

std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string field = text.substr(pos, comma - pos);
    field.erase(0, field.find_first_not_of(" \t"));
    field.erase(field.find_last_not_of(" \t") + 1);
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw std::invalid_argument("bad velocity coefficient '" + field + "' in '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

namespace {

// CSV goes to the --out file when given, otherwise inline on `out`.
void emit_csv(const RunConfig& cfg, std::ostream& out,
              const std::function<void(std::ostream&)>& write) {
  if (cfg.output_path.empty()) {
    write(out);
  } else {
    write_file_atomically(cfg.output_path, write);
  }
}

void write_force_csv(std::ostream& os, const SweepResult& sweep) {
  os << "a,F\n";
  for (const auto& s : sweep.samples) {
    os << format_double(s.apex) << ',' << format_double(s.force) << '\n';
  }
}

bool is_flat(const SweepResult& sweep) {
  return std::all_of(sweep.samples.begin(), sweep.samples.end(),
                     [&](const ForceSample& s) { return s.force == sweep.samples.front().force; });
}

void note_left_apex(std::ostream& out, double apex) {
  if (apex <= 0.5) {
    out << "# note: apex " << format_double(apex)
        << " <= 0.5, the profile peak leans toward x = 0\n";
  }
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    const SweepResult res = sweep(cfg.flow(), cfg.quad, cfg.a_min, cfg.a_max, cfg.grid_size);
    emit_csv(cfg, out, [&](std::ostream& os) { write_force_csv(os, res); });
    const ForceSample& best = res.samples[res.argmin()];
    out << "# grid minimum: F = " << format_double(best.force)
        << " at a = " << format_double(best.apex) << '\n';
    note_left_apex(out, best.apex);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    const OptimizationResult res =
        minimize(cfg.flow(), cfg.quad, cfg.a_min, cfg.a_max, cfg.opt_tol);
    if (!cfg.output_path.empty()) {
      write_file_atomically(cfg.output_path,
                            [&](std::ostream& os) { write_force_csv(os, res.prescan); });
    }
    out << "# a0 = " << format_double(res.apex_opt) << '\n'
        << "# F(a0) = " << format_double(res.force_opt) << '\n'
        << "# bracket = [" << format_double(res.bracket.lo) << ", "
        << format_double(res.bracket.hi) << "]\n"
        << "# evaluations = " << res.evaluations << '\n'
        << "# converged = " << (res.converged ? "true" : "false") << '\n';
    if (is_flat(res.prescan)) {
      out << "# flat objective: F is constant over the apex range, no interior minimum\n";
    } else if (!res.converged) {
      out << "# minimum lies on the edge of the apex range\n";
    }
    note_left_apex(out, res.apex_opt);
    return res.converged ? kOk : kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.apex >= 0.0 && cfg.apex <= 1.0)) {
    err << "error: --apex must lie in [0,1]\n";
    return kUsage;
  }
  if (cfg.samples < 2) {
    err << "error: --samples must be at least 2\n";
    return kUsage;
  }
  try {
    const QuadraticBezier curve(cfg.apex);
    const int n = cfg.samples;
    emit_csv(cfg, out, [&](std::ostream& os) {
      os << "t,x,y\n";
      for (int i = 0; i < n; ++i) {
        const double t = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
        const Point2 p = curve.eval(t);
        os << format_double(t) << ',' << format_double(p.x) << ',' << format_double(p.y) << '\n';
      }
    });
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

namespace {

double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(b), 1e-30);
}

struct CheckLine {
  std::string name;
  double measured;
  double limit;
};

}  // namespace

int cmd_check(std::ostream& out, const CheckSuite& suite) {
  std::vector<CheckLine> lines;
  const auto quad = QuadratureSpec::simpson(1e-12);

  try {
    // Cartesian vs parametric forms.
    const std::vector<std::vector<double>> velocities = {
        {0.0, 0.0, 0.0, -5.0}, {1.0}, {0.3, -1.2, 0.5, 2.0, -0.7}, {0.0, 2.0}};
    double worst_cross = 0.0;
    for (const auto& coeffs : velocities) {
      const FlowConfig cfg{1.0, VelocityPolynomial(coeffs)};
      for (int i = 1; i <= 9; ++i) {
        const QuadraticBezier curve(i / 10.0);
        worst_cross = std::max(worst_cross, rel_diff(suite.force_cartesian(cfg, curve, quad),
                                                     suite.force_parametric(cfg, curve, quad)));
      }
    }
    lines.push_back({"cartesian vs parametric force (max rel diff)", worst_cross, 1e-8});

    // Constant flow: F(a) = F(1-a).
    const FlowConfig uniform{1.0, VelocityPolynomial({1.0})};
    double worst_sym = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double a = i / 100.0;
      const double f = suite.force_parametric(uniform, QuadraticBezier(a), quad);
      const double g = suite.force_parametric(uniform, QuadraticBezier(1.0 - a), quad);
      worst_sym = std::max(worst_sym, std::abs(f - g));
    }
    lines.push_back({"constant-flow symmetry F(a) - F(1-a) (max abs)", worst_sym, 1e-10});

    // Specialized -5x^3 integrand vs generic integrand.
    const FlowConfig cubic{1.0, VelocityPolynomial({0.0, 0.0, 0.0, -5.0})};
    double worst_eq8 = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = i / 99.0;
      const QuadraticBezier curve(a);
      for (int j = 0; j < 100; ++j) {
        const double t = j / 99.0;
        worst_eq8 = std::max(worst_eq8, rel_diff(suite.eq8(a, t), suite.integrand(cubic, curve, t)));
      }
    }
    lines.push_back({"-5x^3 integrand transcription (max rel diff)", worst_eq8, 1e-12});

    // Adaptive Simpson vs midpoint oracle.
    double worst_oracle = 0.0;
    for (double a : {0.15, 0.4, 0.682564, 0.9}) {
      const auto fn = [&](double t) { return suite.eq8(a, t); };
      worst_oracle = std::max(worst_oracle, std::abs(integrate_adaptive_simpson(fn, 1e-10, 40) -
                                                     integrate_riemann(fn, 1'000'000)));
    }
    lines.push_back({"adaptive Simpson vs 1e6-panel midpoint oracle (max abs)", worst_oracle, 1e-5});

    // Closed form: int_0^1 dt / (1 + (2-4t)^2) = atan(2)/2.
    const double exact = std::atan(2.0) / 2.0;
    const auto bump = [](double t) { return 1.0 / (1.0 + (2.0 - 4.0 * t) * (2.0 - 4.0 * t)); };
    const double worst_closed =
        std::max({std::abs(integrate(bump, QuadratureSpec::simpson()) - exact),
                  std::abs(integrate(bump, QuadratureSpec::gauss()) - exact),
                  std::abs(suite.force_parametric(uniform, QuadraticBezier(0.5), quad) - exact)});
    lines.push_back({"closed-form atan(2)/2 integral (max abs)", worst_closed, 1e-9});
  } catch (const std::exception& e) {
    out << "[FAIL] check aborted: " << e.what() << '\n';
    return kFailure;
  }

  bool ok = true;
  for (const auto& line : lines) {
    const bool pass = line.measured <= line.limit;
    ok = ok && pass;
    out << (pass ? "[PASS] " : "[FAIL] ") << line.name << ": " << format_double(line.measured)
        << " (limit " << format_double(line.limit) << ")\n";
  }
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kOk : kFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-resistance quadratic Bezier profiles under Newtonian impact pressure"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string velocity;
  std::string method = "simpson";

  const auto add_flow_flags = [&](CLI::App* sub) {
    sub->add_option("--velocity", velocity,
                    "freestream speed coefficients, ascending powers (\"0,0,0,-5\" = -5x^3)")
        ->required();
    sub->add_option("--rho", cfg.rho, "fluid density")->capture_default_str();
    sub->add_option("--a-min", cfg.a_min, "lower end of the apex range")->capture_default_str();
    sub->add_option("--a-max", cfg.a_max, "upper end of the apex range")->capture_default_str();
    sub->add_option("--quad", method, "quadrature method")
        ->check(CLI::IsMember({"simpson", "gauss"}))
        ->capture_default_str();
    sub->add_option("--quad-tol", cfg.quad.abs_tol, "adaptive Simpson absolute tolerance")
        ->capture_default_str();
    sub->add_option("--nodes", cfg.quad.node_count, "Gauss-Legendre node count")
        ->capture_default_str();
    sub->add_option("--out", cfg.output_path, "CSV output path (default: stdout)");
  };

  auto* sweep_cmd = app.add_subcommand("sweep", "sample F(a) on an equally spaced apex grid");
  add_flow_flags(sweep_cmd);
  sweep_cmd->add_option("--grid", cfg.grid_size, "number of grid points")->capture_default_str();

  auto* opt_cmd = app.add_subcommand("optimize", "locate the apex that minimizes F(a)");
  add_flow_flags(opt_cmd);
  opt_cmd->add_option("--tol", cfg.opt_tol, "final bracket width")->capture_default_str();

  auto* profile_cmd = app.add_subcommand("profile", "sample the Bezier profile as t,x,y rows");
  profile_cmd->add_option("--apex", cfg.apex, "apex parameter a in [0,1]")->capture_default_str();
  profile_cmd->add_option("--samples", cfg.samples, "number of t samples")->capture_default_str();
  profile_cmd->add_option("--out", cfg.output_path, "CSV output path (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "run the built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (*check_cmd) return cmd_check(out);
  if (*profile_cmd) return cmd_profile(cfg, out, err);

  try {
    cfg.velocity_coeffs = parse_coefficients(velocity);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.quad.method = method == "gauss" ? QuadMethod::gauss_legendre : QuadMethod::adaptive_simpson;

  if (*sweep_cmd) return cmd_sweep(cfg, out, err);
  return cmd_optimize(cfg, out, err);
}

}  // namespace newtonprofile::cli
