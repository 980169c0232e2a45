#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "newtonprofile/cli.hpp"
#include "newtonprofile/csv.hpp"

using namespace newtonprofile;
using namespace newtonprofile::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "newton-profile");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Row {
  std::vector<double> values;
};

// CSV rows, skipping '#' summary lines and the header.
std::vector<Row> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      if (header) *header = line;
      continue;
    }
    Row r;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) r.values.push_back(std::stod(f));
    rows.push_back(r);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("coefficient parsing") {
  CHECK(parse_coefficients("0,0,0,-5") == std::vector<double>{0, 0, 0, -5});
  CHECK(parse_coefficients(" 1.5 , +2e-1") == std::vector<double>{1.5, 0.2});
  CHECK(parse_coefficients("0") == std::vector<double>{0});
  CHECK_THROWS_AS(parse_coefficients(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficients("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficients("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficients("nan"), std::invalid_argument);
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-5.0) == "-5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(std::stod(format_double(0.682564098818911)) == 0.682564098818911);
}

TEST_CASE("sweep of the paper flow") {
  const Run r = invoke({"sweep", "--velocity", "0,0,0,-5", "--rho", "1", "--grid", "101"});
  REQUIRE(r.code == kOk);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "a,F");
  REQUIRE(rows.size() == 101);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].values[1] < rows[best].values[1]) best = i;
  }
  CHECK(rows[best].values[0] > 0.6);
  CHECK(rows[best].values[0] < 0.8);
  CHECK(r.out.find("# grid minimum") != std::string::npos);
}

TEST_CASE("sweep of still air and of constant flow") {
  const Run still = invoke({"sweep", "--velocity", "0", "--grid", "11"});
  REQUIRE(still.code == kOk);
  const auto zero_rows = parse_csv(still.out);
  REQUIRE(zero_rows.size() == 11);
  for (const auto& row : zero_rows) CHECK(row.values[1] == 0.0);

  const Run uniform = invoke({"sweep", "--velocity", "1", "--grid", "101"});
  REQUIRE(uniform.code == kOk);
  const auto rows = parse_csv(uniform.out);
  REQUIRE(rows.size() == 101);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i].values[1] - rows[100 - i].values[1]) <= 1e-10);
  }
}

TEST_CASE("optimize") {
  const Run paper = invoke({"optimize", "--velocity", "0,0,0,-5", "--rho", "1", "--tol", "1e-8"});
  CHECK(paper.code == kOk);
  const auto pos = paper.out.find("# a0 = ");
  REQUIRE(pos != std::string::npos);
  const double a0 = std::stod(paper.out.substr(pos + 7));
  CHECK(std::abs(a0 - 0.682564) <= 5e-5);
  CHECK(paper.out.find("# converged = true") != std::string::npos);
  CHECK(paper.out.find("# evaluations = ") != std::string::npos);

  const Run gauss = invoke({"optimize", "--velocity", "0,0,0,-5", "--quad", "gauss", "--nodes", "64"});
  CHECK(gauss.code == kOk);

  const Run uniform = invoke({"optimize", "--velocity", "1"});
  CHECK(uniform.code == kOk);
  const double mid = std::stod(uniform.out.substr(uniform.out.find("# a0 = ") + 7));
  CHECK(std::abs(mid - 0.5) <= 1e-6);
  CHECK(uniform.out.find("# note: apex") != std::string::npos);

  const Run still = invoke({"optimize", "--velocity", "0"});
  CHECK(still.code == kNotConverged);
  CHECK(still.out.find("flat objective") != std::string::npos);
  CHECK(still.out.find("# converged = false") != std::string::npos);
}

TEST_CASE("profile rows") {
  const Run half = invoke({"profile", "--apex", "0.5", "--samples", "3"});
  REQUIRE(half.code == kOk);
  std::string header;
  const auto rows = parse_csv(half.out, &header);
  CHECK(header == "t,x,y");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].values == std::vector<double>{0, 0, 0});
  CHECK(rows[1].values == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(rows[2].values == std::vector<double>{1, 1, 0});

  const Run left = invoke({"profile", "--apex", "0", "--samples", "3"});
  REQUIRE(left.code == kOk);
  const auto lrows = parse_csv(left.out);
  CHECK(lrows[1].values == std::vector<double>{0.5, 0.25, 0.5});

  const Run opt = invoke({"profile", "--apex", "0.682564", "--samples", "201"});
  const auto orows = parse_csv(opt.out);
  REQUIRE(orows.size() == 201);
  std::size_t top = 0;
  for (std::size_t i = 0; i < orows.size(); ++i) {
    if (orows[i].values[2] > orows[top].values[2]) top = i;
  }
  CHECK(orows[top].values[0] == 0.5);
  CHECK(orows[top].values[2] == 0.5);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"sweep"}).code == kUsage);
  CHECK(invoke({"sweep", "--velocity", "1,a"}).code == kUsage);
  CHECK(invoke({"sweep", "--velocity", "1", "--grid", "1"}).code == kUsage);
  CHECK(invoke({"sweep", "--velocity", "1", "--rho", "-1"}).code == kUsage);
  CHECK(invoke({"sweep", "--velocity", "1", "--a-min", "0.7", "--a-max", "0.2"}).code == kUsage);
  CHECK(invoke({"optimize", "--velocity", "1", "--tol", "0"}).code == kUsage);
  CHECK(invoke({"optimize", "--velocity", "1", "--quad", "romberg"}).code == kUsage);
  CHECK(invoke({"optimize", "--velocity", "1", "--quad-tol", "0"}).code == kUsage);
  CHECK(invoke({"profile", "--apex", "1.5"}).code == kUsage);
  CHECK(invoke({"profile", "--samples", "1"}).code == kUsage);
}

TEST_CASE("file output is deterministic and atomic") {
  const auto dir = std::filesystem::temp_directory_path() / "newtonprofile_cli_test";
  std::filesystem::create_directories(dir);
  const auto first = dir / "a.csv";
  const auto second = dir / "b.csv";
  REQUIRE(invoke({"sweep", "--velocity", "0,0,0,-5", "--grid", "21", "--out", first.string()}).code == kOk);
  REQUIRE(invoke({"sweep", "--velocity", "0,0,0,-5", "--grid", "21", "--out", second.string()}).code == kOk);
  const std::string bytes = slurp(first);
  CHECK(bytes == slurp(second));
  CHECK(bytes.rfind("a,F\n", 0) == 0);
  CHECK(bytes.find('\r') == std::string::npos);

  // A failing run leaves no file behind.
  const auto failed = dir / "failed.csv";
  std::filesystem::remove(failed);
  const Run r = invoke({"sweep", "--velocity", "0,0,0,-5", "--quad-tol", "1e-300", "--grid", "3",
                        "--out", failed.string()});
  CHECK(r.code == kFailure);
  CHECK(r.err.find("apex") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(failed));
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().filename().string().find(".tmp.") == std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("self-check passes on the real implementation") {
  std::ostringstream out;
  CHECK(cmd_check(out) == kOk);
  CHECK(out.str().find("all checks passed") != std::string::npos);
  CHECK(out.str().find("cartesian vs parametric force (max rel diff)") != std::string::npos);
}

TEST_CASE("self-check catches a sign error in the cartesian slope") {
  CheckSuite broken;
  // (1+2t) instead of (1-2t) in the slope numerator.
  broken.force_cartesian = [](const FlowConfig& cfg, const QuadraticBezier& curve, const QuadratureSpec& quad) {
    const double a = curve.apex();
    return cfg.rho * integrate(
                         [&](double x) {
                           const double t = curve.invert_x(x);
                           const double slope = (1 + 2 * t) / (a + (1 - 2 * a) * t);
                           return pressure({1.0, cfg.velocity}, x, slope);
                         },
                         quad);
  };
  std::ostringstream out;
  CHECK(cmd_check(out, broken) == kFailure);
  CHECK(out.str().find("[FAIL] cartesian vs parametric") != std::string::npos);
}

TEST_CASE("self-check catches a mistranscribed -5x^3 integrand") {
  CheckSuite broken;
  broken.eq8 = [](double a, double t) {
    const double u = a + t - 2 * a * t;
    const double w = 2 * a + t - 2 * a * t;
    const double s = 1 + 2 * t;  // sign flipped
    return 50 * std::pow(t, 6) * u * u * u * std::pow(w, 6) / (u * u + s * s);
  };
  std::ostringstream out;
  CHECK(cmd_check(out, broken) == kFailure);
  CHECK(out.str().find("[FAIL] -5x^3 integrand transcription") != std::string::npos);
}
