#include <doctest.h>

#include "entrogeo/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using entrogeo::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("metrics for the constant scheme") {
  const Result r = call({"metrics", "--scheme", "constant", "--gamma", "1", "--hbar", "1",
                         "--theta0", "1", "--thetadot0", "1", "--tau", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["r_E"].get<double>() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(j["v_E"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(j["C"].get<double>() == doctest::Approx(j["C_closed"].get<double>()).epsilon(1e-10));
  CHECK(j["command"] == "metrics");
}

TEST_CASE("metrics for the exponential scheme") {
  const Result r = call({"metrics", "--scheme", "exponential", "--lambda", "0.5", "--theta0", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["r_E"].get<double>() == doctest::Approx(4 * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("exit codes") {
  CHECK(call({"metrics", "--scheme", "constant", "--theta0", "-1"}).code == 2);
  CHECK(call({"metrics", "--scheme", "powerlaw"}).code == 2);  // lambda missing
  CHECK(call({"metrics", "--scheme", "nope"}).code == 2);
  CHECK(call({"figure1", "--lambda-count", "1"}).code == 2);
  CHECK(call({"figure1", "--bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"crossover", "--lambda-lo", "0.1", "--lambda-hi", "1"}).code == 2);
  // Past the singular point of the power-law geodesic.
  CHECK(call({"geodesic", "--scheme", "powerlaw", "--lambda", "1", "--thetadot0", "1", "--span", "5"}).code == 2);
}

TEST_CASE("csv header carries version, command, hash and formulas") {
  const Result r = call({"figure1", "--lambda-count", "4"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("# entrogeo v" ENTROGEO_VERSION " figure1 ", 0) == 0);
  CHECK(first.size() == std::string("# entrogeo v" ENTROGEO_VERSION " figure1 ").size() + 16);
  CHECK(r.out.find("# column rtilde_powerlaw: ") != std::string::npos);
  CHECK(r.out.find("# note: eta_sym anchor") != std::string::npos);
  CHECK(r.out.find("\nlambda,rtilde_constant,rtilde_oscillating,rtilde_exponential,rtilde_powerlaw,eta_constant") !=
        std::string::npos);
  // Hash tracks the configuration.
  const Result other = call({"figure1", "--lambda-count", "5"});
  CHECK(other.out.substr(0, first.size()) != first);
}

TEST_CASE("table1") {
  const Result csv = call({"table1"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("scheme,lambda,rank,r_E,eta1,eta2,eta_sym,igc_slope,conforms,ties") != std::string::npos);
  CHECK(csv.out.find("\nexponential,18,1,") != std::string::npos);

  const Result js = call({"table1", "--format", "json", "--lambda", "18", "--lambda", "0.5"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  REQUIRE(j["rows"].size() == 8);
  CHECK(j["rows"][0]["conforms"] == true);
  CHECK(j["rows"][4]["conforms"] == false);
}

TEST_CASE("crossover") {
  const Result r = call({"crossover"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["lambda_star"].get<double>() - 2.51) <= 0.01);
  CHECK(std::abs(j["boundary_residual"].get<double>()) <= 1e-8);
}

TEST_CASE("verify filtering and breach injection") {
  const Result only = call({"verify", "--filter", "cauchy-schwarz"});
  CHECK(only.code == 0);
  CHECK(only.out.find("PASS pathmetrics.cauchy-schwarz") != std::string::npos);
  CHECK(only.out.find("1/1 checks passed") != std::string::npos);

  const Result breach = call({"verify", "--filter", "efficiency", "--inject-breach", "efficiency.range"});
  CHECK(breach.code == 1);
  CHECK(breach.err.find("efficiency.range") != std::string::npos);
  CHECK(breach.out.find("PASS efficiency.monotonicity") != std::string::npos);

  CHECK(call({"verify", "--filter", "no-such-check"}).code == 2);
}

TEST_CASE("file output is written whole and reproducibly") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("entrogeo_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> base{"figure2", "--panel", "region", "--region-theta0-count", "20",
                                      "--region-lambda-count", "30"};
  auto a = base, b = base;
  a.insert(a.end(), {"-o", (dir / "a.csv").string()});
  b.insert(b.end(), {"-o", (dir / "b.csv").string()});
  REQUIRE(call(a).code == 0);
  REQUIRE(call(b).code == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 2);  // no temporaries left behind

  CHECK(call({"figure1", "-o", (dir / "missing" / "x.csv").string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("thread count does not change output") {
  ::setenv("ENTROGEO_THREADS", "1", 1);
  const Result one = call({"figure2", "--lambda-count", "31"});
  ::setenv("ENTROGEO_THREADS", "4", 1);
  const Result four = call({"figure2", "--lambda-count", "31"});
  ::unsetenv("ENTROGEO_THREADS");
  CHECK(one.out == four.out);
}
