#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grasscos_cli/cli.hpp"

using namespace grasscos;
using namespace grasscos::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "grasscos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args, int expected_code = kExitOk) {
  const Outcome o = invoke(std::move(args));
  REQUIRE(o.code == expected_code);
  return nlohmann::json::parse(o.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("spectrum rows on the 2-sphere") {
  const auto doc = invoke_json({"spectrum", "--field", "R", "--n", "2", "--p", "1", "--lambda", "3.5",
                                "--max-degree", "6"});
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["status"] == "ok");
  CHECK(doc["signature"]["rho"] == 1.5);
  const auto& rows = doc["rows"];
  REQUIRE(rows.size() == 4);
  bool found = false;
  for (const auto& row : rows) {
    if (row["mu"] == nlohmann::json::array({0})) {
      found = true;
      CHECK(row["eta"]["tag"] == "finite");
      CHECK(double(row["eta"]["re"]) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
      CHECK(row["nu"].is_null());
    }
    // The kernel |t|^2 is a polynomial of degree 2.
    if (row["degree"] >= 4) CHECK(row["eta"]["tag"] == "zero");
  }
  CHECK(found);
}

TEST_CASE("spectrum reports nu when p = q") {
  const auto doc = invoke_json({"spectrum", "--field", "C", "--n", "3", "--p", "2", "--lambda", "7",
                                "--mu", "2,0"});
  REQUIRE(doc["rows"].size() == 1);
  const auto& row = doc["rows"][0];
  CHECK(double(row["nu"]["re"]) == doctest::Approx(-double(row["eta"]["re"])).epsilon(1e-14));
  CHECK(double(row["omega"]) > 0.0);
}

TEST_CASE("cp at rho is 1") {
  const auto doc = invoke_json({"cp", "--field", "C", "--n", "3", "--p", "2", "--lambda", "4"});
  REQUIRE(doc["rows"].size() == 1);
  CHECK(double(doc["rows"][0]["c_p"]["re"]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cp over a grid marks poles") {
  // Gr_1(R^2): c_P has a pole at 0 and zeros at -1, -3, ...
  const auto doc = invoke_json({"cp", "--field", "R", "--n", "1", "--p", "1", "--lambda-min", "-3",
                                "--lambda-max", "3", "--lambda-steps", "7"});
  const auto& rows = doc["rows"];
  REQUIRE(rows.size() == 7);
  CHECK(rows[0]["c_p"]["tag"] == "zero");
  CHECK(rows[3]["c_p"] == nlohmann::json({{"tag", "pole"}, {"order", 1}}));
  CHECK(rows[6]["c_p"]["tag"] == "finite");
}

TEST_CASE("poles lists the Gamma hyperplanes on a segment") {
  const auto doc = invoke_json({"poles", "--field", "R", "--n", "2", "--p", "1", "--lambda-min", "-4",
                                "--lambda-max", "1"});
  const auto& rows = doc["rows"];
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    CHECK(double(row["lambda"]) >= -4.0);
    CHECK(double(row["lambda"]) <= 1.0);
    CHECK(int(row["j"]) == 1);
  }
}

TEST_CASE("verify functional-equation passes") {
  const Outcome o = invoke({"verify", "--suite", "functional-equation", "--seed", "42"});
  CHECK(o.code == kExitOk);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["status"] == "passed");
  REQUIRE(doc["suites"].size() == 1);
  CHECK(doc["suites"][0]["passed"] == true);
}

TEST_CASE("verify exits 2 when a check fails") {
  const Outcome o = invoke({"verify", "--suite", "recursion", "--tol", "1e-300"});
  CHECK(o.code == kExitVerifyFailed);
  CHECK(nlohmann::json::parse(o.out)["status"] == "failed");
}

TEST_CASE("invalid configurations exit 1 with an error object") {
  const std::vector<std::vector<std::string>> bad = {
      {"spectrum", "--n", "1", "--p", "3"},
      {"spectrum", "--field", "Q"},
      {"cp", "--field", "R", "--n", "2", "--p", "1"},
      {"spectrum", "--mu", "3,0", "--n", "3", "--p", "2", "--lambda", "4"},
      {"verify", "--suite", "nonsense"},
      {"frobnicate"},
      {"verify", "--samples", "0"},
  };
  for (const auto& args : bad) {
    const Outcome o = invoke(args);
    CAPTURE(args[0]);
    CHECK(o.code == kExitInvalidConfig);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"]["code"] == "invalid_config");
    CHECK(!o.err.empty());
  }
}

TEST_CASE("help exits 0 without a report") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("spectrum") != std::string::npos);
}

TEST_CASE("CSV column order is fixed") {
  const auto spectrum = lines(invoke({"spectrum", "--lambda", "3.5", "--format", "csv"}).out);
  REQUIRE(spectrum.size() == 5);
  CHECK(spectrum[0] == "mu,degree,eta_tag,eta_re,eta_im,eta_order,nu_tag,nu_re,nu_im,nu_order,omega");
  const auto cp = lines(invoke({"cp", "--lambda", "3.5", "--format", "csv"}).out);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0] == "lambda_re,lambda_im,tag,re,im,order");
  CHECK(cp[1].rfind("3.5,0.0,finite,", 0) == 0);
  const auto poles = lines(invoke({"poles", "--lambda-min", "-3", "--lambda-max", "0", "--format", "csv"}).out);
  CHECK(poles[0] == "lambda,factor,lambda_sign,j,k,tag,re,im,order");
  const auto verify = lines(invoke({"verify", "--suite", "normalization", "--format", "csv"}).out);
  CHECK(verify[0] == "suite,check,passed,error,tolerance");
  const auto error = lines(invoke({"spectrum", "--n", "1", "--p", "3", "--format", "csv"}).out);
  CHECK(error[0] == "error_code,message");
}

TEST_CASE("output is written to --output") {
  const auto path = std::filesystem::temp_directory_path() / "grasscos_cli_test.json";
  std::filesystem::remove(path);
  const Outcome o = invoke({"cp", "--lambda", "2.5", "--output", path.string()});
  CHECK(o.code == kExitOk);
  CHECK(o.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["command"] == "cp");
  CHECK(doc["config"].find("output") == doc["config"].end());
  std::filesystem::remove(path);
}

TEST_CASE("reports are byte-identical for identical runs") {
  const std::vector<std::string> args = {"verify", "--suite", "monte-carlo", "--samples", "20000",
                                         "--seed", "7", "--workers", "2"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  // Worker count only changes the echoed config.
  auto c = nlohmann::json::parse(invoke({"verify", "--suite", "monte-carlo", "--samples", "20000", "--seed",
                                          "7", "--workers", "1"}).out);
  auto d = nlohmann::json::parse(a.out);
  CHECK(c["suites"] == d["suites"]);
  CHECK(d["config"]["workers"] == 2);
}

TEST_CASE("parse_mu") {
  CHECK(parse_mu("2,0") == std::vector<int>{2, 0});
  CHECK(parse_mu("(4, 2, -2)") == std::vector<int>{4, 2, -2});
  CHECK(parse_mu("0") == std::vector<int>{0});
  CHECK_THROWS_AS(parse_mu("a,b"), ConfigError);
  CHECK_THROWS_AS(parse_mu(""), ConfigError);
  CHECK_THROWS_AS(parse_mu("2,,0"), ConfigError);
}

TEST_CASE("worker default comes from the environment") {
  ::setenv("GRASSCOS_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  ::setenv("GRASSCOS_WORKERS", "three", 1);
  CHECK_THROWS_AS(default_workers(), ConfigError);
  ::setenv("GRASSCOS_WORKERS", "0", 1);
  CHECK_THROWS_AS(default_workers(), ConfigError);
  ::unsetenv("GRASSCOS_WORKERS");
  CHECK(default_workers() == 1);
}

TEST_CASE("spectral values serialize with their tags") {
  CHECK(to_json(SpectralValue::pole(2)) == nlohmann::json({{"tag", "pole"}, {"order", 2}}));
  CHECK(to_json(SpectralValue::zero(1)) == nlohmann::json({{"tag", "zero"}, {"order", 1}}));
  CHECK(to_json(SpectralValue::finite({0.5, -1.0})) ==
        nlohmann::json({{"tag", "finite"}, {"re", 0.5}, {"im", -1.0}}));
}

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(std::find(names.begin(), names.end(), "monte-carlo") != names.end());
  CHECK(std::find(names.begin(), names.end(), "all") == names.end());
}
