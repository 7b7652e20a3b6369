#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasscos/spectral.hpp"

namespace grasscos::cli {

inline constexpr const char* kSchemaVersion = "1.0";

/// Exit status of a run.
enum ExitCode : int { kExitOk = 0, kExitInvalidConfig = 1, kExitVerifyFailed = 2 };

enum class Format { Json, Csv };

/// Invalid command line or configuration; maps to exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;  // spectrum | cp | verify | poles
  Field field = Field::Real;
  int n = 2;
  int p = 1;
  std::optional<double> lambda_re;
  double lambda_im = 0.0;
  // lambda grid for `cp` and segment for `poles`
  std::optional<double> lambda_min;
  std::optional<double> lambda_max;
  int lambda_steps = 11;
  std::optional<std::vector<int>> mu;
  int max_degree = 6;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  int grid_order = 64;
  std::optional<double> tol;  // overrides deterministic suite tolerances
  double sigma = 4.0;         // Monte Carlo gate in standard errors
  std::string suite = "all";
  Format format = Format::Json;
  std::string output;  // empty: standard output
  int workers = 1;
};

/// Worker count from GRASSCOS_WORKERS, or 1 when unset. Throws ConfigError
/// on a malformed value.
int default_workers();

/// Parses "2,0" or "(2,0)" into integers; throws ConfigError.
std::vector<int> parse_mu(const std::string& text);

/// Parses argv (without running or validating). Returns std::nullopt after
/// printing help to `out`. Throws ConfigError on unparseable input.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Checks the config against the signature and command requirements.
/// Throws ConfigError.
void validate(const RunConfig& config);

struct Report {
  int exit_code = kExitOk;
  nlohmann::json document;
};

/// Runs a validated or unvalidated config; never throws for bad input (the
/// report then carries an error object and exit code 1).
Report run(const RunConfig& config);

/// JSON (pretty, trailing newline) or CSV rendering of a report.
std::string render(const Report& report, Format format);

/// Full command-line entry point: parse, run, write, return the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Names accepted by --suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one verification suite and returns its JSON object
/// {"name", "passed", "checks": [{"name", "passed", "error", "tolerance"}]}.
nlohmann::json run_suite(const std::string& name, const RunConfig& config);

/// SpectralValue as {"tag":"finite","re","im"} | {"tag":"pole"|"zero","order"}.
nlohmann::json to_json(const SpectralValue& v);

}  // namespace grasscos::cli
