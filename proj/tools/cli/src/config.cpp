#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "grasscos_cli/cli.hpp"

namespace grasscos::cli {

int default_workers() {
  const char* env = std::getenv("GRASSCOS_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("GRASSCOS_WORKERS must be a positive integer, got '") + env +
                      "'");
  }
}

std::vector<int> parse_mu(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return c == '(' || c == ')' || c == ' '; }),
             body.end());
  if (body.empty()) throw ConfigError("--mu: empty K-type");
  std::vector<int> parts;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--mu: cannot parse '" + text + "' as a list of integers");
    }
  }
  return parts;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  cfg.workers = default_workers();
  std::string field = "R";
  std::string format = "json";
  std::string mu;
  std::optional<double> lambda;

  CLI::App app{"K-spectra of Cos^lambda and Sin^lambda transforms on Grassmannians", "grasscos"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Base field: R, C or H")->capture_default_str();
    sub->add_option("--n", cfg.n, "Grassmannian of p-planes in K^{n+1}")->capture_default_str();
    sub->add_option("--p", cfg.p, "Subspace dimension, 1 <= p <= n+1-p")->capture_default_str();
    sub->add_option("--lambda", lambda, "Re lambda");
    sub->add_option("--lambda-im", cfg.lambda_im, "Im lambda")->capture_default_str();
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
    sub->add_option("--workers", cfg.workers, "Monte Carlo worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Table of eta_mu, nu_mu and omega(mu)");
  common(spectrum);
  spectrum->add_option("--max-degree", cfg.max_degree, "Largest sum |m_j|")->capture_default_str();
  spectrum->add_option("--mu", mu, "Single K-type, e.g. 2,0");

  auto* cp = app.add_subcommand("cp", "c_P(lambda) at one lambda or over a grid");
  common(cp);
  cp->add_option("--lambda-min", cfg.lambda_min, "Grid start (real part)");
  cp->add_option("--lambda-max", cfg.lambda_max, "Grid end (real part)");
  cp->add_option("--lambda-steps", cfg.lambda_steps, "Grid points")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run numerical verification suites");
  common(verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", cfg.suite, "Suite name or all")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  verify->add_option("--grid-order", cfg.grid_order, "Sphere grid order")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "Override deterministic tolerances");
  verify->add_option("--sigma", cfg.sigma, "Monte Carlo gate in standard errors")
      ->capture_default_str();

  auto* poles = app.add_subcommand("poles", "Singular hyperplanes hit along a lambda segment");
  common(poles);
  poles->add_option("--lambda-min", cfg.lambda_min, "Segment start")->required();
  poles->add_option("--lambda-max", cfg.lambda_max, "Segment end")->required();
  poles->add_option("--mu", mu, "K-type (default: c_P)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  for (auto* sub : {spectrum, cp, verify, poles}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  try {
    cfg.field = parse_field(field);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.lambda_re = lambda;
  if (!mu.empty()) cfg.mu = parse_mu(mu);
  return cfg;
}

void validate(const RunConfig& cfg) {
  static const std::vector<std::string> commands{"spectrum", "cp", "verify", "poles"};
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end()) {
    throw ConfigError("unknown command '" + cfg.command + "'");
  }
  if (cfg.workers < 1) throw ConfigError("--workers must be positive");
  if (cfg.command == "verify") {
    if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
    if (cfg.grid_order < 2) throw ConfigError("--grid-order must be at least 2");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
    if (!(cfg.sigma > 0.0)) throw ConfigError("--sigma must be positive");
    if (cfg.suite != "all" &&
        std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
      throw ConfigError("unknown suite '" + cfg.suite + "'");
    }
    return;
  }
  std::optional<GrassmannSignature> sig;
  try {
    sig.emplace(cfg.n, cfg.p, cfg.field);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.mu && !in_lattice(*sig, KType(*cfg.mu))) {
    throw ConfigError("--mu: " + KType(*cfg.mu).to_string() + " is not a K-type of " +
                      sig->to_string());
  }
  if (cfg.command == "spectrum") {
    if (!cfg.lambda_re) throw ConfigError("spectrum requires --lambda");
    if (cfg.max_degree < 0) throw ConfigError("--max-degree must be >= 0");
  } else if (cfg.command == "cp") {
    const bool grid = cfg.lambda_min || cfg.lambda_max;
    if (grid == cfg.lambda_re.has_value()) {
      throw ConfigError("cp takes either --lambda or --lambda-min/--lambda-max");
    }
    if (grid) {
      if (!(cfg.lambda_min && cfg.lambda_max)) {
        throw ConfigError("cp grid needs both --lambda-min and --lambda-max");
      }
      if (cfg.lambda_steps < 1) throw ConfigError("--lambda-steps must be positive");
    }
  } else if (cfg.command == "poles") {
    if (!(cfg.lambda_min && cfg.lambda_max) || !(*cfg.lambda_min <= *cfg.lambda_max)) {
      throw ConfigError("poles needs --lambda-min <= --lambda-max");
    }
  }
}

}  // namespace grasscos::cli
