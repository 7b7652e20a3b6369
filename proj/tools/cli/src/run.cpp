#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "grasscos_cli/cli.hpp"

namespace grasscos::cli {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json config_json(const RunConfig& cfg) {
  json j;
  j["field"] = std::string(1, field_code(cfg.field));
  j["n"] = cfg.n;
  j["p"] = cfg.p;
  j["lambda"] = cfg.lambda_re ? complex_json({*cfg.lambda_re, cfg.lambda_im}) : json(nullptr);
  j["lambda_min"] = cfg.lambda_min ? json(*cfg.lambda_min) : json(nullptr);
  j["lambda_max"] = cfg.lambda_max ? json(*cfg.lambda_max) : json(nullptr);
  j["lambda_steps"] = cfg.lambda_steps;
  j["mu"] = cfg.mu ? json(*cfg.mu) : json(nullptr);
  j["max_degree"] = cfg.max_degree;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["grid_order"] = cfg.grid_order;
  j["tol"] = cfg.tol ? json(*cfg.tol) : json(nullptr);
  j["sigma"] = cfg.sigma;
  j["suite"] = cfg.suite;
  j["format"] = cfg.format == Format::Csv ? "csv" : "json";
  j["workers"] = cfg.workers;
  return j;
}

json signature_json(const GrassmannSignature& sig) {
  return json{{"field", std::string(1, field_code(sig.field()))},
              {"n", sig.n()},
              {"p", sig.p()},
              {"q", sig.q()},
              {"d", sig.d()},
              {"rho", sig.rho()},
              {"name", sig.to_string()}};
}

json spectrum_rows(const RunConfig& cfg, const GrassmannSignature& sig) {
  const Complex lambda(*cfg.lambda_re, cfg.lambda_im);
  const std::vector<KType> types =
      cfg.mu ? std::vector<KType>{KType(*cfg.mu)} : enumerate_ktypes(sig, cfg.max_degree);
  json rows = json::array();
  for (const KType& mu : types) {
    json row;
    row["mu"] = std::vector<int>(mu.parts().begin(), mu.parts().end());
    row["degree"] = mu.degree();
    row["eta"] = to_json(eta(sig, mu, lambda));
    row["nu"] = sig.p() == sig.q() ? to_json(nu(sig, mu, lambda)) : json(nullptr);
    row["omega"] = omega(sig, mu);
    rows.push_back(std::move(row));
  }
  return rows;
}

json cp_rows(const RunConfig& cfg, const GrassmannSignature& sig) {
  std::vector<double> grid;
  if (cfg.lambda_re) {
    grid.push_back(*cfg.lambda_re);
  } else {
    const double lo = *cfg.lambda_min;
    const double hi = *cfg.lambda_max;
    for (int i = 0; i < cfg.lambda_steps; ++i) {
      grid.push_back(cfg.lambda_steps == 1 ? lo : lo + (hi - lo) * i / (cfg.lambda_steps - 1));
    }
  }
  json rows = json::array();
  for (double re : grid) {
    const Complex lambda(re, cfg.lambda_im);
    rows.push_back(json{{"lambda", complex_json(lambda)}, {"c_p", to_json(c_p(sig, lambda))}});
  }
  return rows;
}

// Gamma factors Gamma(sign * lambda / 2 + offset_j - d j / 2) of eta_mu (or
// of c_P when mu is absent), with their place in the quotient.
struct GammaFamily {
  const char* factor;
  int sign;
  std::vector<double> offsets;
};

std::vector<GammaFamily> gamma_families(const GrassmannSignature& sig,
                                        const std::optional<KType>& mu) {
  const double rho = sig.rho();
  const int p = sig.p();
  const std::vector<int> m = mu ? std::vector<int>(mu->parts().begin(), mu->parts().end())
                                : std::vector<int>(p, 0);
  std::vector<double> num_plus(p), den_plus(p), num_minus(p), den_minus(p);
  for (int j = 0; j < p; ++j) {
    num_plus[j] = 0.5 * (-rho + sig.d() * p);
    den_plus[j] = 0.5 * (rho + m[j]);
    num_minus[j] = 0.5 * (rho + m[j]);
    den_minus[j] = 0.5 * rho;
  }
  std::vector<GammaFamily> out{{"numerator", +1, num_plus}, {"denominator", +1, den_plus}};
  if (mu) {
    out.push_back({"numerator", -1, num_minus});
    out.push_back({"denominator", -1, den_minus});
  }
  return out;
}

json pole_rows(const RunConfig& cfg, const GrassmannSignature& sig) {
  std::optional<KType> mu;
  if (cfg.mu) mu = KType(*cfg.mu);
  const double lo = *cfg.lambda_min;
  const double hi = *cfg.lambda_max;
  struct Hit {
    double lambda;
    std::string factor;
    int sign;
    int j;
    int k;
  };
  std::vector<Hit> hits;
  // Singular hyperplanes are real; a line with Im lambda != 0 misses them.
  if (cfg.lambda_im == 0.0) {
    for (const GammaFamily& fam : gamma_families(sig, mu)) {
      for (int j = 0; j < sig.p(); ++j) {
        const double c = fam.offsets[j] - 0.5 * sig.d() * j;
        for (int k = 0;; ++k) {
          const double lambda = -2.0 * fam.sign * (k + c);
          if ((fam.sign > 0 && lambda < lo) || (fam.sign < 0 && lambda > hi)) break;
          if (lambda >= lo && lambda <= hi) hits.push_back({lambda, fam.factor, fam.sign, j + 1, k});
        }
      }
    }
  }
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.factor != b.factor) return a.factor > b.factor;  // numerator first
    if (a.sign != b.sign) return a.sign > b.sign;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
  json rows = json::array();
  for (const Hit& h : hits) {
    const Complex lambda(h.lambda, 0.0);
    const SpectralValue value = mu ? eta(sig, *mu, lambda) : c_p(sig, lambda);
    rows.push_back(json{{"lambda", h.lambda},
                        {"factor", h.factor},
                        {"lambda_sign", h.sign},
                        {"j", h.j},
                        {"k", h.k},
                        {"value", to_json(value)}});
  }
  return rows;
}

std::string csv_number(const json& v) { return v.is_null() ? std::string() : v.dump(); }

std::string csv_value(const json& v) {
  if (v.is_null()) return ",,,";
  const std::string tag = v.at("tag");
  if (tag == "finite") return tag + "," + csv_number(v["re"]) + "," + csv_number(v["im"]) + ",0";
  return tag + ",,," + csv_number(v["order"]);
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const json& doc) {
  std::ostringstream out;
  if (doc.contains("error")) {
    out << "error_code,message\n"
        << csv_text(doc["error"]["code"]) << "," << csv_text(doc["error"]["message"]) << "\n";
    return out.str();
  }
  const std::string command = doc.at("command");
  if (command == "spectrum") {
    out << "mu,degree,eta_tag,eta_re,eta_im,eta_order,nu_tag,nu_re,nu_im,nu_order,omega\n";
    for (const auto& row : doc["rows"]) {
      std::string mu;
      for (const auto& m : row["mu"]) mu += (mu.empty() ? "" : " ") + m.dump();
      out << mu << "," << row["degree"].dump() << "," << csv_value(row["eta"]) << ","
          << csv_value(row["nu"]) << "," << csv_number(row["omega"]) << "\n";
    }
  } else if (command == "cp") {
    out << "lambda_re,lambda_im,tag,re,im,order\n";
    for (const auto& row : doc["rows"]) {
      out << csv_number(row["lambda"]["re"]) << "," << csv_number(row["lambda"]["im"]) << ","
          << csv_value(row["c_p"]) << "\n";
    }
  } else if (command == "poles") {
    out << "lambda,factor,lambda_sign,j,k,tag,re,im,order\n";
    for (const auto& row : doc["rows"]) {
      out << csv_number(row["lambda"]) << "," << std::string(row["factor"]) << ","
          << row["lambda_sign"].dump() << "," << row["j"].dump() << "," << row["k"].dump()
          << "," << csv_value(row["value"]) << "\n";
    }
  } else if (command == "verify") {
    out << "suite,check,passed,error,tolerance\n";
    for (const auto& suite : doc["suites"]) {
      for (const auto& check : suite["checks"]) {
        out << std::string(suite["name"]) << "," << csv_text(check["name"]) << ","
            << (check["passed"].get<bool>() ? "true" : "false") << ","
            << csv_number(check["error"]) << "," << csv_number(check["tolerance"]) << "\n";
      }
    }
  }
  return out.str();
}

Report error_report(const std::string& command, const std::string& code,
                    const std::string& message) {
  const bool known = command == "spectrum" || command == "cp" || command == "verify" ||
                     command == "poles";
  Report r;
  r.exit_code = kExitInvalidConfig;
  r.document = json{{"schema_version", kSchemaVersion},
                    {"command", known ? json(command) : json(nullptr)},
                    {"status", "error"},
                    {"error", {{"code", code}, {"message", message}}}};
  return r;
}

}  // namespace

json to_json(const SpectralValue& v) {
  switch (v.tag()) {
    case ValueTag::Finite:
      return json{{"tag", "finite"}, {"re", v.value().real()}, {"im", v.value().imag()}};
    case ValueTag::Pole:
      return json{{"tag", "pole"}, {"order", v.order()}};
    case ValueTag::Zero:
      return json{{"tag", "zero"}, {"order", v.order()}};
  }
  return nullptr;
}

Report run(const RunConfig& cfg) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    return error_report(cfg.command, "invalid_config", e.what());
  }
  Report report;
  json& doc = report.document;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = cfg.command;
  doc["config"] = config_json(cfg);
  try {
    if (cfg.command == "verify") {
      const std::vector<std::string> names =
          cfg.suite == "all" ? suite_names() : std::vector<std::string>{cfg.suite};
      json suites = json::array();
      bool passed = true;
      for (const auto& name : names) {
        json suite = run_suite(name, cfg);
        passed = passed && suite["passed"].get<bool>();
        suites.push_back(std::move(suite));
      }
      doc["status"] = passed ? "passed" : "failed";
      doc["suites"] = std::move(suites);
      report.exit_code = passed ? kExitOk : kExitVerifyFailed;
      return report;
    }
    const GrassmannSignature sig(cfg.n, cfg.p, cfg.field);
    doc["signature"] = signature_json(sig);
    if (cfg.command == "spectrum") {
      doc["rows"] = spectrum_rows(cfg, sig);
    } else if (cfg.command == "cp") {
      doc["rows"] = cp_rows(cfg, sig);
    } else {
      doc["rows"] = pole_rows(cfg, sig);
    }
    doc["status"] = "ok";
  } catch (const std::invalid_argument& e) {
    return error_report(cfg.command, "invalid_config", e.what());
  } catch (const std::domain_error& e) {
    return error_report(cfg.command, "invalid_config", e.what());
  } catch (const std::exception& e) {
    Report failed = error_report(cfg.command, "numerical_failure", e.what());
    failed.exit_code = kExitVerifyFailed;
    return failed;
  }
  return report;
}

std::string render(const Report& report, Format format) {
  if (format == Format::Csv) return render_csv(report.document);
  return report.document.dump(2) + "\n";
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  Report report;
  Format format = Format::Json;
  try {
    cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitOk;
    format = cfg->format;
    report = run(*cfg);
  } catch (const ConfigError& e) {
    report = error_report("", "invalid_config", e.what());
  }
  if (report.exit_code == kExitInvalidConfig || report.document.contains("error")) {
    err << "grasscos: " << std::string(report.document["error"]["message"]) << "\n";
  }
  const std::string text = render(report, format);
  if (cfg && !cfg->output.empty()) {
    std::ofstream file(cfg->output, std::ios::binary);
    if (!file) {
      err << "grasscos: cannot open " << cfg->output << " for writing\n";
      return kExitInvalidConfig;
    }
    file << text;
  } else {
    out << text;
  }
  return report.exit_code;
}

}  // namespace grasscos::cli
