#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "grasscos/geometry.hpp"
#include "grasscos/monte_carlo.hpp"
#include "grasscos/random.hpp"
#include "grasscos/transform.hpp"
#include "grasscos_cli/cli.hpp"

namespace grasscos::cli {

namespace {

using nlohmann::json;

constexpr std::array<Field, 3> kFields{Field::Real, Field::Complex, Field::Quaternion};

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& name, double error, double tolerance) {
    const bool ok = std::isfinite(error) && error <= tolerance;
    passed_ = passed_ && ok;
    checks_.push_back(json{{"name", name},
                           {"passed", ok},
                           {"error", std::isfinite(error) ? json(error) : json(nullptr)},
                           {"tolerance", tolerance}});
  }

  json result() const { return json{{"name", name_}, {"passed", passed_}, {"checks", checks_}}; }

 private:
  std::string name_;
  bool passed_ = true;
  json checks_ = json::array();
};

double rel_error(Complex a, Complex b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Relative error between two meromorphic values; infinite when the tags or
// orders disagree.
double value_error(const SpectralValue& a, const SpectralValue& b) {
  if (a.tag() != b.tag() || a.order() != b.order()) return INFINITY;
  return a.is_finite() ? rel_error(a.value(), b.value()) : 0.0;
}

double tol_or(const RunConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

std::vector<GrassmannSignature> signatures_up_to(int max_n) {
  std::vector<GrassmannSignature> out;
  for (Field f : kFields) {
    for (int n = 1; n <= max_n; ++n) {
      for (int p = 1; 2 * p <= n + 1; ++p) out.emplace_back(n, p, f);
    }
  }
  return out;
}

McOptions mc_options(const RunConfig& cfg, std::uint64_t stream) {
  return McOptions{cfg.samples, stream_seed(cfg.seed, stream), cfg.workers};
}

void mc_check(Suite& suite, const std::string& name, const McEstimate& est, Complex expected,
              double sigma) {
  const double dev = std::abs(est.mean - expected);
  suite.check(name, est.std_error > 0.0 ? dev / est.std_error : (dev == 0.0 ? 0.0 : INFINITY),
              sigma);
}

json recursion(const RunConfig& cfg) {
  Suite suite("recursion");
  Rng rng = make_stream(cfg.seed, 1);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  for (const auto& sig : signatures_up_to(5)) {
    double worst = 0.0;
    for (const KType& mu : enumerate_ktypes(sig, 8)) {
      for (int i = 0; i < 3; ++i) {
        const double a = re(rng);
        const double b = im(rng);
        const Complex lambda(a, b);
        worst = std::max(worst, value_error(eta_by_recursion(sig, mu, lambda), eta(sig, mu, lambda)));
      }
    }
    suite.check(sig.to_string() + " recursion vs closed form", worst, tol_or(cfg, 1e-10));
  }
  return suite.result();
}

json functional_equation(const RunConfig& cfg) {
  Suite suite("functional-equation");
  Rng rng = make_stream(cfg.seed, 2);
  const auto sigs = signatures_up_to(6);
  std::uniform_int_distribution<std::size_t> pick(0, sigs.size() - 1);
  std::uniform_real_distribution<double> re(-8.0, 8.0);
  std::uniform_real_distribution<double> im(-4.0, 4.0);
  double worst = 0.0;
  int cases = 0;
  while (cases < 200) {
    const auto& sig = sigs[pick(rng)];
    const auto types = enumerate_ktypes(sig, 8);
    std::uniform_int_distribution<std::size_t> pick_mu(0, types.size() - 1);
    const KType& mu = types[pick_mu(rng)];
    const double a = re(rng);
    const double b = im(rng);
    const Complex lambda(a, b);
    const SpectralValue lhs = eta(sig, mu, lambda) * eta(sig, mu, -lambda);
    const SpectralValue rhs = c_p(sig, lambda) * c_p(sig, -lambda);
    if (!lhs.is_finite() || !rhs.is_finite()) continue;
    worst = std::max(worst, rel_error(lhs.value(), rhs.value()));
    ++cases;
  }
  suite.check("eta(l) eta(-l) = c_P(l) c_P(-l), 200 cases", worst, tol_or(cfg, 1e-11));
  return suite.result();
}

json normalization(const RunConfig& cfg) {
  Suite suite("normalization");
  double worst = 0.0;
  for (const auto& sig : signatures_up_to(8)) {
    worst = std::max(worst, std::abs(c_p(sig, sig.rho()).value() - 1.0));
  }
  suite.check("c_P(rho) = 1, n <= 8", worst, tol_or(cfg, 1e-13));
  return suite.result();
}

json sphere(const RunConfig& cfg) {
  Suite suite("sphere");
  double worst_eta = 0.0;
  double worst_fh = 0.0;
  for (int n : {2, 3, 4}) {
    const GrassmannSignature sig(n, 1, Field::Real);
    for (int m : {0, 2, 4, 6}) {
      for (double shift : {0.5, 1.0, 2.5}) {
        const Complex lambda = sig.rho() + shift;
        const SpectralValue s = sphere_eta(n, m, lambda);
        worst_eta = std::max(worst_eta, value_error(s, eta(sig, KType({m}), lambda)));
        worst_fh = std::max(worst_fh, rel_error(funk_hecke_1d(n, m, lambda), s.value()));
      }
    }
  }
  suite.check("sphere_eta = eta on Gr_1(R^{n+1})", worst_eta, tol_or(cfg, 1e-12));
  suite.check("sphere_eta = Funk-Hecke integral", worst_fh, tol_or(cfg, 1e-7));
  return suite.result();
}

json quadrature(const RunConfig& cfg) {
  Suite suite("quadrature");
  for (int n : {1, 2}) {
    const SphereGrid grid = make_sphere_grid(n, cfg.grid_order);
    const Complex lambda = 0.5 * (n + 1) + 2.0;
    const auto& pole = grid.points[0];
    auto zonal = [&](int m) {
      std::vector<Complex> f(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& x = grid.points[i];
        const double t = std::clamp(x[0] * pole[0] + x[1] * pole[1] + x[2] * pole[2], -1.0, 1.0);
        f[i] = n == 1 ? chebyshev_t(m, t) : gegenbauer(m, 0.5, t);
      }
      return f;
    };
    const std::vector<std::size_t> at_pole{0};
    const std::string prefix = "S^" + std::to_string(n) + " ";
    double worst = 0.0;
    for (int m : {0, 2, 4}) {
      const Complex got = cos_transform_sphere_at(grid, lambda, zonal(m), at_pole)[0];
      worst = std::max(worst, std::abs(got - sphere_eta(n, m, lambda).evaluate()));
    }
    suite.check(prefix + "zonal harmonics m = 0, 2, 4", worst, tol_or(cfg, 1e-4));
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < grid.size(); i += std::max<std::size_t>(1, grid.size() / 7)) {
      targets.push_back(i);
    }
    double odd = 0.0;
    for (int m : {1, 3}) {
      for (Complex v : cos_transform_sphere_at(grid, lambda, zonal(m), targets)) {
        odd = std::max(odd, std::abs(v));
      }
    }
    suite.check(prefix + "odd harmonics annihilated", odd, 1e-10);
  }
  return suite.result();
}

json monte_carlo(const RunConfig& cfg) {
  Suite suite("monte-carlo");
  const std::array<GrassmannSignature, 4> sigs{
      GrassmannSignature(2, 1, Field::Real), GrassmannSignature(3, 2, Field::Real),
      GrassmannSignature(3, 2, Field::Complex), GrassmannSignature(3, 2, Field::Quaternion)};
  std::uint64_t stream = 100;
  for (const auto& sig : sigs) {
    const Complex lambda = sig.rho() + 1.0;
    const McEstimate est = mc_c_p(sig, lambda, mc_options(cfg, stream++));
    mc_check(suite, sig.to_string() + " c_P(rho+1) [sigmas]", est, c_p(sig, lambda).value(),
             cfg.sigma);
  }
  const McEstimate at_rho = mc_c_p(sigs[1], sigs[1].rho(), mc_options(cfg, stream++));
  suite.check("c_P(rho) estimate is exactly 1",
              std::abs(at_rho.mean - 1.0) + at_rho.std_error, 0.0);
  return suite.result();
}

json ktype(const RunConfig& cfg) {
  Suite suite("ktype");
  const GrassmannSignature s2(2, 1, Field::Real);
  const McEstimate a = mc_transform_ktype(s2, s2.rho() + 2.0, KType({2}), mc_options(cfg, 200));
  mc_check(suite, s2.to_string() + " mu=(2) [sigmas]", a, sphere_eta(2, 2, s2.rho() + 2.0).value(),
           cfg.sigma);
  const GrassmannSignature s3(3, 2, Field::Real);
  const McEstimate b =
      mc_transform_ktype(s3, s3.rho() + 2.0, KType({2, 0}), mc_options(cfg, 201));
  mc_check(suite, s3.to_string() + " mu=(2,0) [sigmas]", b,
           eta(s3, KType({2, 0}), s3.rho() + 2.0).value(), cfg.sigma);
  return suite.result();
}

json selberg(const RunConfig& cfg) {
  Suite suite("selberg");
  Rng rng = make_stream(cfg.seed, 3);
  std::uniform_real_distribution<double> gamma(0.5, 3.0);
  std::uniform_real_distribution<double> alpha(0.25, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int p = 1 + i % 2;
    const double a = alpha(rng);
    const double g1 = gamma(rng);
    const double g2 = gamma(rng);
    const double oracle = selberg_oracle(p, a, g1, g2);
    worst = std::max(worst, rel_error(selberg_closed(p, a, g1, g2).value(), oracle));
  }
  suite.check("closed form vs quadrature, 20 parameter sets", worst, tol_or(cfg, 1e-6));
  return suite.result();
}

json sin(const RunConfig& cfg) {
  Suite suite("sin");
  const GrassmannSignature s1(1, 1, Field::Real);
  const Complex l1 = s1.rho() + 2.0;
  mc_check(suite, s1.to_string() + " mu=(2) [sigmas]",
           sin_transform_numeric(s1, l1, KType({2}), mc_options(cfg, 300)),
           nu(s1, KType({2}), l1).value(), cfg.sigma);
  const GrassmannSignature s3(3, 2, Field::Real);
  const Complex l3 = s3.rho() + 2.0;
  mc_check(suite, s3.to_string() + " mu=(2,0) [sigmas]",
           sin_transform_numeric(s3, l3, KType({2, 0}), mc_options(cfg, 301)),
           nu(s3, KType({2, 0}), l3).value(), cfg.sigma);

  Rng rng = make_stream(cfg.seed, 4);
  std::uniform_real_distribution<double> re(-8.0, 8.0);
  double worst = 0.0;
  for (Field f : kFields) {
    for (int p = 1; p <= 3; ++p) {
      const GrassmannSignature sig(2 * p - 1, p, f);
      for (const KType& mu : enumerate_ktypes(sig, 8)) {
        const double a = re(rng);
        const double b = re(rng);
        const Complex lambda(a, b);
        worst = std::max(worst, value_error(nu(sig, mu, lambda), nu_from_eta(sig, mu, lambda)));
      }
    }
  }
  suite.check("nu = (-1)^{|mu|/2} eta", worst, tol_or(cfg, 1e-12));
  return suite.result();
}

json geometry(const RunConfig& cfg) {
  Suite suite("geometry");
  std::uint64_t stream = 400;
  for (Field f : kFields) {
    const GrassmannSignature sig(3, 2, f);
    Rng rng = make_stream(cfg.seed, stream++);
    const FramePoint bo = base_point(sig);
    double bridge = 0.0;
    double symmetric = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const GroupElement k = haar_sample(sig, rng);
      const GroupElement h = haar_sample(sig, rng);
      bridge = std::max(bridge,
                        std::abs(cos_angle(apply(k, bo), apply(h, bo)) - alpha_p(h.inverse() * k)));
      symmetric = std::max(symmetric, std::abs(alpha_p(k) - alpha_p(k.inverse())));
    }
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double torus = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const std::array<double, 2> t{angle(rng), angle(rng)};
      torus = std::max(torus, std::abs(alpha_p(torus_point(sig, t)) -
                                       std::abs(std::cos(t[0]) * std::cos(t[1]))));
    }
    const std::string name = sig.to_string();
    suite.check(name + " |Cos(k b_o, h b_o)| = alpha(h^-1 k)", bridge, 1e-10);
    suite.check(name + " alpha(k) = alpha(k^-1)", symmetric, 1e-12);
    suite.check(name + " alpha(torus(t)) = prod |cos t_j|", torus, 1e-12);
  }
  return suite.result();
}

using SuiteFn = json (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"recursion", recursion},   {"functional-equation", functional_equation},
      {"normalization", normalization}, {"sphere", sphere},
      {"quadrature", quadrature}, {"monte-carlo", monte_carlo},
      {"ktype", ktype},           {"selberg", selberg},
      {"sin", sin},               {"geometry", geometry}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

json run_suite(const std::string& name, const RunConfig& cfg) {
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(cfg);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace grasscos::cli
