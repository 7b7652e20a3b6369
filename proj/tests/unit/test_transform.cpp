#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "grasscos/monte_carlo.hpp"
#include "grasscos/scalar.hpp"
#include "grasscos/transform.hpp"

using namespace grasscos;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Zonal harmonic of degree m about `pole`, normalized to 1 at the pole.
std::vector<Complex> zonal(const SphereGrid& grid, int m, const std::array<double, 3>& pole) {
  std::vector<Complex> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = dot(grid.points[i], pole);
    f[i] = grid.n == 1 ? chebyshev_t(m, t) : gegenbauer(m, 0.5, t);
  }
  return f;
}

double beta(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

double within_sigmas(const McEstimate& e, Complex expected) {
  return std::abs(e.mean - expected) / e.std_error;
}

}  // namespace

TEST_CASE("sphere grids") {
  for (int n : {1, 2}) {
    for (int order : {1, 4, 17, 64}) {
      const SphereGrid grid = make_sphere_grid(n, order);
      double total = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(grid.weights[i] > 0.0);
        total += grid.weights[i];
        CHECK(std::abs(dot(grid.points[i], grid.points[i]) - 1.0) < 1e-14);
        if (n == 1) CHECK(grid.points[i][2] == 0.0);
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(make_sphere_grid(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_sphere_grid(2, 0), std::invalid_argument);
}

TEST_CASE("kernel_power") {
  CHECK(kernel_power(0.0, 0.0) == Complex(1.0, 0.0));
  CHECK(kernel_power(0.0, 0.5) == Complex(0.0, 0.0));
  CHECK(std::abs(kernel_power(-0.5, 2.0) - 0.25) < 1e-16);
  CHECK(std::abs(kernel_power(0.25, Complex(0.0, 1.0)) - std::exp(Complex(0.0, std::log(0.25)))) < 1e-15);
}

TEST_CASE("cos_transform_sphere of constants") {
  for (int n : {1, 2}) {
    const SphereGrid grid = make_sphere_grid(n, 64);
    const GrassmannSignature sig(n, 1, Field::Real);
    const std::vector<Complex> one(grid.size(), 1.0);
    // At lambda = rho the kernel is identically 1.
    for (const Complex v : cos_transform_sphere(grid, sig.rho(), one)) CHECK(std::abs(v - 1.0) < 1e-12);
    const Complex lambda = sig.rho() + 2.0;
    const Complex expected = c_p(sig, lambda).value();
    for (const Complex v : cos_transform_sphere(grid, lambda, one)) CHECK(std::abs(v - expected) < 1e-4);
  }
}

TEST_CASE("cos_transform_sphere errors") {
  const SphereGrid grid = make_sphere_grid(2, 8);
  const std::vector<Complex> one(grid.size(), 1.0);
  CHECK_THROWS_AS(cos_transform_sphere(grid, Complex(1.49, 3.0), one), std::domain_error);
  const std::vector<Complex> short_f(3, 1.0);
  CHECK_THROWS_AS(cos_transform_sphere(grid, 3.0, short_f), std::invalid_argument);
  const std::size_t bad[] = {grid.size()};
  CHECK_THROWS_AS(cos_transform_sphere_at(grid, 3.0, one, bad), std::out_of_range);
}

TEST_CASE("property: parity annihilation") {
  for (int n : {1, 2}) {
    const SphereGrid grid = make_sphere_grid(n, 32);
    const double rho = 0.5 * (n + 1);
    for (int m : {1, 3, 5}) {
      const auto f = zonal(grid, m, grid.points[7]);
      std::vector<Complex> g(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& x = grid.points[i];
        g[i] = n == 1 ? std::pow(x[0], m) : x[0] * x[1] * std::pow(x[2], m);
      }
      for (const Complex lambda : {Complex(rho + 0.3, 0.0), Complex(rho + 2.0, 1.5)}) {
        for (const Complex v : cos_transform_sphere(grid, lambda, f)) CHECK(std::abs(v) < 1e-10);
        for (const Complex v : cos_transform_sphere(grid, lambda, g)) CHECK(std::abs(v) < 1e-10);
      }
    }
  }
}

TEST_CASE("cos_transform_sphere reproduces the spectrum on zonal harmonics") {
  // The circle rule is a trapezoid sum over a kernel with a kink at 0, so
  // its error decays only like order^{-(1 + lambda - rho)}; it gets 128.
  for (const auto& [n, order] : {std::pair{1, 128}, std::pair{2, 64}}) {
    const SphereGrid grid = make_sphere_grid(n, order);
    const double rho = 0.5 * (n + 1);
    for (std::size_t target : {std::size_t{0}, grid.size() / 3, grid.size() - 5}) {
      const std::size_t at[] = {target};
      for (int m : {0, 2, 4}) {
        const auto f = zonal(grid, m, grid.points[target]);
        // Tolerance schedule: 1e-3 below rho + 1, 1e-4 from rho + 1, 1e-6 from rho + 2.
        for (const auto& [shift, tol] : {std::pair{0.5, 1e-3}, std::pair{1.0, 1e-4}, std::pair{2.0, 1e-6},
                                         std::pair{2.5, 1e-6}}) {
          const Complex lambda = rho + shift;
          const Complex got = cos_transform_sphere_at(grid, lambda, f, at)[0];
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(shift);
          CHECK(std::abs(got - sphere_eta(n, m, lambda).evaluate()) < tol);
        }
      }
    }
  }
}

TEST_CASE("cos_transform_sphere_at agrees with the full transform") {
  const SphereGrid grid = make_sphere_grid(2, 16);
  const auto f = zonal(grid, 2, grid.points[3]);
  const auto full = cos_transform_sphere(grid, Complex(3.2, 0.7), f);
  const std::size_t targets[] = {0, 5, 40, grid.size() - 1};
  const auto some = cos_transform_sphere_at(grid, Complex(3.2, 0.7), f, targets);
  for (std::size_t k = 0; k < 4; ++k) CHECK(some[k] == full[targets[k]]);
}

TEST_CASE("property: quadrature converges under refinement") {
  // Doubling the order moves the transform of a zonal harmonic by less than
  // ten times the reported tolerance once Re lambda >= rho + 1.
  const double rho = 1.5;
  for (int m : {0, 2, 4}) {
    for (double shift : {1.0, 2.0, 3.5}) {
      const Complex lambda(rho + shift, 0.4);
      Complex previous;
      for (int order : {32, 64}) {
        const SphereGrid grid = make_sphere_grid(2, order);
        const std::size_t at[] = {grid.size() / 2};
        const auto f = zonal(grid, m, grid.points[at[0]]);
        const Complex v = cos_transform_sphere_at(grid, lambda, f, at)[0];
        if (order == 64) CHECK(std::abs(v - previous) < 10.0 * 1e-4);
        previous = v;
      }
    }
  }
}

TEST_CASE("funk_hecke_1d normalization and c_p") {
  for (int n = 1; n <= 6; ++n) {
    const GrassmannSignature sig(n, 1, Field::Real);
    CHECK(std::abs(funk_hecke_1d(n, 0, sig.rho()) - 1.0) < 1e-12);
    for (const Complex shift : {Complex(0.25, 0.0), Complex(1.0, 2.0), Complex(4.5, -1.0)}) {
      const Complex lambda = sig.rho() + shift;
      CHECK(rel(funk_hecke_1d(n, 0, lambda), c_p(sig, lambda).value()) < 1e-8);
    }
  }
  CHECK_THROWS_AS(funk_hecke_1d(2, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(funk_hecke_1d(2, 3, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(funk_hecke_1d(0, 2, 4.0), std::invalid_argument);
}

TEST_CASE("funk_hecke_1d matches sphere_eta") {
  for (int n : {2, 3, 4}) {
    const double rho = 0.5 * (n + 1);
    for (int m : {2, 4, 6}) {
      for (double shift : {0.5, 1.0, 2.5}) {
        const Complex lambda = rho + shift;
        const Complex expected = sphere_eta(n, m, lambda).evaluate();
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(shift);
        CHECK(std::abs(funk_hecke_1d(n, m, lambda) - expected) <= 1e-7 * std::abs(expected));
      }
    }
  }
  // Polynomial kernel: eta_m vanishes for m > lambda - rho.
  CHECK(std::abs(funk_hecke_1d(2, 4, 3.5)) < 1e-14);
}

TEST_CASE("selberg_closed examples") {
  gen::Gen g(51);
  for (int i = 0; i < 20; ++i) {
    const double g1 = g.real(0.2, 6.0);
    const double g2 = g.real(0.2, 6.0);
    CHECK(rel(selberg_closed(1, g.real(0.1, 3.0), g1, g2).value(), beta(g1, g2)) < 1e-13);
    const Complex a(g.real(0.1, 3.0), g.real(-1.0, 1.0));
    const Complex z1(g.real(0.2, 6.0), g.real(-2.0, 2.0));
    const Complex z2(g.real(0.2, 6.0), g.real(-2.0, 2.0));
    const int p = g.integer(1, 4);
    CHECK(rel(selberg_closed(p, a, z1, z2).value(), selberg_closed(p, a, z2, z1).value()) < 1e-13);
  }
  CHECK(selberg_closed(1, 1.0, 0.0, 2.0).tag() == ValueTag::Pole);
  CHECK_THROWS_AS(selberg_closed(0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("selberg at alpha = 1 expands into Beta functions") {
  // (t1 - t2)^2 = t1^2 - 2 t1 t2 + t2^2 splits the p = 2 integral.
  gen::Gen g(52);
  for (int i = 0; i < 20; ++i) {
    const double g1 = g.real(0.3, 5.0);
    const double g2 = g.real(0.3, 5.0);
    const double b0 = beta(g1, g2);
    const double expected = 2.0 * beta(g1 + 2.0, g2) * b0 - 2.0 * std::pow(beta(g1 + 1.0, g2), 2);
    CHECK(rel(selberg_closed(2, 1.0, g1, g2).value(), expected) < 1e-12);
  }
}

TEST_CASE("selberg_oracle examples") {
  CHECK(std::abs(selberg_oracle(1, 0.7, 2.0, 3.0) - 1.0 / 12.0) < 1e-12);
  CHECK(std::abs(selberg_oracle(2, 0.5, 1.0, 1.0) - selberg_closed(2, 0.5, 1.0, 1.0).value().real()) < 1e-6);
  gen::Gen g(53);
  for (int i = 0; i < 20; ++i) {
    const int p = g.integer(1, 2);
    const double a = g.real(0.2, 2.5);
    const double g1 = g.real(0.5, 4.0);
    const double g2 = g.real(0.5, 4.0);
    const double closed = selberg_closed(p, a, g1, g2).value().real();
    CHECK(std::abs(selberg_oracle(p, a, g1, g2) - closed) <= 1e-6 * closed);
  }
  // Raising gamma_1 shrinks t^{gamma_1 - 1} on (0, 1).
  double previous = INFINITY;
  for (double g1 = 0.5; g1 <= 5.0; g1 += 0.5) {
    const double v = selberg_oracle(2, 0.8, g1, 1.5);
    CHECK(v < previous);
    previous = v;
  }
  CHECK_THROWS_AS(selberg_oracle(3, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(selberg_oracle(2, -1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("mc_c_p is exactly 1 at rho") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const GrassmannSignature sig(3, 2, f);
    const McEstimate e = mc_c_p(sig, sig.rho(), {.samples = 1000, .seed = 3, .workers = 1});
    CHECK(e.mean == Complex(1.0, 0.0));
    CHECK(e.std_error == 0.0);
    CHECK(e.samples == 1000);
    CHECK(e.seed == 3);
  }
}

TEST_CASE("Monte Carlo determinism and worker independence") {
  const GrassmannSignature sig(3, 2, Field::Complex);
  const Complex lambda = sig.rho() + 1.0;
  const McOptions base{.samples = 3 * kMcChunk + 123, .seed = 99, .workers = 1};
  const McEstimate a = mc_c_p(sig, lambda, base);
  const McEstimate b = mc_c_p(sig, lambda, base);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  for (int workers : {2, 3, 8}) {
    McOptions o = base;
    o.workers = workers;
    const McEstimate c = mc_c_p(sig, lambda, o);
    CHECK(c.mean == a.mean);
    CHECK(c.std_error == a.std_error);
  }
  McOptions other = base;
  other.seed = 100;
  CHECK(mc_c_p(sig, lambda, other).mean != a.mean);
  CHECK(within_sigmas(a, c_p(sig, lambda).value()) < 4.0);
}

TEST_CASE("Monte Carlo argument checks") {
  const GrassmannSignature sig(2, 1, Field::Real);
  CHECK_THROWS_AS(mc_c_p(sig, 1.0, {}), std::domain_error);
  CHECK_THROWS_AS(mc_c_p(sig, 3.0, {.samples = 0}), std::invalid_argument);
  CHECK_THROWS_AS(mc_transform_ktype(sig, 3.0, KType({4}), {}), std::domain_error);
  CHECK_THROWS_AS(mc_transform_ktype(sig, 3.0, KType({1}), {}), std::domain_error);
  CHECK_THROWS_AS(sin_transform_numeric(sig, 3.0, KType({0}), {}), std::domain_error);
  CHECK(test_function_for(GrassmannSignature(5, 3, Field::Quaternion), KType({2, 0, 0})) ==
        TestFunction::Quadratic);
  CHECK_THROWS_AS(test_function_for(GrassmannSignature(5, 3, Field::Real), KType({2, 2, 0})),
                  std::domain_error);
}

TEST_CASE("property: mc_c_p is unbiased over independent seeds") {
  const GrassmannSignature sig(2, 1, Field::Real);
  const Complex lambda = sig.rho() + 1.0;
  constexpr int kSeeds = 50;
  Complex sum;
  double var = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    const McEstimate e = mc_c_p(sig, lambda, {.samples = 20000, .seed = static_cast<std::uint64_t>(1000 + s)});
    sum += e.mean;
    var += e.std_error * e.std_error;
  }
  const Complex pooled = sum / static_cast<double>(kSeeds);
  const double pooled_se = std::sqrt(var) / kSeeds;
  CHECK(std::abs(pooled - c_p(sig, lambda).value()) <= 3.0 * pooled_se);
}

TEST_CASE("mc_transform_ktype") {
  const GrassmannSignature sphere(2, 1, Field::Real);
  const Complex lambda = sphere.rho() + 2.0;
  const McOptions opts{.samples = 200000, .seed = 7};
  const McEstimate trivial = mc_transform_ktype(sphere, lambda, KType({0}), opts);
  const McEstimate plain = mc_c_p(sphere, lambda, opts);
  CHECK(std::abs(trivial.mean - plain.mean) < 1e-12);
  const McEstimate quad = mc_transform_ktype(sphere, lambda, KType({2}), opts);
  CHECK(within_sigmas(quad, sphere_eta(2, 2, lambda).value()) <= 3.0);
  CHECK(quad.std_error / std::abs(quad.mean) < 0.05);

  for (Field f : {Field::Complex, Field::Quaternion}) {
    const GrassmannSignature sig(3, 2, f);
    const Complex at = sig.rho() + 2.0;
    const McEstimate e = mc_transform_ktype(sig, at, KType({2, 0}), {.samples = 100000, .seed = 8});
    CAPTURE(sig.to_string());
    CHECK(within_sigmas(e, eta(sig, KType({2, 0}), at).value()) <= 3.0);
  }
}

TEST_CASE("sin_transform_numeric") {
  const GrassmannSignature circle(1, 1, Field::Real);
  const Complex lambda = circle.rho() + 2.0;
  const McOptions opts{.samples = 200000, .seed = 9};
  const McEstimate trivial = sin_transform_numeric(circle, lambda, KType({0}), opts);
  CHECK(within_sigmas(trivial, c_p(circle, lambda).value()) <= 3.0);
  const McEstimate two = sin_transform_numeric(circle, lambda, KType({2}), opts);
  const Complex expected = nu(circle, KType({2}), lambda).value();
  CHECK(std::abs(expected + eta(circle, KType({2}), lambda).value()) < 1e-14);
  CHECK(within_sigmas(two, expected) <= 3.0);
}

TEST_CASE("property: spectral inversion on the supported library") {
  // eta_mu(lambda) eta_mu(-lambda) multiplies each coefficient by
  // c_P(lambda) c_P(-lambda).
  gen::Gen g(54);
  int done = 0;
  while (done < 100) {
    const auto sig = g.signature(7);
    const Complex lambda = g.lambda(9.0, 4.0);
    const auto cc = c_p(sig, lambda) * c_p(sig, -lambda);
    if (!cc.is_finite()) continue;
    std::vector<int> two(sig.p(), 0);
    two[0] = 2;
    for (const KType& mu : {KType::trivial(sig.p()), KType(two)}) {
      const Complex coeff(g.real(-1.0, 1.0), g.real(-1.0, 1.0));
      const auto there = eta(sig, mu, lambda);
      const auto back = eta(sig, mu, -lambda);
      if (!there.is_finite() || !back.is_finite()) continue;
      const Complex round_trip = back.value() * (there.value() * coeff);
      CHECK(std::abs(round_trip - cc.value() * coeff) <= 1e-10 * std::abs(cc.value() * coeff));
    }
    ++done;
  }
}
