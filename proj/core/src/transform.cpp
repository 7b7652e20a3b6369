#include "grasscos/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grasscos {

namespace {

constexpr double kGradingRatio = 0.15;

// Levels of geometric grading so that the unresolved innermost panel of an
// integrand ~ t^e near the endpoint contributes less than `tol`.
int grading_levels(double min_exponent, double tol) {
  const double e = std::max(min_exponent, -0.95) + 1.0;
  const double levels = std::log(2.0 * tol) / (e * std::log(kGradingRatio));
  return std::clamp(static_cast<int>(std::ceil(levels)), 4, 200);
}

// Nodes of the graded rule on [0, 1] carrying 1 - t exactly, so endpoint
// singularities at t = 1 are evaluated without cancellation.
struct UnitNode {
  double t;
  double one_minus_t;
  double weight;
};

std::vector<UnitNode> graded_unit_nodes(int order, int levels) {
  const QuadratureRule1D rule = graded_gauss_legendre(order, levels, kGradingRatio);
  // The rule is symmetric about 1/2: its first half mirrors onto the second.
  const std::size_t half = rule.size() / 2;
  std::vector<UnitNode> nodes;
  nodes.reserve(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    const double x = rule.nodes[i];
    nodes.push_back({x, 1.0 - x, rule.weights[i]});
    nodes.push_back({1.0 - x, x, rule.weights[i]});
  }
  return nodes;
}

void require_sphere_domain(int n, Complex lambda, const char* what) {
  const double rho = 0.5 * (n + 1);
  if (!(lambda.real() >= rho)) throw std::domain_error(what);
}

}  // namespace

SphereGrid make_sphere_grid(int n, int order) {
  if (order < 1) throw std::invalid_argument("make_sphere_grid: order must be positive");
  SphereGrid grid;
  grid.n = n;
  grid.order = order;
  const int azimuths = 2 * order;
  // Build one hemisphere and append exact negatives, so that x and -x give
  // <x, w> of opposite sign bit for bit and odd integrands cancel exactly.
  if (n == 1) {
    for (int k = 0; k < order; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / azimuths;
      grid.points.push_back({std::cos(phi), std::sin(phi), 0.0});
      grid.weights.push_back(1.0 / azimuths);
    }
  } else if (n == 2) {
    const QuadratureRule1D gl = gauss_legendre(order);
    for (int i = 0; i < (order + 1) / 2; ++i) {
      const bool equator = 2 * i + 1 == order;
      const double z = equator ? 0.0 : gl.nodes[i];
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      for (int k = 0; k < (equator ? order : azimuths); ++k) {
        const double phi = 2.0 * std::numbers::pi * k / azimuths;
        grid.points.push_back({r * std::cos(phi), r * std::sin(phi), z});
        grid.weights.push_back(0.5 * gl.weights[i] / azimuths);
      }
    }
  } else {
    throw std::invalid_argument("make_sphere_grid: only n = 1 and n = 2 are supported");
  }
  const std::size_t half = grid.points.size();
  for (std::size_t j = 0; j < half; ++j) {
    const auto& x = grid.points[j];
    grid.points.push_back({-x[0], -x[1], -x[2]});
    grid.weights.push_back(grid.weights[j]);
  }
  return grid;
}

Complex kernel_power(double t, Complex a) {
  const double x = std::abs(t);
  if (x == 0.0) return (a == Complex(0.0, 0.0)) ? 1.0 : 0.0;
  if (a.imag() == 0.0) return std::pow(x, a.real());
  return std::exp(a * std::log(x));
}

std::vector<Complex> cos_transform_sphere_at(const SphereGrid& grid, Complex lambda,
                                             std::span<const Complex> f,
                                             std::span<const std::size_t> targets) {
  require_sphere_domain(grid.n, lambda, "cos_transform_sphere: Re lambda below rho");
  if (f.size() != grid.size()) {
    throw std::invalid_argument("cos_transform_sphere: f has the wrong length");
  }
  const Complex a = lambda - 0.5 * (grid.n + 1);
  std::vector<Complex> out;
  out.reserve(targets.size());
  for (std::size_t i : targets) {
    if (i >= grid.size()) throw std::out_of_range("cos_transform_sphere: target index");
    const auto& w = grid.points[i];
    Complex sum = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto& x = grid.points[j];
      const double t = x[0] * w[0] + x[1] * w[1] + x[2] * w[2];
      sum += grid.weights[j] * kernel_power(t, a) * f[j];
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Complex> cos_transform_sphere(const SphereGrid& grid, Complex lambda,
                                          std::span<const Complex> f) {
  std::vector<std::size_t> all(grid.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return cos_transform_sphere_at(grid, lambda, f, all);
}

Complex funk_hecke_1d(int n, int m, Complex lambda) {
  if (n < 1) throw std::invalid_argument("funk_hecke_1d: n must be positive");
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("funk_hecke_1d: m must be even and >= 0");
  require_sphere_domain(n, lambda, "funk_hecke_1d: Re lambda below rho");
  const Complex a = lambda - 0.5 * (n + 1);
  const double nu = 0.5 * (n - 1);
  const double weight_exp = 0.5 * (n - 2);
  auto zonal = [&](double t) {
    return n == 1 ? chebyshev_t(m, t) : gegenbauer(m, nu, t) / gegenbauer(m, nu, 1.0);
  };

  // The integrand is even in t, so integrate over [0, 1] only.
  const int levels = grading_levels(std::min({a.real(), weight_exp, 0.0}), 1e-16);
  Complex previous = 0.0;
  bool have_previous = false;
  for (int order = 12; order <= 96; order += 12) {
    double mass = 0.0;
    Complex sum = 0.0;
    double scale = 0.0;
    for (const UnitNode& node : graded_unit_nodes(order, levels)) {
      const double t = node.t;
      const double w = node.weight * std::pow(node.one_minus_t * (1.0 + t), weight_exp);
      const Complex term = w * kernel_power(t, a) * zonal(t);
      mass += w;
      sum += term;
      scale += std::abs(term);
    }
    const Complex value = sum / mass;
    if (have_previous && std::abs(value - previous) <= 1e-13 * std::max(scale / mass, 1e-300)) {
      return value;
    }
    previous = value;
    have_previous = true;
  }
  throw std::runtime_error("funk_hecke_1d: quadrature did not converge");
}

SpectralValue selberg_closed(int p, Complex alpha, Complex g1, Complex g2) {
  if (p < 1) throw std::invalid_argument("selberg_closed: p must be positive");
  GermProduct prod;
  for (int j = 1; j <= p; ++j) {
    prod.mul_gamma(alpha * static_cast<double>(j) + 1.0);
    prod.mul_gamma(alpha * static_cast<double>(j - 1) + g1);
    prod.mul_gamma(alpha * static_cast<double>(j - 1) + g2);
    prod.div_gamma(alpha + 1.0);
    prod.div_gamma(alpha * static_cast<double>(p + j - 2) + g1 + g2);
  }
  return prod.result();
}

double selberg_oracle(int p, double alpha, double g1, double g2, int order) {
  if (p != 1 && p != 2) throw std::invalid_argument("selberg_oracle: p must be 1 or 2");
  if (!(alpha > 0.0 && g1 > 0.0 && g2 > 0.0)) {
    throw std::invalid_argument("selberg_oracle: parameters must be positive");
  }
  if (order < 1) throw std::invalid_argument("selberg_oracle: order must be positive");
  const int levels = grading_levels(std::min(g1, g2) - 1.0, 1e-13);

  auto integrate = [&](int k) {
    const std::vector<UnitNode> nodes = graded_unit_nodes(k, levels);
    if (p == 1) {
      double sum = 0.0;
      for (const UnitNode& x : nodes) {
        sum += x.weight * std::pow(x.t, g1 - 1.0) * std::pow(x.one_minus_t, g2 - 1.0);
      }
      return sum;
    }
    // Twice the integral over t1 < t2, with t1 = t2 * u.
    std::vector<double> fu(nodes.size());
    std::vector<double> ft(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const UnitNode& x = nodes[i];
      fu[i] = x.weight * std::pow(x.t, g1 - 1.0) * std::pow(x.one_minus_t, 2.0 * alpha);
      ft[i] = x.weight * std::pow(x.t, 2.0 * g1 + 2.0 * alpha - 1.0) *
              std::pow(x.one_minus_t, g2 - 1.0);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const UnitNode& u = nodes[i];
      double inner = 0.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const UnitNode& t = nodes[j];
        // 1 - t u written to stay accurate when both are close to 1.
        const double gap = t.one_minus_t + u.one_minus_t - t.one_minus_t * u.one_minus_t;
        inner += ft[j] * std::pow(gap, g2 - 1.0);
      }
      sum += fu[i] * inner;
    }
    return 2.0 * sum;
  };

  double previous = integrate(order);
  for (int k = 2 * order; k <= 64; k *= 2) {
    const double current = integrate(k);
    if (std::abs(current - previous) <= 1e-7 * std::abs(current)) return current;
    previous = current;
  }
  throw std::runtime_error("selberg_oracle: quadrature did not converge");
}

}  // namespace grasscos
