#include "grasscos/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace grasscos {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);
const double kLogPi = std::log(std::numbers::pi);

Complex log_gamma_right(Complex z) {
  const Complex zm = z - 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (zm + static_cast<double>(i));
  }
  const Complex t = zm + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  using std::numbers::pi;
  if (std::abs(z.imag()) < 1.0) {
    return std::log(std::sin(pi * z));
  }
  const bool lower = z.imag() < 0.0;
  const Complex w = lower ? std::conj(z) : z;
  const Complex i(0.0, 1.0);
  // sin(pi w) = e^{-i pi w} (e^{2 i pi w} - 1) / (2i), |e^{2 i pi w}| < 1.
  Complex value = -i * pi * w + std::log(std::exp(2.0 * i * pi * w) - 1.0) - std::log(2.0 * i);
  return lower ? std::conj(value) : value;
}

}  // namespace

bool is_gamma_pole(Complex z, int* index) {
  const double nearest = std::round(z.real());
  if (nearest > 0.0) return false;
  if (std::abs(z - Complex(nearest, 0.0)) >= kPoleTolerance) return false;
  if (index != nullptr) *index = static_cast<int>(-nearest);
  return true;
}

Complex log_gamma(Complex z) {
  int k = 0;
  if (is_gamma_pole(z, &k)) {
    throw PoleError("log_gamma: argument is a pole of Gamma", k);
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  return kLogPi - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

double gegenbauer(int m, double nu, double t) {
  if (m < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * nu * t;
  for (int k = 2; k <= m; ++k) {
    const double next = (2.0 * t * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_t(int m, double t) {
  if (m < 0) throw std::invalid_argument("chebyshev_t: negative degree");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int k = 2; k <= m; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureRule1D gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  // Returns P_order(x) and its derivative.
  auto legendre = [order](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, order * (x * p1 - p0) / (x * x - 1.0)};
  };

  QuadratureRule1D rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule1D graded_gauss_legendre(int order, int levels, double ratio) {
  if (order < 1 || levels < 0 || !(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("graded_gauss_legendre: bad parameters");
  }
  const QuadratureRule1D base = gauss_legendre(order);

  // Panel breakpoints on [0, 1/2], mirrored onto [1/2, 1].
  std::vector<double> left{0.0};
  for (int l = levels; l >= 1; --l) left.push_back(0.5 * std::pow(ratio, l));
  left.push_back(0.5);

  QuadratureRule1D rule;
  rule.lower = 0.0;
  rule.upper = 1.0;
  auto add_panel = [&](double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back(mid + half * base.nodes[i]);
      rule.weights.push_back(half * base.weights[i]);
    }
  };
  for (std::size_t i = 0; i + 1 < left.size(); ++i) add_panel(left[i], left[i + 1]);
  for (std::size_t i = left.size() - 1; i >= 1; --i) add_panel(1.0 - left[i], 1.0 - left[i - 1]);
  return rule;
}

}  // namespace grasscos
