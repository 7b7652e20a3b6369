#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace grasscos {

using Complex = std::complex<double>;

/// Raised by log_gamma when the argument sits on a pole of Gamma.
class PoleError : public std::domain_error {
 public:
  PoleError(const char* what, int index) : std::domain_error(what), index_(index) {}

  /// The pole is at -index().
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Absolute distance below which an argument is treated as a pole of Gamma.
inline constexpr double kPoleTolerance = 1e-14;

/// True when `z` lies within kPoleTolerance of a non-positive integer; the
/// pole is then at -(*index).
bool is_gamma_pole(Complex z, int* index = nullptr);

/// log Gamma(z) via the g=7, 9-term Lanczos series, with the reflection
/// formula for Re z < 1/2. For Re z >= 1/2 the imaginary part is the
/// analytic continuation of log Gamma from the positive axis; in the
/// reflected half-plane it is only meaningful modulo 2*pi.
/// Throws PoleError on a pole.
Complex log_gamma(Complex z);

/// Gegenbauer polynomial C_m^nu(t) by the three-term recurrence.
double gegenbauer(int m, double nu, double t);

/// Chebyshev polynomial T_m(t), the nu -> 0 normalized limit of C_m^nu.
double chebyshev_t(int m, double t);

/// Nodes and weights of a 1-D rule on [lower, upper]. Nodes are strictly
/// increasing and the weights sum to upper - lower.
struct QuadratureRule1D {
  double lower = -1.0;
  double upper = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// 2*order - 1. Throws std::invalid_argument for order < 1.
QuadratureRule1D gauss_legendre(int order);

/// Composite Gauss-Legendre rule on [0, 1] whose panels shrink geometrically
/// (factor `ratio`, `levels` times) toward both endpoints. Integrates
/// functions with algebraic endpoint singularities t^a (1-t)^b, a, b > -1,
/// with error decaying exponentially in `levels` and `order`.
QuadratureRule1D graded_gauss_legendre(int order, int levels, double ratio = 0.15);

}  // namespace grasscos
