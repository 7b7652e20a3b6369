#pragma once

#include <array>
#include <span>
#include <vector>

#include "grasscos/spectral.hpp"

namespace grasscos {

/// Product quadrature on S^n (n = 1 or 2) for the normalized measure. The
/// second half of the nodes are the exact negatives of the first half, so
/// odd integrands cancel exactly.
struct SphereGrid {
  int n = 2;
  int order = 0;
  std::vector<std::array<double, 3>> points;  // unused trailing coordinates are 0
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// n = 1: 2*order equally spaced angles. n = 2: Gauss-Legendre(order) in
/// cos(theta) times 2*order equally spaced azimuths. Throws
/// std::invalid_argument for other n or order < 1.
SphereGrid make_sphere_grid(int n, int order);

/// (C^lambda f)(w_i) = sum_j w_j |<x_j, w_i>|^{lambda - rho} f(x_j) at every
/// node. Throws std::domain_error when Re lambda < rho = (n + 1) / 2 and
/// std::invalid_argument when f has the wrong length.
std::vector<Complex> cos_transform_sphere(const SphereGrid& grid, Complex lambda,
                                          std::span<const Complex> f);

/// The same sums at the listed node indices only.
std::vector<Complex> cos_transform_sphere_at(const SphereGrid& grid, Complex lambda,
                                             std::span<const Complex> f,
                                             std::span<const std::size_t> targets);

/// |t|^a with 0^a = 1 for a = 0 and 0 otherwise (Re a >= 0 assumed).
Complex kernel_power(double t, Complex a);

/// Eigenvalue on degree-m harmonics of S^n from the one-dimensional integral
/// c_n int_{-1}^{1} |t|^{lambda-rho} C_m(t)/C_m(1) (1-t^2)^{(n-2)/2} dt, with
/// C_m the Gegenbauer polynomial of index (n-1)/2 (Chebyshev for n = 1) and
/// c_n computed by the same quadrature. The panel grading is refined until
/// two passes agree to 1e-13. Throws std::domain_error when Re lambda < rho
/// and std::invalid_argument unless m is even and >= 0 and n >= 1.
Complex funk_hecke_1d(int n, int m, Complex lambda);

/// Selberg's integral in closed Gamma form, continued meromorphically.
SpectralValue selberg_closed(int p, Complex alpha, Complex g1, Complex g2);

/// Selberg's integral for p in {1, 2} and positive real parameters by graded
/// tensor Gauss-Legendre quadrature (Duffy split of the triangle for p = 2),
/// starting at `order` and doubling until two orders agree to 1e-7
/// relative. Throws std::runtime_error if that does not happen by order 64.
double selberg_oracle(int p, double alpha, double g1, double g2, int order = 8);

}  // namespace grasscos
