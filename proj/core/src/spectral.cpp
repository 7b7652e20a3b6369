#include "grasscos/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace grasscos {

namespace {

double sign_of_half_sum(const KType& mu) {
  const int half = mu.signed_sum() / 2;
  return (half % 2 == 0) ? 1.0 : -1.0;
}

void require_valid(const GrassmannSignature& sig, const KType& mu, const char* where) {
  if (!in_lattice(sig, mu)) {
    throw std::invalid_argument(std::string(where) + ": K-type " + mu.to_string() +
                                " is not in the lattice of " + sig.to_string());
  }
}

double linear_zero_tol(double scale) { return 1e-12 * (1.0 + scale); }

// Gamma_{p,d}(z + shift_j) for a constant-vector argument z whose
// derivative in lambda is `slope`, with optional per-coordinate offsets.
void mul_gindikin(GermProduct& g, int p, int d, Complex z, double slope, int sign,
                  std::span<const int> offsets = {}) {
  for (int j = 0; j < p; ++j) {
    Complex arg = z - 0.5 * d * j;
    if (!offsets.empty()) arg += 0.5 * offsets[j];
    if (sign > 0) {
      g.mul_gamma(arg, slope);
    } else {
      g.div_gamma(arg, slope);
    }
  }
}

}  // namespace

char field_code(Field f) {
  switch (f) {
    case Field::Real: return 'R';
    case Field::Complex: return 'C';
    case Field::Quaternion: return 'H';
  }
  return '?';
}

Field parse_field(std::string_view text) {
  if (text == "R" || text == "r" || text == "real") return Field::Real;
  if (text == "C" || text == "c" || text == "complex") return Field::Complex;
  if (text == "H" || text == "h" || text == "quaternion") return Field::Quaternion;
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected R, C or H)");
}

GrassmannSignature::GrassmannSignature(int n, int p, Field field) : n_(n), p_(p), field_(field) {
  if (p < 1 || p > n + 1 - p) {
    throw std::invalid_argument("GrassmannSignature: need 1 <= p <= q = n + 1 - p (n=" +
                                std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
}

std::string GrassmannSignature::to_string() const {
  std::ostringstream os;
  os << "Gr_" << p_ << "(" << field_code(field_) << "^" << (n_ + 1) << ")";
  return os.str();
}

bool KType::is_trivial() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int m) { return m == 0; });
}

int KType::signed_sum() const {
  int s = 0;
  for (int m : parts_) s += m;
  return s;
}

int KType::degree() const {
  int s = 0;
  for (int m : parts_) s += std::abs(m);
  return s;
}

KType KType::shifted(std::size_t j, int sign) const {
  std::vector<int> parts = parts_;
  parts.at(j) += 2 * sign;
  return KType(std::move(parts));
}

std::string KType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j > 0) os << ",";
    os << parts_[j];
  }
  os << ")";
  return os.str();
}

bool in_lattice(const GrassmannSignature& sig, const KType& mu) {
  const auto m = mu.parts();
  const int p = sig.p();
  if (static_cast<int>(m.size()) != p) return false;
  for (int v : m) {
    if (v % 2 != 0) return false;
  }
  for (int j = 0; j + 2 < p; ++j) {
    if (m[j] < m[j + 1]) return false;
  }
  const int last = m[p - 1];
  if (sig.allows_signed_last()) {
    return p == 1 || m[p - 2] >= std::abs(last);
  }
  if (p >= 2 && m[p - 2] < last) return false;
  return last >= 0;
}

SpectralValue gindikin_gamma(int p, int d, std::span<const Complex> v) {
  if (p < 1 || static_cast<int>(v.size()) != p) {
    throw std::invalid_argument("gindikin_gamma: argument tuple must have length p >= 1");
  }
  if (d != 1 && d != 2 && d != 4) throw std::invalid_argument("gindikin_gamma: d must be 1, 2 or 4");
  GermProduct g;
  for (int j = 0; j < p; ++j) g.mul_gamma(v[j] - 0.5 * d * j, 1.0);
  return g.result();
}

std::vector<KType> enumerate_ktypes(const GrassmannSignature& sig, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_ktypes: negative max_degree");
  const int p = sig.p();
  std::vector<KType> out;
  std::vector<int> parts(p, 0);
  // Fill coordinates left to right with non-increasing even values.
  std::function<void(int, int, int)> fill = [&](int j, int bound, int budget) {
    if (j == p) {
      out.emplace_back(parts);
      return;
    }
    const bool signed_slot = (j == p - 1) && sig.allows_signed_last();
    for (int v = std::min(bound, budget) / 2 * 2; v >= 0; v -= 2) {
      parts[j] = v;
      fill(j + 1, v, budget - v);
      if (signed_slot && v > 0) {
        parts[j] = -v;
        fill(j + 1, v, budget - v);
      }
    }
    parts[j] = 0;
  };
  fill(0, max_degree, max_degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<KType> neighbors(const GrassmannSignature& sig, const KType& mu) {
  require_valid(sig, mu, "neighbors");
  std::vector<KType> out;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    for (int sign : {+1, -1}) {
      KType sigma = mu.shifted(j, sign);
      if (in_lattice(sig, sigma) && std::find(out.begin(), out.end(), sigma) == out.end()) {
        out.push_back(std::move(sigma));
      }
    }
  }
  return out;
}

std::vector<double> rho_k(const GrassmannSignature& sig) {
  std::vector<double> out(sig.p());
  for (int j = 0; j < sig.p(); ++j) out[j] = sig.rho() - sig.d() * j - 1.0;
  return out;
}

double omega(const GrassmannSignature& sig, const KType& mu) {
  require_valid(sig, mu, "omega");
  const auto rk = rho_k(sig);
  double sum = 0.0;
  for (int j = 0; j < sig.p(); ++j) {
    const double m = mu[j];
    sum += m * m + 2.0 * m * rk[j];
  }
  return sig.lambda_scale() * 0.5 * sum;
}

SpectralValue c_p(const GrassmannSignature& sig, Complex lambda) {
  const int p = sig.p();
  const int d = sig.d();
  const double rho = sig.rho();
  GermProduct g;
  mul_gindikin(g, p, d, 0.5 * d * (sig.n() + 1), 0.0, +1);
  mul_gindikin(g, p, d, 0.5 * d * p, 0.0, -1);
  mul_gindikin(g, p, d, 0.5 * (lambda - rho + static_cast<double>(d * p)), 0.5, +1);
  mul_gindikin(g, p, d, 0.5 * (lambda + rho), 0.5, -1);
  return g.result();
}

SpectralValue eta(const GrassmannSignature& sig, const KType& mu, Complex lambda) {
  require_valid(sig, mu, "eta");
  const int p = sig.p();
  const int d = sig.d();
  const double rho = sig.rho();
  GermProduct g;
  g.mul(sign_of_half_sum(mu));
  mul_gindikin(g, p, d, 0.5 * d * (sig.n() + 1), 0.0, +1);
  mul_gindikin(g, p, d, 0.5 * d * p, 0.0, -1);
  mul_gindikin(g, p, d, 0.5 * (lambda - rho + static_cast<double>(d * p)), 0.5, +1);
  mul_gindikin(g, p, d, 0.5 * (-lambda + rho), -0.5, +1, mu.parts());
  mul_gindikin(g, p, d, 0.5 * (-lambda + rho), -0.5, -1);
  mul_gindikin(g, p, d, 0.5 * (lambda + rho), 0.5, -1, mu.parts());
  return g.result();
}

SpectralValue eta_step_ratio(const GrassmannSignature& sig, const KType& mu, std::size_t j,
                             Complex lambda) {
  require_valid(sig, mu, "eta_step_ratio");
  if (j >= mu.size() || !in_lattice(sig, mu.shifted(j, +1))) {
    throw std::invalid_argument("eta_step_ratio: mu + 2 e_j leaves the lattice");
  }
  const double shift = mu[j] + sig.rho() - sig.d() * static_cast<double>(j);
  const double tol = linear_zero_tol(std::abs(lambda) + std::abs(shift));
  GermProduct g;
  g.mul_linear(lambda - shift, 1.0, tol);
  g.div_linear(lambda + shift, 1.0, tol);
  return g.result();
}

std::vector<KType> canonical_path(const GrassmannSignature& sig, const KType& mu) {
  require_valid(sig, mu, "canonical_path");
  std::vector<KType> path{KType::trivial(sig.p())};
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const int sign = mu[j] >= 0 ? +1 : -1;
    for (int k = 0; k < std::abs(mu[j]) / 2; ++k) path.push_back(path.back().shifted(j, sign));
  }
  return path;
}

SpectralValue eta_by_recursion(const GrassmannSignature& sig, const KType& mu, Complex lambda) {
  const auto path = canonical_path(sig, mu);
  return eta_by_recursion(sig, std::span<const KType>(path), lambda);
}

SpectralValue eta_by_recursion(const GrassmannSignature& sig, std::span<const KType> path,
                               Complex lambda) {
  if (path.empty() || !path.front().is_trivial() ||
      static_cast<int>(path.front().size()) != sig.p()) {
    throw std::invalid_argument("eta_by_recursion: path must start at the trivial K-type");
  }
  const double scale = sig.lambda_scale();
  const Complex r = lambda * scale;
  GermProduct g;
  g.mul(c_p(sig, lambda));
  for (std::size_t i = 1; i < path.size(); ++i) {
    const KType& from = path[i - 1];
    const KType& to = path[i];
    const auto next = neighbors(sig, from);
    if (std::find(next.begin(), next.end(), to) == next.end()) {
      throw std::invalid_argument("eta_by_recursion: " + to.to_string() +
                                  " is not a neighbor of " + from.to_string());
    }
    const double gap = omega(sig, to) - omega(sig, from);
    const double tol = linear_zero_tol(std::abs(2.0 * r) + std::abs(gap));
    g.mul_linear(2.0 * r - gap, 2.0 * scale, tol);
    g.div_linear(2.0 * r + gap, 2.0 * scale, tol);
  }
  return g.result();
}

SpectralValue nu(const GrassmannSignature& sig, const KType& mu, Complex lambda) {
  if (sig.p() != sig.q()) throw std::domain_error("nu: the Sin transform requires p == q");
  require_valid(sig, mu, "nu");
  const int p = sig.p();
  const int d = sig.d();
  const double rho = static_cast<double>(d * p);
  GermProduct g;
  mul_gindikin(g, p, d, rho, 0.0, +1);
  mul_gindikin(g, p, d, 0.5 * rho, 0.0, -1);
  mul_gindikin(g, p, d, 0.5 * lambda, 0.5, +1);
  mul_gindikin(g, p, d, 0.5 * (-lambda + rho), -0.5, +1, mu.parts());
  mul_gindikin(g, p, d, 0.5 * (-lambda + rho), -0.5, -1);
  mul_gindikin(g, p, d, 0.5 * (lambda + rho), 0.5, -1, mu.parts());
  return g.result();
}

SpectralValue nu_from_eta(const GrassmannSignature& sig, const KType& mu, Complex lambda) {
  if (sig.p() != sig.q()) throw std::domain_error("nu_from_eta: the Sin transform requires p == q");
  SpectralValue value = eta(sig, mu, lambda);
  return sign_of_half_sum(mu) > 0 ? value : -value;
}

SpectralValue sphere_eta(int n, int m, Complex lambda) {
  if (n < 1) throw std::invalid_argument("sphere_eta: n must be >= 1");
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("sphere_eta: m must be even and >= 0");
  const double rho = 0.5 * (n + 1);
  GermProduct g;
  g.mul((m / 2) % 2 == 0 ? 1.0 : -1.0);
  g.mul_gamma(rho, 0.0);
  g.div_gamma(0.5, 0.0);
  g.mul_gamma(0.5 * (lambda - rho + 1.0), 0.5);
  g.div_gamma(0.5 * (lambda + rho + static_cast<double>(m)), 0.5);
  // Gamma((-lambda+rho+m)/2) / Gamma((-lambda+rho)/2)
  //   = 2^{-m/2} (-lambda+rho) (-lambda+rho+2) ... (-lambda+rho+m-2).
  for (int k = 0; k < m / 2; ++k) {
    const Complex factor = -lambda + rho + 2.0 * k;
    g.mul_linear(0.5 * factor, -0.5, linear_zero_tol(std::abs(lambda) + rho + 2.0 * k));
  }
  return g.result();
}

}  // namespace grasscos
