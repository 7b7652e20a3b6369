#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasscos/scalar.hpp"
#include "grasscos/spectral_value.hpp"

namespace grasscos {

/// Base (skew-)field of the Grassmannian.
enum class Field { Real, Complex, Quaternion };

/// Real dimension d of the field: 1, 2 or 4.
constexpr int real_dimension(Field f) {
  switch (f) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternion: return 4;
  }
  return 0;
}

/// One-letter code 'R', 'C' or 'H'.
char field_code(Field f);
/// Parses "R", "C", "H" (also "real", "complex", "quaternion"); throws
/// std::invalid_argument otherwise.
Field parse_field(std::string_view text);

/// Gr_p(K) inside K^{n+1}, with q = n + 1 - p and 1 <= p <= q.
class GrassmannSignature {
 public:
  /// Throws std::invalid_argument unless 1 <= p <= q.
  GrassmannSignature(int n, int p, Field field);

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return n_ + 1 - p_; }
  Field field() const noexcept { return field_; }
  int d() const noexcept { return real_dimension(field_); }
  /// rho = d (n + 1) / 2 in the complex lambda coordinate.
  double rho() const noexcept { return 0.5 * d() * (n_ + 1); }
  /// Integrals converge for Re lambda >= convergence_threshold().
  double convergence_threshold() const noexcept { return rho(); }
  /// Factor pq / (n + 1) converting lambda to the spectrum-generating r.
  double lambda_scale() const noexcept { return static_cast<double>(p_) * q() / (n_ + 1); }
  /// Real field with p == q: the one case admitting a negative last weight.
  bool allows_signed_last() const noexcept { return field_ == Field::Real && p_ == q(); }

  std::string to_string() const;

  friend bool operator==(const GrassmannSignature&, const GrassmannSignature&) = default;

 private:
  int n_;
  int p_;
  Field field_;
};

/// Spherical highest weight mu = (m_1, ..., m_p) of even integers.
class KType {
 public:
  KType() = default;
  explicit KType(std::vector<int> parts) : parts_(std::move(parts)) {}
  static KType trivial(int p) { return KType(std::vector<int>(p, 0)); }

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t j) const { return parts_.at(j); }
  std::size_t size() const noexcept { return parts_.size(); }
  bool is_trivial() const;

  /// sum_j m_j; the parity of sum/2 fixes the sign (-1)^{|mu|/2}.
  int signed_sum() const;
  /// sum_j |m_j|; bounds enumeration (equals signed_sum() unless m_p < 0).
  int degree() const;

  /// mu + 2 * sign * e_j (0-based j).
  KType shifted(std::size_t j, int sign) const;

  std::string to_string() const;

  friend auto operator<=>(const KType&, const KType&) = default;

 private:
  std::vector<int> parts_;
};

/// True when mu belongs to the spherical lattice of the signature.
bool in_lattice(const GrassmannSignature& sig, const KType& mu);

/// Gindikin Gamma: prod_j Gamma(v_j - (d/2) j) for 0-based j. Returns a
/// Pole with the total order when arguments sit on singular hyperplanes.
SpectralValue gindikin_gamma(int p, int d, std::span<const Complex> v);

/// All lattice K-types with degree() <= max_degree, in descending
/// lexicographic order.
std::vector<KType> enumerate_ktypes(const GrassmannSignature& sig, int max_degree);

/// {mu +- 2 e_j} intersected with the lattice, each listed once.
std::vector<KType> neighbors(const GrassmannSignature& sig, const KType& mu);

/// Components of rho_k: rho - d j - 1 for 0-based j.
std::vector<double> rho_k(const GrassmannSignature& sig);

/// Laplace eigenvalue on the K-type mu.
double omega(const GrassmannSignature& sig, const KType& mu);

/// c_P(lambda): the transform applied to the constant function.
SpectralValue c_p(const GrassmannSignature& sig, Complex lambda);

/// Closed-form K-spectrum eta_mu(lambda) of the Cos^lambda transform.
SpectralValue eta(const GrassmannSignature& sig, const KType& mu, Complex lambda);

/// eta_{mu + 2 e_j} / eta_mu in closed form (0-based j). Throws
/// std::invalid_argument when mu + 2 e_j leaves the lattice.
SpectralValue eta_step_ratio(const GrassmannSignature& sig, const KType& mu, std::size_t j,
                             Complex lambda);

/// Monotone path 0 -> m_1 e_1 -> ... -> mu in steps of +-2 e_j (the last
/// coordinate walks downward when m_p < 0).
std::vector<KType> canonical_path(const GrassmannSignature& sig, const KType& mu);

/// eta_mu(lambda) from c_P(lambda) and the Casimir ratio
/// (2r - omega(sigma) + omega(mu)) / (2r + omega(sigma) - omega(mu)) along
/// canonical_path(), r = lambda * p q / (n + 1).
SpectralValue eta_by_recursion(const GrassmannSignature& sig, const KType& mu, Complex lambda);

/// As above along an explicit path that starts at the trivial type and whose
/// consecutive members are neighbors. Throws std::invalid_argument otherwise.
SpectralValue eta_by_recursion(const GrassmannSignature& sig, std::span<const KType> path,
                               Complex lambda);

/// K-spectrum nu_mu(lambda) of the Sin^lambda transform, evaluated from its
/// own Gindikin Gamma closed form. Throws std::domain_error unless p == q.
SpectralValue nu(const GrassmannSignature& sig, const KType& mu, Complex lambda);

/// (-1)^{|mu|/2} eta_mu(lambda); must coincide with nu().
SpectralValue nu_from_eta(const GrassmannSignature& sig, const KType& mu, Complex lambda);

/// Eigenvalue of the Cos^lambda transform on degree-m harmonics of S^n,
/// using the rank-one formula with its Pochhammer polynomial written out.
/// Throws std::invalid_argument unless m is even and >= 0.
SpectralValue sphere_eta(int n, int m, Complex lambda);

}  // namespace grasscos
