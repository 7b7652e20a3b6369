#pragma once

#include <string>

#include "grasscos/scalar.hpp"

namespace grasscos {

enum class ValueTag { Finite, Pole, Zero };

/// A value of a meromorphic function at a point, kept as the leading term
/// lead * delta^power of its Laurent expansion in a small displacement delta
/// of the argument. power == 0 is a finite value, power < 0 a pole of order
/// -power, power > 0 a zero of order power. Products and quotients add
/// orders and multiply leads, so removable singularities cancel exactly.
class SpectralValue {
 public:
  SpectralValue() = default;

  /// Throws std::domain_error for NaN or infinite input.
  static SpectralValue finite(Complex value);
  static SpectralValue pole(int order, Complex lead = 1.0);
  static SpectralValue zero(int order, Complex lead = 1.0);
  /// Generic constructor from a Laurent leading term.
  static SpectralValue laurent(Complex lead, int power);

  ValueTag tag() const noexcept;
  bool is_finite() const noexcept { return power_ == 0; }

  /// The value; throws std::logic_error unless is_finite().
  Complex value() const;
  /// The function value: value() when finite, 0 at a zero. Throws
  /// std::logic_error at a pole.
  Complex evaluate() const;
  /// Pole or zero order; 0 for finite values.
  int order() const noexcept { return power_ < 0 ? -power_ : power_; }
  /// Laurent leading coefficient (the value itself when finite).
  Complex lead() const noexcept { return lead_; }
  int power() const noexcept { return power_; }

  SpectralValue& operator*=(const SpectralValue& other);
  SpectralValue& operator/=(const SpectralValue& other);
  SpectralValue operator-() const { return laurent(-lead_, power_); }

  friend SpectralValue operator*(SpectralValue a, const SpectralValue& b) { return a *= b; }
  friend SpectralValue operator/(SpectralValue a, const SpectralValue& b) { return a /= b; }

  std::string to_string() const;

 private:
  SpectralValue(Complex lead, int power) : lead_(lead), power_(power) {}

  Complex lead_{1.0, 0.0};
  int power_ = 0;
};

/// Accumulates a product of Gamma factors and linear factors, each of the
/// form F(a + slope * delta), keeping the lead in logarithmic form so large
/// Gamma ratios never overflow before they cancel.
class GermProduct {
 public:
  /// Multiply by Gamma(arg + slope * delta). A zero slope on a pole is
  /// treated as slope 1.
  GermProduct& mul_gamma(Complex arg, double slope = 1.0);
  GermProduct& div_gamma(Complex arg, double slope = 1.0);
  /// Multiply by the linear factor value + slope * delta; a value below
  /// `zero_tol` in magnitude counts as a simple zero.
  GermProduct& mul_linear(Complex value, double slope, double zero_tol = 1e-12);
  GermProduct& div_linear(Complex value, double slope, double zero_tol = 1e-12);
  GermProduct& mul(Complex factor);
  GermProduct& mul(const SpectralValue& factor);

  SpectralValue result() const;

 private:
  void add_gamma(Complex arg, double slope, int sign);
  void add_linear(Complex value, double slope, double zero_tol, int sign);

  Complex log_lead_{0.0, 0.0};
  int power_ = 0;
  bool exact_zero_ = false;
};

}  // namespace grasscos
