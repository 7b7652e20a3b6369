#include "grasscos/spectral_value.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace grasscos {

SpectralValue SpectralValue::finite(Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::domain_error("SpectralValue: non-finite value");
  }
  return {value, 0};
}

SpectralValue SpectralValue::pole(int order, Complex lead) {
  if (order <= 0) throw std::invalid_argument("SpectralValue::pole: order must be positive");
  return {lead, -order};
}

SpectralValue SpectralValue::zero(int order, Complex lead) {
  if (order <= 0) throw std::invalid_argument("SpectralValue::zero: order must be positive");
  return {lead, order};
}

SpectralValue SpectralValue::laurent(Complex lead, int power) {
  if (power == 0) return finite(lead);
  return {lead, power};
}

ValueTag SpectralValue::tag() const noexcept {
  if (power_ < 0) return ValueTag::Pole;
  if (power_ > 0) return ValueTag::Zero;
  return ValueTag::Finite;
}

Complex SpectralValue::value() const {
  if (power_ != 0) throw std::logic_error("SpectralValue::value: not a finite value");
  return lead_;
}

Complex SpectralValue::evaluate() const {
  if (power_ < 0) throw std::logic_error("SpectralValue::evaluate: pole");
  return power_ == 0 ? lead_ : Complex(0.0, 0.0);
}

SpectralValue& SpectralValue::operator*=(const SpectralValue& other) {
  lead_ *= other.lead_;
  power_ += other.power_;
  return *this;
}

SpectralValue& SpectralValue::operator/=(const SpectralValue& other) {
  if (other.lead_ == Complex(0.0, 0.0)) {
    throw std::domain_error("SpectralValue: division by an exact zero");
  }
  lead_ /= other.lead_;
  power_ -= other.power_;
  return *this;
}

std::string SpectralValue::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (tag()) {
    case ValueTag::Finite:
      os << lead_.real() << (lead_.imag() < 0 ? "-" : "+") << std::abs(lead_.imag()) << "i";
      break;
    case ValueTag::Pole:
      os << "pole(" << order() << ")";
      break;
    case ValueTag::Zero:
      os << "zero(" << order() << ")";
      break;
  }
  return os.str();
}

void GermProduct::add_gamma(Complex arg, double slope, int sign) {
  int k = 0;
  if (!is_gamma_pole(arg, &k)) {
    log_lead_ += static_cast<double>(sign) * log_gamma(arg);
    return;
  }
  // Gamma(-k + s delta) = (-1)^k / (k! s delta) + O(1).
  if (slope == 0.0) slope = 1.0;
  Complex log_residue = -std::lgamma(k + 1.0) - std::log(std::abs(slope));
  const int phase_turns = k + (slope < 0.0 ? 1 : 0);
  if (phase_turns % 2 != 0) log_residue += Complex(0.0, std::numbers::pi);
  log_lead_ += static_cast<double>(sign) * log_residue;
  power_ -= sign;
}

void GermProduct::add_linear(Complex value, double slope, double zero_tol, int sign) {
  if (std::abs(value) > zero_tol) {
    log_lead_ += static_cast<double>(sign) * std::log(value);
    return;
  }
  if (slope == 0.0) {
    if (sign < 0) throw std::domain_error("GermProduct: division by an identically zero factor");
    exact_zero_ = true;
    return;
  }
  log_lead_ += static_cast<double>(sign) * std::log(Complex(slope, 0.0));
  power_ += sign;
}

GermProduct& GermProduct::mul_gamma(Complex arg, double slope) {
  add_gamma(arg, slope, +1);
  return *this;
}

GermProduct& GermProduct::div_gamma(Complex arg, double slope) {
  add_gamma(arg, slope, -1);
  return *this;
}

GermProduct& GermProduct::mul_linear(Complex value, double slope, double zero_tol) {
  add_linear(value, slope, zero_tol, +1);
  return *this;
}

GermProduct& GermProduct::div_linear(Complex value, double slope, double zero_tol) {
  add_linear(value, slope, zero_tol, -1);
  return *this;
}

GermProduct& GermProduct::mul(Complex factor) {
  if (factor == Complex(0.0, 0.0)) {
    exact_zero_ = true;
  } else {
    log_lead_ += std::log(factor);
  }
  return *this;
}

GermProduct& GermProduct::mul(const SpectralValue& factor) {
  mul(factor.lead());
  power_ += factor.power();
  return *this;
}

SpectralValue GermProduct::result() const {
  if (exact_zero_) return SpectralValue::finite(0.0);
  return SpectralValue::laurent(std::exp(log_lead_), power_);
}

}  // namespace grasscos
