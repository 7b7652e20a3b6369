#pragma once

#include <Eigen/Dense>

#include "grasscos/spectral.hpp"

namespace grasscos {

/// Complex columns per field column: 2 for the quaternions, 1 otherwise.
constexpr int storage_width(Field f) { return f == Field::Quaternion ? 2 : 1; }

/// Matrix over R, C or H, stored as a complex matrix. Real matrices have
/// zero imaginary parts. A quaternion a + bi + cj + dk is stored as the 2x2
/// block [[alpha, beta], [-conj(beta), conj(alpha)]] with alpha = a + bi and
/// beta = c + di, so an r x s quaternionic matrix is a 2r x 2s complex one.
class MatK {
 public:
  using Storage = Eigen::MatrixXcd;

  MatK() = default;

  static MatK zero(Field field, int rows, int cols);
  static MatK identity(Field field, int size);
  /// Throws std::invalid_argument if `storage` violates the field structure.
  static MatK from_storage(Field field, Storage storage);
  /// Embeds a real matrix (real scalars are central in every field).
  static MatK from_real(Field field, const Eigen::MatrixXd& real);
  /// Quaternionic matrix a + b i + c j + d k from its four real parts.
  static MatK from_quaternion_parts(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                    const Eigen::MatrixXd& c, const Eigen::MatrixXd& d);

  Field field() const noexcept { return field_; }
  int rows() const noexcept { return static_cast<int>(data_.rows()) / storage_width(field_); }
  int cols() const noexcept { return static_cast<int>(data_.cols()) / storage_width(field_); }
  const Storage& storage() const noexcept { return data_; }

  MatK adjoint() const;
  MatK inverse() const;
  /// Sub-matrix in field units.
  MatK block(int row, int col, int rows, int cols) const;
  MatK left_cols(int count) const { return block(0, 0, rows(), count); }

  /// |det_K| of a square matrix, so that |det_R| = |det_K|^d.
  double abs_det_field() const;
  /// |det_R| of the underlying real-linear map.
  double abs_det_real() const;
  /// The real-linear map as a d*rows x d*cols real matrix.
  Eigen::MatrixXd real_realization() const;
  /// sum of |x_ij|^2 over field entries.
  double frobenius_sq() const;
  /// Deviation from the field structure (0 for exact matrices).
  double structure_error() const;

  friend MatK operator*(const MatK& a, const MatK& b);
  friend MatK operator-(const MatK& a, const MatK& b);

 private:
  MatK(Field field, Storage data) : field_(field), data_(std::move(data)) {}

  Field field_ = Field::Real;
  Storage data_;
};

/// Gram-Schmidt over K on the field columns (two passes). Throws
/// std::domain_error when the columns are numerically dependent.
MatK orthonormalize_columns(const MatK& m, double tol = 1e-10);

}  // namespace grasscos
