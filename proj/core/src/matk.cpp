#include "grasscos/matk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grasscos {

namespace {

constexpr double kStructureTol = 1e-12;

void require_same_field(const MatK& a, const MatK& b) {
  if (a.field() != b.field()) throw std::invalid_argument("MatK: mixed fields");
}

}  // namespace

MatK MatK::zero(Field field, int rows, int cols) {
  const int w = storage_width(field);
  return MatK(field, Storage::Zero(w * rows, w * cols));
}

MatK MatK::identity(Field field, int size) {
  const int w = storage_width(field);
  return MatK(field, Storage::Identity(w * size, w * size));
}

MatK MatK::from_storage(Field field, Storage storage) {
  const int w = storage_width(field);
  if (storage.rows() % w != 0 || storage.cols() % w != 0) {
    throw std::invalid_argument("MatK::from_storage: odd storage size for a quaternionic matrix");
  }
  MatK m(field, std::move(storage));
  const double err = m.structure_error();
  const double scale =
      m.data_.size() == 0 ? 1.0 : std::max(1.0, std::sqrt(m.data_.cwiseAbs2().maxCoeff()));
  if (err > kStructureTol * scale) {
    throw std::invalid_argument("MatK::from_storage: storage violates the field structure");
  }
  return m;
}

MatK MatK::from_real(Field field, const Eigen::MatrixXd& real) {
  const int w = storage_width(field);
  if (w == 1) return MatK(field, real.cast<std::complex<double>>());
  Storage data = Storage::Zero(2 * real.rows(), 2 * real.cols());
  for (Eigen::Index i = 0; i < real.rows(); ++i) {
    for (Eigen::Index j = 0; j < real.cols(); ++j) {
      data(2 * i, 2 * j) = real(i, j);
      data(2 * i + 1, 2 * j + 1) = real(i, j);
    }
  }
  return MatK(field, std::move(data));
}

MatK MatK::from_quaternion_parts(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                 const Eigen::MatrixXd& c, const Eigen::MatrixXd& d) {
  const Eigen::Index r = a.rows();
  const Eigen::Index s = a.cols();
  if (b.rows() != r || c.rows() != r || d.rows() != r || b.cols() != s || c.cols() != s ||
      d.cols() != s) {
    throw std::invalid_argument("MatK::from_quaternion_parts: shape mismatch");
  }
  Storage data(2 * r, 2 * s);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) {
      const std::complex<double> alpha(a(i, j), b(i, j));
      const std::complex<double> beta(c(i, j), d(i, j));
      data(2 * i, 2 * j) = alpha;
      data(2 * i, 2 * j + 1) = beta;
      data(2 * i + 1, 2 * j) = -std::conj(beta);
      data(2 * i + 1, 2 * j + 1) = std::conj(alpha);
    }
  }
  return MatK(Field::Quaternion, std::move(data));
}

MatK MatK::adjoint() const { return MatK(field_, data_.adjoint()); }

MatK MatK::inverse() const {
  if (data_.rows() != data_.cols()) throw std::invalid_argument("MatK::inverse: not square");
  Eigen::PartialPivLU<Storage> lu(data_);
  return MatK(field_, lu.inverse());
}

MatK MatK::block(int row, int col, int nrows, int ncols) const {
  const int w = storage_width(field_);
  if (row < 0 || col < 0 || row + nrows > rows() || col + ncols > cols()) {
    throw std::out_of_range("MatK::block: out of range");
  }
  return MatK(field_, data_.block(w * row, w * col, w * nrows, w * ncols));
}

double MatK::abs_det_field() const {
  if (data_.rows() != data_.cols()) throw std::invalid_argument("MatK: determinant of non-square");
  if (data_.rows() == 0) return 1.0;
  const double det = std::abs(data_.determinant());
  return field_ == Field::Quaternion ? std::sqrt(det) : det;
}

double MatK::abs_det_real() const {
  return std::pow(abs_det_field(), real_dimension(field_));
}

Eigen::MatrixXd MatK::real_realization() const {
  if (field_ == Field::Real) return data_.real();
  const Eigen::Index r = data_.rows();
  const Eigen::Index c = data_.cols();
  Eigen::MatrixXd out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = data_.real();
  out.topRightCorner(r, c) = -data_.imag();
  out.bottomLeftCorner(r, c) = data_.imag();
  out.bottomRightCorner(r, c) = data_.real();
  return out;
}

double MatK::frobenius_sq() const {
  return data_.squaredNorm() / storage_width(field_);
}

double MatK::structure_error() const {
  switch (field_) {
    case Field::Real:
      return data_.size() == 0 ? 0.0 : data_.imag().cwiseAbs().maxCoeff();
    case Field::Complex:
      return 0.0;
    case Field::Quaternion: {
      double err_sq = 0.0;
      for (Eigen::Index i = 0; i < data_.rows(); i += 2) {
        for (Eigen::Index j = 0; j < data_.cols(); j += 2) {
          err_sq = std::max(err_sq, std::norm(data_(i + 1, j) + std::conj(data_(i, j + 1))));
          err_sq = std::max(err_sq, std::norm(data_(i + 1, j + 1) - std::conj(data_(i, j))));
        }
      }
      return std::sqrt(err_sq);
    }
  }
  return 0.0;
}

MatK operator*(const MatK& a, const MatK& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("MatK: shape mismatch in product");
  return MatK(a.field_, a.data_ * b.data_);
}

MatK operator-(const MatK& a, const MatK& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("MatK: shape mismatch in difference");
  }
  return MatK(a.field_, a.data_ - b.data_);
}

MatK orthonormalize_columns(const MatK& m, double tol) {
  const int w = storage_width(m.field());
  MatK::Storage q = m.storage();
  for (int k = 0; k < m.cols(); ++k) {
    auto xk = q.middleCols(w * k, w);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < k; ++j) {
        const auto xj = q.middleCols(w * j, w);
        const MatK::Storage coeff = xj.adjoint() * xk;
        xk -= xj * coeff;
      }
    }
    const double norm_sq = (xk.adjoint() * xk).trace().real() / w;
    if (!(norm_sq > tol * tol)) {
      throw std::domain_error("orthonormalize_columns: columns are linearly dependent");
    }
    xk /= std::sqrt(norm_sq);
  }
  return MatK::from_storage(m.field(), std::move(q));
}

}  // namespace grasscos
