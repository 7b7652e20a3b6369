#include "grasscos/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grasscos {

namespace {

constexpr double kGroupTol = 1e-10;

void require_shape(const GrassmannSignature& sig, const MatK& m, int rows, int cols,
                   const char* what) {
  if (m.field() != sig.field() || m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(what);
  }
}

double max_abs(const MatK::Storage& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// One standard Gaussian field entry written into `col` at field row `row`.
void draw_entry(Field field, Rng& rng, std::normal_distribution<double>& normal,
                MatK::Storage& m, int row, int col) {
  switch (field) {
    case Field::Real:
      m(row, col) = normal(rng);
      return;
    case Field::Complex: {
      const double re = normal(rng);
      const double im = normal(rng);
      m(row, col) = Complex(re, im);
      return;
    }
    case Field::Quaternion: {
      const double a = normal(rng);
      const double b = normal(rng);
      const double c = normal(rng);
      const double d = normal(rng);
      const Complex alpha(a, b);
      const Complex beta(c, d);
      m(2 * row, 2 * col) = alpha;
      m(2 * row, 2 * col + 1) = beta;
      m(2 * row + 1, 2 * col) = -std::conj(beta);
      m(2 * row + 1, 2 * col + 1) = std::conj(alpha);
      return;
    }
  }
}

// Gaussian (n+1) x cols matrix, drawn column by column, then orthonormalized.
// Gram-Schmidt with positive diagonal turns Gaussian columns into Haar ones.
MatK gaussian_frame(const GrassmannSignature& sig, int cols, Rng& rng) {
  const int w = storage_width(sig.field());
  const int dim = sig.n() + 1;
  std::normal_distribution<double> normal(0.0, 1.0);
  MatK::Storage data = MatK::Storage::Zero(w * dim, w * cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < dim; ++r) draw_entry(sig.field(), rng, normal, data, r, c);
  }
  return orthonormalize_columns(MatK::from_storage(sig.field(), std::move(data)));
}

}  // namespace

GroupElement::GroupElement(const GrassmannSignature& sig, MatK mat)
    : sig_(sig), mat_(std::move(mat)) {
  require_shape(sig_, mat_, sig_.n() + 1, sig_.n() + 1, "GroupElement: wrong shape or field");
  if (std::abs(mat_.abs_det_real() - 1.0) > kGroupTol) {
    throw std::invalid_argument("GroupElement: |det_R| differs from 1");
  }
}

GroupElement GroupElement::identity(const GrassmannSignature& sig) {
  return GroupElement(sig, MatK::identity(sig.field(), sig.n() + 1));
}

GroupElement GroupElement::inverse() const { return GroupElement(sig_, mat_.inverse()); }

double GroupElement::unitarity_error() const {
  const MatK::Storage gram = mat_.adjoint().storage() * mat_.storage();
  return max_abs(gram - MatK::Storage::Identity(gram.rows(), gram.cols()));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.sig_ == b.sig_)) throw std::invalid_argument("GroupElement: signature mismatch");
  return GroupElement(a.sig_, a.mat_ * b.mat_);
}

FramePoint::FramePoint(const GrassmannSignature& sig, MatK frame)
    : sig_(sig), frame_(std::move(frame)) {
  require_shape(sig_, frame_, sig_.n() + 1, sig_.p(), "FramePoint: wrong shape or field");
  const MatK::Storage gram = frame_.adjoint().storage() * frame_.storage();
  if (max_abs(gram - MatK::Storage::Identity(gram.rows(), gram.cols())) > kGroupTol) {
    throw std::invalid_argument("FramePoint: columns are not orthonormal");
  }
}

FramePoint base_point(const GrassmannSignature& sig) {
  return FramePoint(sig, MatK::identity(sig.field(), sig.n() + 1).left_cols(sig.p()));
}

FramePoint apply(const GroupElement& g, const FramePoint& b) {
  if (!(g.signature() == b.signature())) throw std::invalid_argument("apply: signature mismatch");
  if (g.unitarity_error() > kGroupTol) throw std::invalid_argument("apply: g is not in K");
  return FramePoint(b.signature(), g.matrix() * b.frame(), FramePoint::Trusted{});
}

double alpha_p(const GroupElement& g) {
  const int p = g.signature().p();
  return g.matrix().block(0, 0, p, p).abs_det_field();
}

double cos_angle(const FramePoint& b, const FramePoint& c) {
  if (!(b.signature() == c.signature())) {
    throw std::invalid_argument("cos_angle: signature mismatch");
  }
  const MatK cb = c.frame().adjoint() * b.frame();
  const Eigen::JacobiSVD<MatK::Storage> svd(cb.storage());
  double product = 1.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    product *= svd.singularValues()(i);
  }
  const double value = std::pow(product, 1.0 / storage_width(b.signature().field()));
  return std::clamp(value, 0.0, 1.0);
}

double principal_cosine_energy(const FramePoint& b, const FramePoint& c) {
  if (!(b.signature() == c.signature())) {
    throw std::invalid_argument("principal_cosine_energy: signature mismatch");
  }
  return (c.frame().adjoint() * b.frame()).frobenius_sq();
}

FramePoint perp(const FramePoint& b) {
  const GrassmannSignature& sig = b.signature();
  if (sig.p() != sig.q()) throw std::domain_error("perp: requires p == q");
  const int w = storage_width(sig.field());
  const int dim = sig.n() + 1;
  const MatK::Storage eye = MatK::Storage::Identity(w * dim, w * dim);

  // Complete b to a unitary basis greedily from the standard basis.
  MatK::Storage basis(w * dim, w * dim);
  basis.leftCols(w * sig.p()) = b.frame().storage();
  int filled = sig.p();
  while (filled < dim) {
    MatK::Storage best;
    double best_norm = -1.0;
    for (int i = 0; i < dim; ++i) {
      MatK::Storage x = eye.middleCols(w * i, w);
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < filled; ++j) {
          const auto v = basis.middleCols(w * j, w);
          const MatK::Storage coeff = v.adjoint() * x;
          x -= v * coeff;
        }
      }
      const double norm = std::sqrt((x.adjoint() * x).trace().real() / w);
      if (norm > best_norm) {
        best_norm = norm;
        best = std::move(x);
      }
    }
    basis.middleCols(w * filled, w) = best / best_norm;
    ++filled;
  }
  MatK::Storage complement = basis.rightCols(w * sig.q());
  return FramePoint(sig, MatK::from_storage(sig.field(), std::move(complement)));
}

GroupElement torus_point(const GrassmannSignature& sig, std::span<const double> t) {
  const int p = sig.p();
  const int q = sig.q();
  if (static_cast<int>(t.size()) != p) {
    throw std::invalid_argument("torus_point: expected p angles");
  }
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(sig.n() + 1, sig.n() + 1);
  for (int j = 0; j < p; ++j) {
    const double c = std::cos(t[j]);
    const double s = std::sin(t[j]);
    r(j, j) = c;
    r(j, q + j) = -s;
    r(q + j, j) = s;
    r(q + j, q + j) = c;
  }
  return GroupElement(sig, MatK::from_real(sig.field(), r));
}

GroupElement haar_sample(const GrassmannSignature& sig, Rng& rng) {
  const int dim = sig.n() + 1;
  MatK::Storage q = gaussian_frame(sig, dim, rng).storage();
  // Move into the special group by rotating the last column only.
  switch (sig.field()) {
    case Field::Real:
      if (q.real().determinant() < 0.0) q.col(dim - 1) *= -1.0;
      break;
    case Field::Complex: {
      const Complex det = q.determinant();
      q.col(dim - 1) *= std::conj(det) / std::abs(det);
      break;
    }
    case Field::Quaternion:
      break;
  }
  // Unitary with unit determinant by construction; skip the LU check.
  return GroupElement(sig, MatK::from_storage(sig.field(), std::move(q)),
                      GroupElement::Trusted{});
}

FramePoint haar_frame(const GrassmannSignature& sig, Rng& rng) {
  return FramePoint(sig, gaussian_frame(sig, sig.p(), rng));
}

}  // namespace grasscos
