#pragma once

#include <span>

#include "grasscos/matk.hpp"
#include "grasscos/random.hpp"
#include "grasscos/spectral.hpp"

namespace grasscos {

/// Element of SL(n+1, K) acting on K^{n+1}.
class GroupElement {
 public:
  /// Throws std::invalid_argument if `mat` has the wrong shape or field, or
  /// if |det_R mat| differs from 1 by more than 1e-10.
  GroupElement(const GrassmannSignature& sig, MatK mat);

  static GroupElement identity(const GrassmannSignature& sig);

  const GrassmannSignature& signature() const noexcept { return sig_; }
  const MatK& matrix() const noexcept { return mat_; }

  GroupElement inverse() const;
  /// max |g* g - I|, zero for elements of K.
  double unitarity_error() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend GroupElement haar_sample(const GrassmannSignature& sig, Rng& rng);

 private:
  struct Trusted {};
  GroupElement(const GrassmannSignature& sig, MatK mat, Trusted)
      : sig_(sig), mat_(std::move(mat)) {}

  GrassmannSignature sig_;
  MatK mat_;
};

/// A point of Gr_p(K^{n+1}) given by an orthonormal frame of p columns.
class FramePoint {
 public:
  /// Throws std::invalid_argument unless frame is (n+1) x p over the field
  /// with frame* frame = I_p within 1e-10.
  FramePoint(const GrassmannSignature& sig, MatK frame);

  const GrassmannSignature& signature() const noexcept { return sig_; }
  const MatK& frame() const noexcept { return frame_; }

 private:
  friend FramePoint apply(const GroupElement& g, const FramePoint& b);
  struct Trusted {};
  FramePoint(const GrassmannSignature& sig, MatK frame, Trusted)
      : sig_(sig), frame_(std::move(frame)) {}

  GrassmannSignature sig_;
  MatK frame_;
};

/// b_o = K e_1 + ... + K e_p.
FramePoint base_point(const GrassmannSignature& sig);

/// g . b for an element of K (the frame of g b is g times the frame).
/// Throws std::invalid_argument if g is not unitary within 1e-10.
FramePoint apply(const GroupElement& g, const FramePoint& b);

/// |det_K A|, A the top-left p x p block of g; 0 when A is singular.
double alpha_p(const GroupElement& g);

/// |Cos(b, c)|: product of the principal-angle cosines.
double cos_angle(const FramePoint& b, const FramePoint& c);

/// sum of squared principal-angle cosines, ||c* b||_F^2.
double principal_cosine_energy(const FramePoint& b, const FramePoint& c);

/// Orthogonal complement of b. Throws std::domain_error unless p == q.
FramePoint perp(const FramePoint& b);

/// The rotation with cos t_j, sin t_j in the planes (e_j, e_{q+j}).
/// Throws std::invalid_argument unless t has p entries.
GroupElement torus_point(const GrassmannSignature& sig, std::span<const double> t);

/// Haar-distributed element of K = SO(n+1), SU(n+1) or Sp(n+1).
GroupElement haar_sample(const GrassmannSignature& sig, Rng& rng);

/// Haar-distributed point of Gr_p, equal to haar_sample(sig, rng) . b_o for
/// the same stream state but drawing only the first p columns.
FramePoint haar_frame(const GrassmannSignature& sig, Rng& rng);

}  // namespace grasscos
