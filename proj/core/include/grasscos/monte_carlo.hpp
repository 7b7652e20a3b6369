#pragma once

#include <cstdint>

#include "grasscos/spectral.hpp"

namespace grasscos {

struct McEstimate {
  Complex mean;
  double std_error = 0.0;  // sample standard error of the mean
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples are processed in fixed chunks of kMcChunk; chunk c draws from
/// make_stream(seed, c) and chunk statistics are merged in chunk order, so
/// estimates do not depend on the worker count.
inline constexpr std::int64_t kMcChunk = 1 << 14;

struct McOptions {
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Test functions with a known K-type. Trivial is the constant 1; Quadratic
/// is f(b) = ||b_o* b||_F^2 - p^2/(n+1), the trace-free part of the linear
/// function b -> tr(P_b P_{b_o}) of the projector, which spans the type
/// (2, 0, ..., 0).
enum class TestFunction { Trivial, Quadratic };

/// The test function attached to mu; throws std::domain_error for other mu.
TestFunction test_function_for(const GrassmannSignature& sig, const KType& mu);

/// Mean of alpha_p(k)^{lambda - rho} over Haar k. Throws std::domain_error
/// when Re lambda < rho and std::invalid_argument when samples < 1.
McEstimate mc_c_p(const GrassmannSignature& sig, Complex lambda, const McOptions& opts);

/// Estimate of (C^lambda f_mu)(b_o) / f_mu(b_o), i.e. of eta_mu(lambda), for
/// mu = 0 and mu = (2, 0, ..., 0).
McEstimate mc_transform_ktype(const GrassmannSignature& sig, Complex lambda, const KType& mu,
                              const McOptions& opts);

/// Estimate of (C^lambda f_mu)(b_o^perp) / f_mu(b_o), i.e. of nu_mu(lambda).
/// Throws std::domain_error unless p == q.
McEstimate sin_transform_numeric(const GrassmannSignature& sig, Complex lambda,
                                 const KType& mu, const McOptions& opts);

}  // namespace grasscos
