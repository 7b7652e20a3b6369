#include "grasscos/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "grasscos/geometry.hpp"
#include "grasscos/random.hpp"
#include "grasscos/transform.hpp"

namespace grasscos {

namespace {

struct Welford {
  std::int64_t count = 0;
  Complex mean = 0.0;
  double m2 = 0.0;

  void add(Complex x) {
    ++count;
    const Complex delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += std::real(delta * std::conj(x - mean));
  }

  void merge(const Welford& other) {
    if (other.count == 0) return;
    const std::int64_t total = count + other.count;
    const Complex delta = other.mean - mean;
    mean += delta * (static_cast<double>(other.count) / total);
    m2 += other.m2 + std::norm(delta) * (static_cast<double>(count) * other.count / total);
    count = total;
  }
};

using Sampler = std::function<Complex(Rng&)>;

McEstimate run_chunks(const McOptions& opts, const Sampler& sample) {
  if (opts.samples < 1) throw std::invalid_argument("Monte Carlo: samples must be positive");
  const std::int64_t chunks = (opts.samples + kMcChunk - 1) / kMcChunk;
  std::vector<Welford> partial(static_cast<std::size_t>(chunks));

  auto work = [&](std::int64_t first, std::int64_t stride) {
    for (std::int64_t c = first; c < chunks; c += stride) {
      Rng rng = make_stream(opts.seed, static_cast<std::uint64_t>(c));
      const std::int64_t n = std::min(kMcChunk, opts.samples - c * kMcChunk);
      Welford& acc = partial[static_cast<std::size_t>(c)];
      for (std::int64_t i = 0; i < n; ++i) acc.add(sample(rng));
    }
  };

  const int workers = static_cast<int>(std::clamp<std::int64_t>(opts.workers, 1, chunks));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Welford total;
  for (const auto& part : partial) total.merge(part);
  McEstimate est;
  est.mean = total.mean;
  est.samples = total.count;
  est.seed = opts.seed;
  est.std_error = total.count > 1
                      ? std::sqrt(total.m2 / static_cast<double>(total.count - 1) / total.count)
                      : 0.0;
  return est;
}

void require_domain(const GrassmannSignature& sig, Complex lambda, const char* what) {
  if (!(lambda.real() >= sig.rho())) throw std::domain_error(what);
}

// f(h b_o) / f(b_o) for the supported test functions.
double normalized_test_value(const GrassmannSignature& sig, TestFunction fn, double energy) {
  if (fn == TestFunction::Trivial) return 1.0;
  const double dim = sig.n() + 1;
  const double p = sig.p();
  return (energy - p * p / dim) / (p * sig.q() / dim);
}

}  // namespace

TestFunction test_function_for(const GrassmannSignature& sig, const KType& mu) {
  if (!in_lattice(sig, mu)) throw std::domain_error("test function: mu is not a K-type");
  if (mu.is_trivial()) return TestFunction::Trivial;
  if (mu[0] == 2 && mu.degree() == 2) return TestFunction::Quadratic;
  throw std::domain_error("test function: only mu = 0 and mu = (2, 0, ..., 0) are supported");
}

McEstimate mc_c_p(const GrassmannSignature& sig, Complex lambda, const McOptions& opts) {
  require_domain(sig, lambda, "mc_c_p: Re lambda below rho");
  const Complex a = lambda - sig.rho();
  return run_chunks(opts, [&](Rng& rng) {
    return kernel_power(alpha_p(haar_sample(sig, rng)), a);
  });
}

McEstimate mc_transform_ktype(const GrassmannSignature& sig, Complex lambda, const KType& mu,
                              const McOptions& opts) {
  require_domain(sig, lambda, "mc_transform_ktype: Re lambda below rho");
  const TestFunction fn = test_function_for(sig, mu);
  const Complex a = lambda - sig.rho();
  const FramePoint bo = base_point(sig);
  return run_chunks(opts, [&](Rng& rng) {
    const GroupElement h = haar_sample(sig, rng);
    const double f = normalized_test_value(sig, fn, principal_cosine_energy(apply(h, bo), bo));
    return kernel_power(alpha_p(h), a) * f;
  });
}

McEstimate sin_transform_numeric(const GrassmannSignature& sig, Complex lambda,
                                 const KType& mu, const McOptions& opts) {
  if (sig.p() != sig.q()) throw std::domain_error("sin_transform_numeric: requires p == q");
  require_domain(sig, lambda, "sin_transform_numeric: Re lambda below rho");
  const TestFunction fn = test_function_for(sig, mu);
  const Complex a = lambda - sig.rho();
  const FramePoint bo = base_point(sig);
  const FramePoint bo_perp = perp(bo);
  return run_chunks(opts, [&](Rng& rng) {
    const FramePoint b = apply(haar_sample(sig, rng), bo);
    const double f = normalized_test_value(sig, fn, principal_cosine_energy(b, bo));
    return kernel_power(cos_angle(b, bo_perp), a) * f;
  });
}

}  // namespace grasscos
