#include <benchmark/benchmark.h>

#include "grasscos/geometry.hpp"
#include "grasscos/monte_carlo.hpp"
#include "grasscos/scalar.hpp"
#include "grasscos/spectral.hpp"
#include "grasscos/transform.hpp"

using namespace grasscos;

namespace {

void BM_LogGamma(benchmark::State& state) {
  Complex z(3.7, 2.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

void BM_Eta(benchmark::State& state) {
  const GrassmannSignature sig(static_cast<int>(state.range(0)), 3, Field::Quaternion);
  const KType mu({6, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(eta(sig, mu, Complex(9.5, 1.25)));
}
BENCHMARK(BM_Eta)->Arg(5)->Arg(9);

void BM_EtaByRecursion(benchmark::State& state) {
  const GrassmannSignature sig(5, 3, Field::Quaternion);
  const KType mu({6, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(eta_by_recursion(sig, mu, Complex(9.5, 1.25)));
}
BENCHMARK(BM_EtaByRecursion);

void BM_HaarSample(benchmark::State& state) {
  const Field fields[] = {Field::Real, Field::Complex, Field::Quaternion};
  const GrassmannSignature sig(3, 2, fields[state.range(0)]);
  Rng rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(haar_sample(sig, rng));
}
BENCHMARK(BM_HaarSample)->DenseRange(0, 2);

void BM_McCp(benchmark::State& state) {
  const GrassmannSignature sig(3, 2, Field::Complex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_c_p(sig, sig.rho() + 1.0, {.samples = state.range(0), .seed = 1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McCp)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_CosTransformSphere(benchmark::State& state) {
  const SphereGrid grid = make_sphere_grid(2, static_cast<int>(state.range(0)));
  const std::vector<Complex> f(grid.size(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(cos_transform_sphere(grid, Complex(3.5, 0.0), f));
  state.SetComplexityN(static_cast<long>(grid.size()));
}
BENCHMARK(BM_CosTransformSphere)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SelbergOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(selberg_oracle(2, 0.7, 1.3, 2.1));
}
BENCHMARK(BM_SelbergOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
