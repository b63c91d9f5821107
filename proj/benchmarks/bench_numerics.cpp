#include "sdt/laplace.hpp"
#include "sdt/numerics/quadrature.hpp"
#include "sdt/numerics/special.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace sdt;

void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) + 0.25;
  for (auto _ : state) benchmark::DoNotOptimize(numerics::bessel_j(0.0, x));
}
// series, Miller, Hankel
BENCHMARK(BM_BesselJ0)->Arg(3)->Arg(15)->Arg(500);

void BM_AdaptiveSqrtSingularity(benchmark::State& state) {
  const numerics::QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        numerics::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec).value);
  }
}
BENCHMARK(BM_AdaptiveSqrtSingularity);

void BM_SemiInfiniteExp(benchmark::State& state) {
  const numerics::QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        numerics::integrate_semi_infinite([](double x) { return std::exp(-x) * std::cos(x); }, 0.0, spec).value);
  }
}
BENCHMARK(BM_SemiInfiniteExp);

void BM_TalbotInverse(benchmark::State& state) {
  laplace::LaplaceImage F;
  F.eval = [](laplace::complex_ext s) { return 1.0L / ((s + 1.0L) * (s + 1.0L)); };
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplace::inverse_laplace(F, 2.0, nodes));
}
BENCHMARK(BM_TalbotInverse)->Arg(24)->Arg(48)->Arg(96);

}  // namespace
