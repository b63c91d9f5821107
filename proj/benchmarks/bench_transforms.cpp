#include "sdt/pairs.hpp"
#include "sdt/radial_fourier.hpp"
#include "sdt/rte2d.hpp"
#include "sdt/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace sdt;

void BM_RadialForward(benchmark::State& state) {
  const Dimension d(static_cast<int>(state.range(0)));
  const auto np = radial_fourier::named_profile("gaussian", d);
  for (auto _ : state) benchmark::DoNotOptimize(radial_fourier::forward(d, np.profile, 1.5).value);
}
BENCHMARK(BM_RadialForward)->DenseRange(1, 3);

void BM_RadialRoundTrip(benchmark::State& state) {
  const Dimension d(static_cast<int>(state.range(0)));
  const auto np = radial_fourier::named_profile("yukawa", d);
  const auto image = radial_fourier::transformed(d, np.profile, np.image.decay_class);
  for (auto _ : state) benchmark::DoNotOptimize(radial_fourier::inverse(d, image, 1.0).value);
}
BENCHMARK(BM_RadialRoundTrip)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyRowMixed(benchmark::State& state) {
  const auto grid = verify::default_grid();
  const auto f = pairs::exp_decay(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_pair_mixed("2.1", Dimension(2), f, grid).passed);
}
BENCHMARK(BM_VerifyRowMixed)->Unit(benchmark::kMillisecond);

void BM_RteIntensity(benchmark::State& state) {
  const rte2d::TransportParams p;
  for (auto _ : state) benchmark::DoNotOptimize(rte2d::intensity(p, 0.5, 1.0).smooth);
}
BENCHMARK(BM_RteIntensity);

void BM_RteSpatialTransform(benchmark::State& state) {
  const rte2d::TransportParams p;
  for (auto _ : state) benchmark::DoNotOptimize(rte2d::spatial_transform(p, 1.0, 1.0).value);
}
BENCHMARK(BM_RteSpatialTransform);

}  // namespace
