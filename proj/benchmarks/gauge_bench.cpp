#include <benchmark/benchmark.h>

#include "renorm/renorm.hpp"

namespace {

using namespace renorm;

std::vector<Point> probes(std::size_t d, std::size_t n) { return sample_unit_sphere(11, n, d); }

void BM_GaugeAlpha(benchmark::State& state) {
  const BlueprintGauge g(fixture_a());
  const auto xs = probes(8, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.value(xs[i++ % xs.size()]));
}
BENCHMARK(BM_GaugeAlpha);

// Same points without the closed-form shortcut: every call runs the nested search.
void BM_GaugeAlphaNested(benchmark::State& state) {
  const BlueprintGauge g(fixture_a(), {}, false);
  const auto xs = probes(8, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.value(xs[i++ % xs.size()]));
}
BENCHMARK(BM_GaugeAlphaNested);

void BM_CompositeNorm(benchmark::State& state) {
  const auto levels = static_cast<int>(state.range(0));
  const auto d = static_cast<std::size_t>(levels + 4);
  const CompositeNorm cn(build_scheme(0.2, levels, d, Point::unit(d, d - 1)));
  const auto xs = probes(d, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cn.value(xs[i++ % xs.size()]));
}
BENCHMARK(BM_CompositeNorm)->Arg(1)->Arg(4)->Arg(8);

void BM_CertifyGaugeAlpha(benchmark::State& state) {
  const BlueprintGauge g(fixture_a());
  const Point x = g.points().x_plus;
  Sampler rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(certify_gauge_alpha(g, x, rng).gap);
}
BENCHMARK(BM_CertifyGaugeAlpha)->Unit(benchmark::kMillisecond);

}  // namespace
