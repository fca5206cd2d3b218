#include <benchmark/benchmark.h>

#include "vdkernel/kernel3d.hpp"
#include "vdkernel/kernels1d.hpp"
#include "vdkernel/kernelvd.hpp"
#include "vdkernel/quadrature.hpp"
#include "vdkernel/rng.hpp"
#include "vdkernel/simulate.hpp"

using namespace vdkernel;

namespace {

void BM_DampedOscillatory(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0)) / 100.0;
  const QuadConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(damped_oscillatory_integral(t, 1.0, 2.0, 1.0, cfg).value);
  }
}
BENCHMARK(BM_DampedOscillatory)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_KernelCase(benchmark::State& state) {
  const KernelParams params(1.0);
  const EPoint a = EPoint::in3d(1.0, 0.5, 0.0), b = EPoint::in1d(0.7);
  const EPoint pts[4][2] = {{a, EPoint::in3d(0.2, 0.0, 1.0)}, {b, EPoint::in1d(1.5)}, {a, b},
                            {EPoint::origin(), b}};
  const auto& [x, y] = pts[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(kernel(1.0, x, y, params).value);
}
BENCHMARK(BM_KernelCase)->DenseRange(0, 3);

void BM_KilledKernel3d(benchmark::State& state) {
  const KernelParams params(1.0);
  const EPoint x = EPoint::in3d(1.0, 0.5, 0.0), y = EPoint::in3d(0.2, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(killed_kernel3d(1.0, x, y, params));
}
BENCHMARK(BM_KilledKernel3d);

void BM_Survival3d(benchmark::State& state) {
  const KernelParams params(1.0);
  const EPoint x = EPoint::in3d(1.0, 0.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(survival_probability_3d(1.0, x, params, QuadConfig{}).value);
  }
}
BENCHMARK(BM_Survival3d)->Unit(benchmark::kMillisecond);

void BM_PhiloxBlock(benchmark::State& state) {
  PhiloxCounter c{0, 0, 0, 0};
  for (auto _ : state) {
    c = philox4x32_10(c, {1, 2});
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PhiloxBlock);

void BM_PathNormal(benchmark::State& state) {
  PathRng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_PathNormal);

void BM_SimulateSteps(benchmark::State& state) {
  SimPlan plan;
  plan.scheme = static_cast<Scheme>(state.range(0));
  plan.x0 = 1.0;
  plan.dt = 1e-3;
  plan.n_paths = 1000;
  plan.threads = 1;
  const KernelParams params(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(plan, params).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.n_paths * plan.steps()));
  state.SetLabel(std::string(to_string(plan.scheme)));
}
BENCHMARK(BM_SimulateSteps)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
