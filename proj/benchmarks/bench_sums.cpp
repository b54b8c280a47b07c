#include <benchmark/benchmark.h>

#include "turan/certificates.hpp"
#include "turan/kernel.hpp"
#include "turan/sine_sums.hpp"
#include "turan/verifier.hpp"

namespace {

void BM_sine_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const turan::CoeffVector c = turan::turan_coeff_vector({n, 1.5});
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::sine_sum(c, x));
    x += 1e-6;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_sine_sum)->Arg(100)->Arg(10000)->Arg(100000);

void BM_theta_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const turan::CoeffVector c = turan::turan_coeff_vector({n, 2.0});
  double x = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::theta_sum(c, x, 1.3));
    x += 1e-6;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_theta_sum)->Arg(15)->Arg(100);

void BM_gamma_transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const turan::CoeffVector c = turan::turan_coeff_vector({n, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::gamma_transform(c));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_gamma_transform)->Arg(1000)->Arg(100000);

void BM_scan_thm31(benchmark::State& state) {
  const turan::InequalitySpec* spec = turan::find_spec("thm3.1");
  turan::ScanGrid grid = spec->default_grid;
  grid.x_steps = 255;
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan::scan_inequality(*spec, grid));
  }
}
BENCHMARK(BM_scan_thm31);

}  // namespace

BENCHMARK_MAIN();
