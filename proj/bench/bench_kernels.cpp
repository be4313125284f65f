// Serial against OpenMP kernels. On a single core the two should be close;
// the gap shows scheduling overhead.
#include <benchmark/benchmark.h>

#include <vector>

#include "pcoef/functionals.hpp"
#include "pcoef/grids.hpp"
#include "pcoef/search.hpp"
#include "pcoef/series.hpp"
#include "pcoef/verify.hpp"

using namespace pcoef;

namespace {

void suite(benchmark::State& state, Suite s, Exec exec) {
  VerifyOptions opt;
  opt.suite = s;
  opt.trials = static_cast<std::size_t>(state.range(0));
  opt.seed = 1;
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto out = run_suite(opt, exec);
    cases += out.cases_run;
    benchmark::DoNotOptimize(out.violations);
  }
  state.counters["cases/s"] = benchmark::Counter(static_cast<double>(cases), benchmark::Counter::kIsRate);
}

void sweep_circle(benchmark::State& state, Exec exec) {
  std::vector<Objective> grid;
  for (const Complex w : regime_circle(static_cast<std::size_t>(state.range(0)), 1.0)) {
    Objective o;
    o.id = FunctionalId::livingston;
    o.k = 1;
    o.n = 3;
    o.w = w;
    grid.push_back(o);
  }
  SearchConfig cfg = SearchConfig::for_objective(grid.front());
  cfg.restarts = 4;
  cfg.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(grid, cfg, exec));
}

void determinant(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto p = coefficients(random_measure(6, 11), 2 * k + 4);
  const Complex w{0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(A_det(p, k, 4, w));
}

}  // namespace

BENCHMARK_CAPTURE(suite, livingston_serial, Suite::livingston, Exec::serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, livingston_parallel, Suite::livingston, Exec::parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, A_serial, Suite::A, Exec::serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, A_parallel, Suite::A, Exec::parallel)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_circle, serial, Exec::serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_circle, parallel, Exec::parallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(determinant)->DenseRange(1, 4);

BENCHMARK_MAIN();
