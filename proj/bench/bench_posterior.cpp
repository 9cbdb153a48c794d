#include <benchmark/benchmark.h>

#include "dualsys/capture_data.hpp"
#include "dualsys/models.hpp"
#include "dualsys/posterior.hpp"

using namespace dualsys;

namespace {

const CaptureTable& bundled_table() {
  static const CaptureTable table = load_capture_table(DUALSYS_DATA_DIR "/table1.csv");
  return table;
}

template <Execution Exec>
void BM_SimplePosterior(benchmark::State& state) {
  const ReducedTable reduced = reduce(bundled_table());
  auto loglik = [&](std::int64_t n) { return loglik_simple(n, reduced); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_posterior(loglik, {337, 25000}, 337, Exec));
  }
}

template <Execution Exec>
void BM_BinomialPosterior(benchmark::State& state) {
  const SummaryStats stats = summarize(bundled_table());
  auto loglik = [&](std::int64_t n) { return loglik_binomial(n, stats, 5); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_posterior(loglik, {337, 5850}, 337, Exec));
  }
}

// Argument: p grid size; the nu grid is scaled to match the default aspect.
template <Execution Exec>
void BM_ComBinomialPosterior(benchmark::State& state) {
  const int p_points = static_cast<int>(state.range(0));
  const NuisanceGrid grid{p_points, -5.0, (p_points * 3) / 5 + 1};
  const ComBinomialLikelihood loglik(summarize(bundled_table()), 5, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_posterior(
        [&](std::int64_t n) { return loglik(n); }, {337, 5850}, 337, Exec));
  }
}

}  // namespace

BENCHMARK(BM_SimplePosterior<Execution::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimplePosterior<Execution::parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinomialPosterior<Execution::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinomialPosterior<Execution::parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComBinomialPosterior<Execution::serial>)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComBinomialPosterior<Execution::parallel>)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
