#include <benchmark/benchmark.h>

#include <random>

#include "hq/weights.hpp"

namespace {

std::vector<hq::IndicatorStats> synthetic_stats(int n) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::int64_t> freq(0, 100000);
  std::uniform_real_distribution<double> importance(0.0, 2.0);
  std::vector<hq::IndicatorStats> stats;
  for (int i = 0; i < n; ++i) {
    hq::IndicatorStats s;
    s.id = {i / 9 + 1, i % 9 + 1};
    s.frequency = freq(rng);
    s.mean_abs_sentiment = importance(rng);
    stats.push_back(s);
  }
  return stats;
}

void ComputeWeights(benchmark::State& state) {
  auto stats = synthetic_stats(static_cast<int>(state.range(0)));
  hq::WeightConfig config;
  for (auto _ : state) {
    hq::WeightTable table = hq::compute_weights(stats, config);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void WeightTableCsvRoundTrip(benchmark::State& state) {
  auto stats = synthetic_stats(46);
  hq::WeightTable table = hq::compute_weights(stats, hq::WeightConfig{});
  for (auto _ : state) {
    hq::WeightTable back = hq::WeightTable::from_csv(table.to_csv());
    benchmark::DoNotOptimize(back);
  }
}

}  // namespace

BENCHMARK(ComputeWeights)->Arg(46)->Arg(460);
BENCHMARK(WeightTableCsvRoundTrip);
