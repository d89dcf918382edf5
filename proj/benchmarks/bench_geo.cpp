#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "hq/geo.hpp"

namespace {

std::vector<hq::Community> synthetic_grid(int side) {
  std::vector<hq::Community> communities;
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      hq::Community c;
      c.id = "c" + std::to_string(row * side + col);
      c.name = "Block " + std::to_string(row) + "-" + std::to_string(col);
      double lat0 = 39.0 + row * 0.02, lon0 = 116.0 + col * 0.02;
      c.boundary.push_back(hq::Ring{{lat0, lon0},
                                    {lat0, lon0 + 0.02},
                                    {lat0 + 0.02, lon0 + 0.02},
                                    {lat0 + 0.02, lon0}});
      communities.push_back(std::move(c));
    }
  }
  return communities;
}

void PointInCommunity(benchmark::State& state) {
  auto communities = synthetic_grid(static_cast<int>(state.range(0)));
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> lat(39.0, 39.0 + state.range(0) * 0.02);
  std::uniform_real_distribution<double> lon(116.0, 116.0 + state.range(0) * 0.02);
  for (auto _ : state) {
    auto id = hq::point_in_community({lat(rng), lon(rng)}, communities);
    benchmark::DoNotOptimize(id);
  }
  state.SetItemsProcessed(state.iterations());
}

void FuzzyNameMatch(benchmark::State& state) {
  auto communities = synthetic_grid(16);
  hq::MatchPolicy policy;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> row(0, 15), col(0, 15);
  for (auto _ : state) {
    std::string probe = "Blok " + std::to_string(row(rng)) + "-" + std::to_string(col(rng));
    auto id = hq::match_name(probe, communities, policy);
    benchmark::DoNotOptimize(id);
  }
  state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(PointInCommunity)->Arg(8)->Arg(32);
BENCHMARK(FuzzyNameMatch);

BENCHMARK_MAIN();
