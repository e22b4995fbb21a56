#include <benchmark/benchmark.h>

#include <random>

#include "lexind/similarity.h"

namespace lexind::bench {
namespace {

ColumnSpacePtr Space(std::size_t n, std::size_t origins) {
  std::vector<ColumnSpace::Seed> seeds;
  std::vector<std::string> ids;
  for (std::size_t o = 0; o < origins; ++o) ids.push_back("D" + std::to_string(o));
  for (std::size_t i = 0; i < n; ++i) seeds.push_back({"s" + std::to_string(i), static_cast<int>(i % origins)});
  return std::make_shared<const ColumnSpace>(seeds, ids, WindowMode::kUnordered, 1);
}

std::vector<Cell> RandomCells(std::size_t n, std::size_t nnz, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Cell> cells;
  for (std::size_t col = 0; col < n; ++col) {
    if (rng() % n < nnz) cells.push_back({static_cast<std::uint32_t>(col), u(rng)});
  }
  return cells;
}

void BM_ScoreVectors(benchmark::State& state) {
  const auto metric = static_cast<Metric>(state.range(0));
  const std::size_t n = 3000;
  const std::size_t nnz = static_cast<std::size_t>(state.range(1));
  auto space = Space(n, 3);
  OriginWeights weights = MakeOriginWeights(*space, {{"D0", 1.0}, {"D1", 2.0}, {"D2", 0.5}});
  std::mt19937_64 rng(3);
  auto x = RandomCells(n, nnz, rng), y = RandomCells(n, nnz, rng);
  const auto xs = ComputeStats(x), ys = ComputeStats(y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreVectors(metric, x, xs, y, ys, &weights));
  }
  state.SetLabel(ToString(metric));
}
BENCHMARK(BM_ScoreVectors)
    ->ArgsProduct({{static_cast<int>(Metric::kCityblock), static_cast<int>(Metric::kCosine),
                    static_cast<int>(Metric::kDiceMin), static_cast<int>(Metric::kJaccardMin),
                    static_cast<int>(Metric::kLin), static_cast<int>(Metric::kNewDiceMin)},
                   {30, 300}});

}  // namespace
}  // namespace lexind::bench

BENCHMARK_MAIN();
