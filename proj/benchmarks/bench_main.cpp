#include "toric/classifier.hpp"
#include "toric/lp.hpp"
#include "toric/qw.hpp"
#include "toric/resolutions.hpp"

#include <benchmark/benchmark.h>

using namespace toric;

static void BM_HjExpand(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hj_expand(4817, 9973));
}
BENCHMARK(BM_HjExpand);

static void BM_ExactLp(benchmark::State& st) {
  LinearProgram lp;
  std::vector<int> x;
  for (int i = 0; i < 5; ++i) x.push_back(lp.add_var());
  for (int r = 0; r < 8; ++r) {
    LinearProgram::Terms t;
    for (int i = 0; i < 5; ++i) t.push_back({x[i], rat((r * 7 + i * 3) % 11 + 1, (i + r) % 3 + 1)});
    lp.add_le(t, rat(10 + r, 1));
  }
  LinearProgram::Terms obj;
  for (int i = 0; i < 5; ++i) obj.push_back({x[i], rat(i + 1)});
  lp.set_objective(obj);
  for (auto _ : st) benchmark::DoNotOptimize(lp.solve());
}
BENCHMARK(BM_ExactLp);

static void BM_ClassifyProbePoint(benchmark::State& st) {
  Polygon h = hirzebruch(3, rat(7, 2));
  for (auto _ : st) benchmark::DoNotOptimize(classify_point(h, {1, rat(1, 2)}));
}
BENCHMARK(BM_ClassifyProbePoint);

static void BM_ClassifySymmetricPoint(benchmark::State& st) {
  Polygon h = hirzebruch(3, rat(7, 2));
  for (auto _ : st) benchmark::DoNotOptimize(classify_point(h, {rat(3, 2), rat(7, 6)}));
}
BENCHMARK(BM_ClassifySymmetricPoint);

static void BM_ClassifyFlagPoint(benchmark::State& st) {
  Polygon p = sector_open(2, 3, 2);
  for (auto _ : st) benchmark::DoNotOptimize(classify_point(p, {2, 2}));
}
BENCHMARK(BM_ClassifyFlagPoint)->Unit(benchmark::kMillisecond);

static void BM_UnitPointSearch(benchmark::State& st) {
  Polygon a2 = finite_volume_a2(rat(3, 4), rat(1, 2));
  for (auto _ : st) benchmark::DoNotOptimize(search_unit_point(a2, {rat(9, 4), rat(7, 4)}));
}
BENCHMARK(BM_UnitPointSearch)->Unit(benchmark::kMillisecond);

static void BM_SectorGrid(benchmark::State& st) {
  Polygon s = sector(3, 7);
  for (auto _ : st) benchmark::DoNotOptimize(classify_grid(s, {0, 0, 4, 2}, rat(1, 8)));
}
BENCHMARK(BM_SectorGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
