#include <benchmark/benchmark.h>

#include <cmath>

#include "fockpw/cutoff.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/paleywiener.hpp"
#include "fockpw/projection.hpp"

using namespace fockpw;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

CoefficientSeries template_series(int N) { return series_from(1, N, [](const MultiIndex& a) {
  return coeff_bound_flat(1.0, RadiusVector{1.0}, a); }); }

void BM_GridLogAbs(benchmark::State& st) {
  const auto F = template_series(40);
  GridSpec g;
  g.radius = 40.0;
  g.n_radial = 321;
  const auto pts = polar_grid(g, 1);
  for (auto _ : st) benchmark::DoNotOptimize(grid_log_abs(F, pts, mode(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(pts.size()));
}

void BM_WeightedSup(benchmark::State& st) {
  const auto F = template_series(40);
  GridSpec g;
  g.radius = 40.0;
  g.n_radial = 321;
  const auto pts = polar_grid(g, 1);
  const auto la = grid_log_abs(F, pts, Exec::serial);
  const Majorant M = majorant_for(OrderParam::flat(0.5), 1.25, 1);
  for (auto _ : st) benchmark::DoNotOptimize(weighted_sup(la, pts, M, mode(st)));
}

void BM_AxisMoments(benchmark::State& st) {
  const auto axis = CutoffAxis::trapezoid(1.0, 1.5);
  for (auto _ : st) benchmark::DoNotOptimize(axis_moment_logs(axis, 80, {}, mode(st)));
}

void BM_VarsigmaTable2d(benchmark::State& st) {
  const auto chi = RadialCutoff::indicator(RadiusVector{1.0, 2.0});
  for (auto _ : st) benchmark::DoNotOptimize(VarsigmaTable(chi, 40, {}, mode(st)));
}

}  // namespace

BENCHMARK(BM_GridLogAbs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedSup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxisMoments)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VarsigmaTable2d)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
