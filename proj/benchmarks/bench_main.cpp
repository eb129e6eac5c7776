#include <benchmark/benchmark.h>

#include "quadmap/green.hpp"
#include "quadmap/maps.hpp"
#include "quadmap/raster.hpp"
#include "quadmap/regions.hpp"

using namespace quadmap;

namespace {

const Params kP11{{1, 0}, {1, 0}};

void BM_ForwardStep(benchmark::State& state) {
  const Point3 w = Point3::from_complex({1.1, 0.4}, {0.7, -0.3}, {2.0, 0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_step(kP11, w));
  }
}
BENCHMARK(BM_ForwardStep);

void BM_Orbit(benchmark::State& state) {
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(kP11, w, n, Direction::Forward));
  }
}
BENCHMARK(BM_Orbit)->Arg(10)->Arg(40);

void BM_GreenPlus(benchmark::State& state) {
  const RegionConstants c = choose_constants(kP11);
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_plus(kP11, c, w, 1e-8, 100));
  }
}
BENCHMARK(BM_GreenPlus);

void BM_LiftStep(benchmark::State& state) {
  const ProjPoint v = ProjPoint::from_affine(Point3::from_complex(1e4, 1e4, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_step(kP11, v, Direction::Forward));
  }
}
BENCHMARK(BM_LiftStep);

void BM_RenderSlice(benchmark::State& state) {
  SliceSpec s;
  s.params = kP11;
  s.constants = choose_constants(kP11);
  s.mode = RasterMode::EscapeTimeForward;
  s.base = {{{0, 0}, {0, 0}, {1, 0}}};
  s.width = s.height = 10.0;
  s.pixels_w = s.pixels_h = static_cast<int>(state.range(0));
  s.horizon = 40;
  s.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_slice(s));
  }
}
BENCHMARK(BM_RenderSlice)->Args({32, 1})->Args({32, 4});

}  // namespace

BENCHMARK_MAIN();
