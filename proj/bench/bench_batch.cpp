#include <benchmark/benchmark.h>

#include "inconic/batch.hpp"
#include "inconic/normal_form.hpp"

namespace {

using namespace inconic;

const ConvexQuad& ref_quad() {
  static const std::array<Point, 4> v{Point{0, 0}, Point{1, 0}, Point{3, 2}, Point{0, 1}};
  static const ConvexQuad q = validate_quad(std::span<const Point, 4>(v));
  return q;
}

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_SampleLocus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_locus(ref_quad(), static_cast<std::size_t>(state.range(1)), mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_GridMax(benchmark::State& state) {
  const NormalForm nf = normalize(ref_quad());
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_max_area_cubic(nf, static_cast<std::size_t>(state.range(1)), 0.0, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_SweepChord(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_chord(ref_quad(), static_cast<std::size_t>(state.range(1)), mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

// range(0): 0 serial, 1 parallel; range(1): problem size
BENCHMARK(BM_SampleLocus)->ArgsProduct({{0, 1}, {256, 4096}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridMax)->ArgsProduct({{0, 1}, {10000, 1000000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepChord)->ArgsProduct({{0, 1}, {200, 4096}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
