// Microbenchmarks for the hot paths: histogram construction, threshold
// search, histogram remapping, and the full sweep/detection pipeline.

#include <benchmark/benchmark.h>

#include "polarity/histogram.hpp"
#include "polarity/otsu.hpp"
#include "polarity/powerlaw.hpp"
#include "polarity/sweep.hpp"
#include "polarity/synth.hpp"

namespace {

polarity::GrayImage bench_image(int side) {
    polarity::SynthSpec spec = polarity::case_i_spec(17);
    spec.width = side;
    spec.height = side;
    return polarity::generate(spec);
}

void BM_BuildHistogram(benchmark::State& state) {
    const polarity::GrayImage img = bench_image(512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::build_histogram(img));
    }
}
BENCHMARK(BM_BuildHistogram)->Unit(benchmark::kMicrosecond);

void BM_OtsuThreshold(benchmark::State& state) {
    const polarity::Histogram h = polarity::build_histogram(bench_image(512));
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::otsu_threshold(h));
    }
}
BENCHMARK(BM_OtsuThreshold)->Unit(benchmark::kMicrosecond);

void BM_TransformHistogram(benchmark::State& state) {
    const polarity::Histogram h = polarity::build_histogram(bench_image(512));
    const polarity::Gamma gamma(2.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::transform_histogram(h, gamma));
    }
}
BENCHMARK(BM_TransformHistogram)->Unit(benchmark::kMicrosecond);

void BM_TransformImage(benchmark::State& state) {
    const polarity::GrayImage img = bench_image(512);
    const polarity::Gamma gamma(2.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::transform_image(img, gamma));
    }
}
BENCHMARK(BM_TransformImage)->Unit(benchmark::kMicrosecond);

void BM_SweepSequential(benchmark::State& state) {
    const polarity::Histogram h = polarity::build_histogram(bench_image(512));
    const auto grid = polarity::default_gamma_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::sweep_mbcv(h, grid, false));
    }
}
BENCHMARK(BM_SweepSequential)->Unit(benchmark::kMicrosecond);

void BM_SweepParallel(benchmark::State& state) {
    const polarity::Histogram h = polarity::build_histogram(bench_image(512));
    const auto grid = polarity::default_gamma_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::sweep_mbcv(h, grid, true));
    }
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMicrosecond);

void BM_DetectPolarity(benchmark::State& state) {
    const polarity::GrayImage img = bench_image(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarity::detect_polarity(img));
    }
}
BENCHMARK(BM_DetectPolarity)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
