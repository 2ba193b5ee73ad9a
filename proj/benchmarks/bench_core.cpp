#include <benchmark/benchmark.h>

#include "cyclo/equiv.hpp"
#include "cyclo/families.hpp"
#include "cyclo/grow.hpp"
#include "cyclo/spectra.hpp"

namespace {

void BM_CharPoly(benchmark::State& state) {
    const cyclo::Ring ring(-2);
    const cyclo::LGraph g = cyclo::t2k4(5, ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::char_poly(g));
    }
}
BENCHMARK(BM_CharPoly);

void BM_IsCyclotomic(benchmark::State& state) {
    const cyclo::Ring ring(-7);
    const cyclo::LGraph g = cyclo::sporadic("S_8*", ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::is_cyclotomic(g));
    }
}
BENCHMARK(BM_IsCyclotomic);

void BM_CanonicalKey(benchmark::State& state) {
    const cyclo::Ring ring(-7);
    const cyclo::LGraph g = cyclo::t2k4(4, ring, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::canonical_key(g));
    }
}
BENCHMARK(BM_CanonicalKey);

void BM_Extensions(benchmark::State& state) {
    const cyclo::Ring ring(-2);
    const cyclo::LGraph g = cyclo::chain(1, ring);
    const cyclo::GrowConfig cfg = cyclo::GrowConfig::full(ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::extensions(g, cfg));
    }
}
BENCHMARK(BM_Extensions);

void BM_MahlerMeasure(benchmark::State& state) {
    const cyclo::IntPolynomial p({1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::mahler_measure(p));
    }
}
BENCHMARK(BM_MahlerMeasure);

}  // namespace

BENCHMARK_MAIN();
