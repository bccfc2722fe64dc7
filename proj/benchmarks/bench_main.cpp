#include <benchmark/benchmark.h>

#include <cmath>

#include "wrpoly/physics.hpp"
#include "wrpoly/quadrature.hpp"
#include "wrpoly/racah.hpp"
#include "wrpoly/special.hpp"
#include "wrpoly/wilson.hpp"

namespace {

const wr::WilsonParams kWilson{0.7, 0.2, 0.5, 0.3};

void BM_WilsonSeries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::wilson_series(n, 1.44, kWilson));
    }
}
BENCHMARK(BM_WilsonSeries)->Arg(10)->Arg(50);

void BM_WilsonRecursionTable(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::wilson_recursion(n_max, 1.44, kWilson));
    }
}
BENCHMARK(BM_WilsonRecursionTable)->Arg(100)->Arg(2000);

void BM_WilsonWeight(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::wilson_weight(1.3, kWilson));
    }
}
BENCHMARK(BM_WilsonWeight);

void BM_LogGamma(benchmark::State& state) {
    const wr::Complex z{-3.2, 7.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::log_gamma(z));
    }
}
BENCHMARK(BM_LogGamma);

void BM_ScatteringAmplitude(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::scattering_amplitude(1.3, kWilson));
    }
}
BENCHMARK(BM_ScatteringAmplitude);

void BM_RacahTable(benchmark::State& state) {
    const wr::RacahParams r = wr::make_racah_params(0.7, 10.3, 0.5, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::racah_table(r, wr::RacahForm::tilde));
    }
}
BENCHMARK(BM_RacahTable);

void BM_RacahGramDeviation(benchmark::State& state) {
    const wr::RacahParams r = wr::make_racah_params(0.7, 10.3, 0.5, 10);
    const wr::RacahTable table = wr::racah_normalize(r);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::racah_gram_deviation(table));
    }
}
BENCHMARK(BM_RacahGramDeviation);

void BM_SemiaxisQuadrature(benchmark::State& state) {
    const auto f = [](double y) { return y * y * std::exp(-2.0 * y); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::integrate_semiaxis(f, 1e-10, 2.0));
    }
}
BENCHMARK(BM_SemiaxisQuadrature);

void BM_WeightIntegral(benchmark::State& state) {
    const auto f = [](double y) { return wr::wilson_weight(y, kWilson); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(wr::integrate_semiaxis(f, 1e-8, 2.0));
    }
}
BENCHMARK(BM_WeightIntegral);

}  // namespace

BENCHMARK_MAIN();
