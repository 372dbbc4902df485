#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "freightstat/descriptive.hpp"
#include "freightstat/distributions.hpp"
#include "freightstat/fuzzy.hpp"
#include "freightstat/gof.hpp"
#include "freightstat/lp.hpp"
#include "freightstat/regression.hpp"
#include "freightstat/special_functions.hpp"

using namespace freightstat;

namespace {

std::vector<double> lognormal_values(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::lognormal_distribution<double> dist(1.35, 0.42);
    std::vector<double> values(n);
    for (double& v : values) v = dist(rng);
    return values;
}

void bm_summarize(benchmark::State& state) {
    const Sample sample(lognormal_values(static_cast<std::size_t>(state.range(0)), 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(summarize(sample));
    }
}
BENCHMARK(bm_summarize)->Arg(100)->Arg(10000);

void bm_fit_lognormal(benchmark::State& state) {
    const Sample sample(lognormal_values(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_mle(sample, Family::lognormal));
    }
}
BENCHMARK(bm_fit_lognormal)->Arg(100)->Arg(10000);

void bm_std_normal_cdf(benchmark::State& state) {
    double z = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(std_normal_cdf(z));
        z += 1e-4;
        if (z > 6.0) z = -6.0;
    }
}
BENCHMARK(bm_std_normal_cdf);

void bm_ks_test(benchmark::State& state) {
    const Sample sample(lognormal_values(static_cast<std::size_t>(state.range(0)), 3));
    const auto spec = fit_mle(sample, Family::lognormal).spec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ks_test(sample, spec, 0.05));
    }
}
BENCHMARK(bm_ks_test)->Arg(1000);

void bm_chi_square_gof(benchmark::State& state) {
    const Sample sample(lognormal_values(2000, 4));
    const auto spec = fit_mle(sample, Family::lognormal).spec;
    BinSpec bins{{0.01, 1, 2, 3, 4, 5, 6, 7, 8}, true};
    const auto hist = bin(sample, bins);
    const auto expected = expected_frequencies(spec, bins, sample.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_square_gof(hist, expected, 2, 0.05));
    }
}
BENCHMARK(bm_chi_square_gof);

void bm_general_ols(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(5);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<std::vector<double>> cols(p, std::vector<double>(n));
    for (auto& col : cols) {
        for (double& v : col) v = dist(rng);
    }
    std::vector<double> y(n);
    for (double& v : y) v = dist(rng);
    const Sample ys(y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(general_ols(cols, ys));
    }
}
BENCHMARK(bm_general_ols)->Args({200, 4})->Args({2000, 8});

void bm_fuzzy_fit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> x_dist(0.0, 10.0);
    std::vector<std::vector<double>> cols(2, std::vector<double>(n));
    for (auto& col : cols) {
        for (double& v : col) v = x_dist(rng);
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = 1.0 + 0.7 * cols[0][i] + 1.3 * cols[1][i] + x_dist(rng) * 0.2;
    }
    const Sample ys(y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(cols, ys, 0.9));
    }
}
BENCHMARK(bm_fuzzy_fit)->Arg(5)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
