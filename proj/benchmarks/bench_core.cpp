#include <benchmark/benchmark.h>

#include <random>

#include "iet/flows.hpp"
#include "iet/golden.hpp"
#include "iet/growth.hpp"
#include "iet/interval_exchange.hpp"
#include "iet/metric.hpp"

namespace {

using namespace iet;

IntervalExchange random_iet(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> numer(1, 64);
    std::vector<Scalar> lengths;
    long total = 0;
    std::vector<long> raw;
    for (int i = 0; i < n; ++i) {
        raw.push_back(numer(rng));
        total += raw.back();
    }
    for (long v : raw) lengths.push_back(Scalar(v, static_cast<unsigned long>(total)));
    std::vector<int> images(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return IntervalExchange::canonicalize(Permutation(images), std::move(lengths));
}

void BM_Compose(benchmark::State& state) {
    std::mt19937_64 rng(7);
    IntervalExchange f = random_iet(rng, static_cast<int>(state.range(0)));
    IntervalExchange g = random_iet(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(f, g));
    }
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(32)->Arg(128);

void BM_Distance(benchmark::State& state) {
    std::mt19937_64 rng(11);
    IntervalExchange f = random_iet(rng, static_cast<int>(state.range(0)));
    IntervalExchange g = random_iet(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(f, g));
    }
}
BENCHMARK(BM_Distance)->Arg(8)->Arg(64);

void BM_GrowthPowers(benchmark::State& state) {
    Scalar t = (Scalar::sqrt_of(2) - Scalar(1)) / Scalar(4);
    Scalar s = (Scalar::sqrt_of(2) - Scalar(1)) / Scalar(3);
    IntervalExchange h =
        compose(IntervalExchange::rotation(t), restricted_rotation(s, Scalar(1, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(growth(h, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GrowthPowers)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GoldenDistance(benchmark::State& state) {
    IntervalExchange f = golden_fn(8);
    IntervalExchange id = IntervalExchange::identity();
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(f, id));
    }
}
BENCHMARK(BM_GoldenDistance);

} // namespace

BENCHMARK_MAIN();
