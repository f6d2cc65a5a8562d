// Copyright 2026 The assocmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "assocmem/assocmem.h"
#include "benchmark/benchmark.h"

using namespace assocmem;

namespace {

std::vector<BipolarVector> memories(size_t n, size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BipolarVector> out;
    for (size_t k = 0; k < m; k++) {
        out.push_back(random_bipolar(n, rng));
    }
    return out;
}

void BM_train(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    auto mem = memories(n, n / 7 + 1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(train(mem));
    }
}
BENCHMARK(BM_train)->Arg(100)->Arg(400);

void BM_recall_async(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    auto t = train(memories(n, n / 7 + 1, 2));
    std::mt19937_64 rng(3);
    auto x = random_bipolar(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recall_async(t, x));
    }
}
BENCHMARK(BM_recall_async)->Arg(100)->Arg(400);

void BM_enumerate_fixed_points(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    auto t = train(memories(n, 3, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_fixed_points(t));
    }
}
BENCHMARK(BM_enumerate_fixed_points)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_spread_full(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    auto mem = memories(n, n / 7 + 1, 5);
    auto t = train(mem);
    auto p = ProximityMatrix::uniform(n);
    StartAssignment start{{0, mem[0][0]}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(spread_full(t, p, start));
    }
}
BENCHMARK(BM_spread_full)->Arg(100)->Arg(400);

void BM_capacity_sweep_point(benchmark::State &state) {
    CapacityOptions options{100, {15}, 50, 6, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(capacity_experiment(options));
    }
}
BENCHMARK(BM_capacity_sweep_point)->Unit(benchmark::kMillisecond);

void BM_collapse_sample(benchmark::State &state) {
    AmplitudeVector amps({0.5, 0.5, 0.5, 0.5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(collapse_sample(amps, 7, 100000));
    }
}
BENCHMARK(BM_collapse_sample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
