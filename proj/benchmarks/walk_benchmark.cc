// Copyright 2026 The qwalk Authors
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

#include <benchmark/benchmark.h>

#include "qwalk/entanglement.h"
#include "qwalk/experiments.h"
#include "qwalk/walk.h"

using namespace qwalk;

static void BM_evolve_schmidt_series(benchmark::State &state) {
    auto seq = CoinSequence::parse("MMF");
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = schmidt_series({1.1, 0.7}, seq, steps);
        benchmark::DoNotOptimize(s.data());
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_evolve_schmidt_series)->Arg(20)->Arg(140)->Arg(400);

static void BM_dense_reference(benchmark::State &state) {
    auto seq = CoinSequence::parse("XXH");
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto d = dense_reference_evolve({1.1, 0.7}, seq, steps);
        benchmark::DoNotOptimize(d.vec.data());
    }
}
BENCHMARK(BM_dense_reference)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_average_schmidt(benchmark::State &state) {
    auto seq = CoinSequence::parse("MMF");
    for (auto _ : state) {
        auto traj = average_schmidt(seq, 140, static_cast<int>(state.range(0)), 1, 1);
        benchmark::DoNotOptimize(traj.points.data());
    }
}
BENCHMARK(BM_average_schmidt)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_grid_schmidt(benchmark::State &state) {
    auto seq = CoinSequence::parse("HHH");
    for (auto _ : state) {
        auto g = grid_schmidt(seq, 50, 37, 72, 1);
        benchmark::DoNotOptimize(g.values.data());
    }
}
BENCHMARK(BM_grid_schmidt)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
