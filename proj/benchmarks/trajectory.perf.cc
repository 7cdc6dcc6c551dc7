// Copyright 2026 The qarrow Authors
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

#include "benchmark/benchmark.h"

#include "qarrow/ftlab.h"
#include "qarrow/trajectory.h"

using namespace qarrow;

namespace {

MeasurementScheme continuous(int64_t index) {
    switch (index) {
        case 0:
            return MeasurementScheme::dispersive(1.0, 0.01);
        case 1:
            return MeasurementScheme::homodyne(1.0, 0.01);
        default:
            return MeasurementScheme::heterodyne(1.0, 0.01);
    }
}

void simulate_forward_bench(benchmark::State &state) {
    MeasurementScheme s = continuous(state.range(0));
    auto steps = static_cast<std::size_t>(state.range(1));
    Rng rng(3);
    for (auto _ : state) {
        Trajectory t = simulate_forward(PureQubitState::plus_x(), s, steps, rng, {.record_path = false});
        benchmark::DoNotOptimize(arrow_of_time(t));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.SetLabel(std::string(scheme_name(s.kind)));
}
BENCHMARK(simulate_forward_bench)->ArgsProduct({{0, 1, 2}, {100, 1000}});

void simulate_forward_recorded_bench(benchmark::State &state) {
    MeasurementScheme s = continuous(1);
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_forward(PureQubitState::plus_x(), s, 200, rng));
    }
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(simulate_forward_recorded_bench);

void backward_replay_bench(benchmark::State &state) {
    Rng rng(5);
    Trajectory t = simulate_forward(PureQubitState::plus_x(), continuous(2), 200, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(backward_replay(t));
    }
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(backward_replay_bench);

void estimate_ft_bench(benchmark::State &state) {
    MeasurementScheme s = continuous(0);
    EnsembleOptions options{.workers = static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_ft(s, PureQubitState::plus_x(), 100, 2000, 7, options));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(estimate_ft_bench)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
