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

#include "qarrow/schemes.h"

using namespace qarrow;

namespace {

MeasurementScheme scheme_for(int64_t index) {
    switch (index) {
        case 0:
            return MeasurementScheme::two_outcome(0.2);
        case 1:
            return MeasurementScheme::dispersive(1.0, 0.01);
        case 2:
            return MeasurementScheme::homodyne(1.0, 0.01);
        default:
            return MeasurementScheme::heterodyne(1.0, 0.01);
    }
}

void sample_readout_bench(benchmark::State &state) {
    MeasurementScheme s = scheme_for(state.range(0));
    PureQubitState x = state_from_bloch({0.6, 0.0, 0.8});
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_readout(s, x, rng));
    }
    state.SetLabel(std::string(scheme_name(s.kind)));
}
BENCHMARK(sample_readout_bench)->DenseRange(0, 3);

void kraus_forward_bench(benchmark::State &state) {
    MeasurementScheme s = scheme_for(state.range(0));
    Readout r = s.kind == SchemeKind::TwoOutcome   ? Readout::binary(1)
                : s.kind == SchemeKind::Heterodyne ? Readout::complex({0.3, -0.2})
                                                   : Readout::real(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kraus_forward(s, r));
    }
    state.SetLabel(std::string(scheme_name(s.kind)));
}
BENCHMARK(kraus_forward_bench)->DenseRange(0, 3);

}  // namespace
