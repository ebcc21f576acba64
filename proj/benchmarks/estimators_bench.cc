// Copyright 2026 The qfid Authors
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

#include "qfid/fidelity.h"

namespace {

struct Fixture {
    qfid::UnitaryGate u;
    qfid::Channel s;
};

Fixture make_fixture(size_t kraus_count) {
    qfid::Rng rng = qfid::make_stream(7);
    auto u = qfid::random_unitary(rng);
    return {u, qfid::random_cptp(rng, kraus_count)};
}

void BM_SixState(benchmark::State &state) {
    auto f = make_fixture(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_six(f.u, f.s).value);
    }
}
BENCHMARK(BM_SixState)->Arg(1)->Arg(4);

void BM_ThreeState(benchmark::State &state) {
    auto f = make_fixture(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_three(f.u, f.s, qfid::AxisSign::plus).value);
    }
}
BENCHMARK(BM_ThreeState);

void BM_PauliTrace(benchmark::State &state) {
    auto f = make_fixture(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_pauli(f.u, f.s).value);
    }
}
BENCHMARK(BM_PauliTrace);

void BM_Quadrature(benchmark::State &state) {
    auto f = make_fixture(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_quadrature(f.u, f.s).value);
    }
}
BENCHMARK(BM_Quadrature);

void BM_MonteCarlo(benchmark::State &state) {
    auto f = make_fixture(4);
    qfid::MonteCarloOptions options{state.range(0), 0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_mc(f.u, f.s, options).value);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

// Affine maps skip the Kraus sum.
void BM_SixStateAffine(benchmark::State &state) {
    auto f = make_fixture(4);
    qfid::Channel affine = qfid::to_affine(f.s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::avg_fidelity_six(f.u, affine).value);
    }
}
BENCHMARK(BM_SixStateAffine);

void BM_Diagnose(benchmark::State &state) {
    auto f = make_fixture(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfid::diagnose(f.s).cptp);
    }
}
BENCHMARK(BM_Diagnose);

}  // namespace

BENCHMARK_MAIN();
