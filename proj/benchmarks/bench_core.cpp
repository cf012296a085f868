#include <benchmark/benchmark.h>

#include "dicke/circuit_synth.hpp"
#include "dicke/dicke_states.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/gates.hpp"

namespace {

void BM_ApplyControlledRotation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    dicke::StateVector psi(3, n);
    psi[0] = 1.0;
    const dicke::Gate gate = dicke::r_gate(1, 2, 0.7, n / 2, {{0, 2}, {n - 1, 0}});
    for (auto _ : state) {
        dicke::apply_in_place(psi, gate);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}
BENCHMARK(BM_ApplyControlledRotation)->Arg(6)->Arg(8)->Arg(10);

void BM_SynthesizeReduced(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const dicke::DickeSpec spec(3, n, 3 * n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dicke::build_U_simplified(spec).circuit.gates.size());
    }
}
BENCHMARK(BM_SynthesizeReduced)->Arg(4)->Arg(8)->Arg(16);

void BM_PrepareAndRun(benchmark::State &state) {
    const dicke::DickeSpec spec(2, static_cast<int>(state.range(0)), state.range(0));
    const dicke::Circuit circuit = dicke::build_U_simplified(spec).circuit;
    const dicke::StateVector ref = dicke::reference_state(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dicke::run(ref, circuit).norm_squared());
    }
}
BENCHMARK(BM_PrepareAndRun)->Arg(4)->Arg(6);

void BM_ClosedForm(benchmark::State &state) {
    const dicke::DickeSpec spec(2, static_cast<int>(state.range(0)), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dicke::closed_form_state(spec).norm_squared());
    }
}
BENCHMARK(BM_ClosedForm)->Arg(4)->Arg(6)->Arg(8);

void BM_EntropySweep(benchmark::State &state) {
    const dicke::DickeSpec spec(2, 50, 50);
    for (auto _ : state) {
        double total = 0.0;
        for (int l = 1; l < spec.n; ++l) {
            total += dicke::entropy_exact(spec, l);
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_EntropySweep);

} // namespace

BENCHMARK_MAIN();
